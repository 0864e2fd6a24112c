"""Graded free chain complexes with monomial-entry differentials.

Basis elements are hashable labels; the resolutions built here use
Symbol(gen, alpha) labels, where alpha is a sorted subset of set(m_gen)
and the homological degree is |alpha| + 1.  Degree 0 always has the
single basis element UNIT (the ring itself), so the complexes resolve
R/I with d(m; {}) = m.

Every differential entry is a pair (sign, monomial); multidegree
homogeneity (column degree = coefficient * row degree) is checked by
validate() and d o d = 0 is checked, never assumed.
"""

from collections import defaultdict
from itertools import combinations
from typing import NamedTuple

from .errors import NonCommutingChainMap, NotLinearQuotients, NotRegular
from .ideals import check_regularity
from .monomial import Monomial


class Symbol(NamedTuple):
    gen: int  # 1-based generator index; 0 marks the ring itself
    alpha: tuple

    def __str__(self):
        if self.gen == 0:
            return "(1)"
        return "(m%d;{%s})" % (self.gen, ",".join(map(str, self.alpha)))


UNIT = Symbol(0, ())


class LabeledChainComplex:
    """Free modules F_0, F_1, ... with sparse monomial differentials.

    diff[i] maps (row, col) index pairs of F_{i-1} x F_i to (sign, coeff)
    with sign in {+1, -1} and coeff a Monomial.  diff[0] is empty.
    """

    def __init__(self, n, basis, mdeg, diff):
        self.n = n
        self.basis = [list(b) for b in basis]
        self.mdeg = [list(m) for m in mdeg]
        self.diff = [dict(d) for d in diff]
        while len(self.diff) < len(self.basis):
            self.diff.append({})
        self.index = [
            {label: i for i, label in enumerate(b)} for b in self.basis
        ]

    def ranks(self):
        return tuple(len(b) for b in self.basis)

    def top_degree(self):
        return len(self.basis) - 1

    def entries(self, i):
        """Sorted items of diff[i] for deterministic traversal."""
        return sorted(self.diff[i].items())

    def multidegree(self, i, pos):
        return self.mdeg[i][pos]

    def validate(self):
        """Multidegree homogeneity at every nonzero entry."""
        for i, d in enumerate(self.diff):
            for (r, c), (sign, coeff) in d.items():
                if sign not in (1, -1):
                    raise ValueError("sign %r at degree %d" % (sign, i))
                if self.mdeg[i][c] != coeff * self.mdeg[i - 1][r]:
                    raise ValueError(
                        "entry (%d,%d) in degree %d is inhomogeneous" % (r, c, i)
                    )
        return True

    def betti_by_multidegree(self):
        """Counts of basis elements per (degree, multidegree); for a minimal
        resolution these are the graded Betti numbers of R/I."""
        out = defaultdict(int)
        for i, ms in enumerate(self.mdeg):
            for m in ms:
                out[(i, m.e)] += 1
        return dict(out)


def check_dd_zero(cx):
    """Exact check that consecutive differentials compose to zero.

    Returns (True, None) or (False, (degree, row label, col label)) with the
    first failing entry in deterministic order.
    """
    for i in range(2, len(cx.basis)):
        by_col = defaultdict(list)
        for (r, c), e in cx.diff[i].items():
            by_col[c].append((r, e))
        lower_by_col = defaultdict(list)
        for (r2, c2), e in cx.diff[i - 1].items():
            lower_by_col[c2].append((r2, e))
        acc = defaultdict(lambda: defaultdict(int))
        for c, terms in by_col.items():
            for mid, (s1, m1) in terms:
                for r2, (s2, m2) in lower_by_col.get(mid, ()):
                    acc[(r2, c)][(m1 * m2).e] += s1 * s2
        bad = sorted(
            (r, c)
            for (r, c), poly in acc.items()
            if any(v for v in poly.values())
        )
        if bad:
            r, c = bad[0]
            return False, (i, cx.basis[i - 2][r], cx.basis[i][c])
    return True, None


def check_minimal(cx):
    """True iff no differential entry has a unit coefficient."""
    for d in cx.diff:
        for (_, _), (_, coeff) in d.items():
            if coeff.is_one():
                return False
    return True


def compare_up_to_degree_signs(c1, c2):
    """Entrywise equality of two complexes on the same bases, allowing one
    global sign per homological degree.

    Returns (True, {degree: sign}) or (False, reason).
    """
    if c1.ranks() != c2.ranks():
        return False, "ranks differ: %s vs %s" % (c1.ranks(), c2.ranks())
    for i in range(len(c1.basis)):
        if c1.basis[i] != c2.basis[i]:
            return False, "bases differ in degree %d" % i
        if c1.mdeg[i] != c2.mdeg[i]:
            return False, "multidegrees differ in degree %d" % i
    signs = {}
    for i in range(1, len(c1.basis)):
        d1, d2 = c1.diff[i], c2.diff[i]
        if set(d1) != set(d2):
            return False, "supports differ in degree %d" % i
        lam = None
        for key in sorted(d1):
            s1, m1 = d1[key]
            s2, m2 = d2[key]
            if m1 != m2:
                return False, "coefficients differ at %s in degree %d" % (key, i)
            ratio = s1 * s2
            if lam is None:
                lam = ratio
            elif ratio != lam:
                return False, "inconsistent signs within degree %d" % i
        signs[i] = lam if lam is not None else 1
    return True, signs


# -- Koszul complexes ---------------------------------------------------


def koszul_complex(variables, shift):
    """Exterior-algebra complex on the given variable indices, all
    multidegrees multiplied by `shift`.

    Basis labels in degree i are the sorted i-subsets of `variables`;
    d(beta) = sum over positions p (1-based) of (-1)^(p-1) x_{beta_p}
    (beta minus beta_p).
    """
    variables = tuple(sorted(variables))
    n = shift.n
    basis, mdeg, diff = [], [], []
    for i in range(len(variables) + 1):
        level = [tuple(c) for c in combinations(variables, i)]
        basis.append(level)
        mdeg.append(
            [
                shift * Monomial.from_support(beta, n)
                for beta in level
            ]
        )
        diff.append({})
    for i in range(1, len(variables) + 1):
        idx_lower = {b: p for p, b in enumerate(basis[i - 1])}
        for c, beta in enumerate(basis[i]):
            for p, t in enumerate(beta, start=1):
                rest = tuple(x for x in beta if x != t)
                sign = 1 if p % 2 == 1 else -1
                diff[i][(idx_lower[rest], c)] = (sign, Monomial.variable(t, n))
    return LabeledChainComplex(n, basis, mdeg, diff)


# -- chain maps and mapping cones ---------------------------------------


class ChainMap:
    """A degree-preserving map of complexes with (sign, monomial) entries.

    maps[i] sends F^source_i to F^target_i; keys are (target row index,
    source column index).
    """

    def __init__(self, source, target, maps):
        self.source = source
        self.target = target
        self.maps = [dict(m) for m in maps]
        while len(self.maps) < len(source.basis):
            self.maps.append({})

    def commutes(self):
        """Exact check of d_target o psi = psi o d_source."""
        src, tgt = self.source, self.target
        for i in range(1, len(src.basis)):
            acc = defaultdict(lambda: defaultdict(int))
            # psi o d_source
            for (r, c), (s1, m1) in src.diff[i].items():
                for (tr, sc), (s2, m2) in self.maps[i - 1].items():
                    if sc == r:
                        acc[(tr, c)][(m1 * m2).e] += s1 * s2
            # minus d_target o psi
            for (tr, sc), (s1, m1) in self.maps[i].items():
                if i < len(tgt.basis):
                    for (r2, c2), (s2, m2) in tgt.diff[i].items():
                        if c2 == tr:
                            acc[(r2, sc)][(m1 * m2).e] -= s1 * s2
            for poly in acc.values():
                if any(poly.values()):
                    return False
        return True


def mapping_cone(psi, relabel_shifted=None, check=True):
    """The cone of psi: G -> F, i.e. G[1] (+) F with differential
    d(g, f) = (-d_G g, psi g + d_F f).

    Basis labels from G are passed through `relabel_shifted` (default wraps
    them as ("cone", label)) so the two parts stay distinguishable.
    """
    if check and not psi.commutes():
        raise NonCommutingChainMap("chain map does not commute with differentials")
    G, F = psi.source, psi.target
    if relabel_shifted is None:
        relabel_shifted = lambda lbl: ("cone", lbl)
    top = max(len(F.basis), len(G.basis) + 1)
    basis, mdeg, diff = [], [], []
    g_off = []  # number of G[1] elements in each cone degree
    for i in range(top):
        g_part = G.basis[i - 1] if 1 <= i <= len(G.basis) else []
        f_part = F.basis[i] if i < len(F.basis) else []
        g_off.append(len(g_part))
        basis.append([relabel_shifted(l) for l in g_part] + list(f_part))
        mdeg.append(
            (G.mdeg[i - 1] if 1 <= i <= len(G.basis) else [])
            + (F.mdeg[i] if i < len(F.basis) else [])
        )
        diff.append({})
    for i in range(1, top):
        d = diff[i]
        # G[1] columns: -d_G into the G[1] block, psi into the F block
        if i - 1 < len(G.diff) and i >= 2:
            for (r, c), (s, m) in G.diff[i - 1].items():
                d[(r, c)] = (-s, m)
        if i - 1 < len(psi.maps):
            for (tr, sc), (s, m) in psi.maps[i - 1].items():
                d[(g_off[i - 1] + tr, sc)] = (s, m)
        # F columns: d_F shifted right/down by the G[1] block sizes
        if i < len(F.diff):
            for (r, c), (s, m) in F.diff[i].items():
                d[(g_off[i - 1] + r, g_off[i] + c)] = (s, m)
    return LabeledChainComplex(F.n, basis, mdeg, diff)


# -- resolutions from decomposition rules --------------------------------


class BRule:
    """The canonical decomposition function: first generator dividing."""

    def __init__(self, ideal):
        self.ideal = ideal

    def apply(self, j, t):
        """Index of b(x_t m_j)."""
        return self.ideal.decomp_b(self.ideal.gen(j).times_var(t))

    def tset(self, j, alpha):
        """Elements of alpha contributing rule terms (all of them for b)."""
        return alpha

    def permutations(self, j, alpha):
        """Chain orders glued into the cell of (m_j, alpha): all of them."""
        from itertools import permutations as _perms

        return _perms(alpha)


def symbol_basis(ideal):
    """Symbols (m; alpha), alpha a subset of set(m), graded by |alpha| + 1.

    Degree 0 is the ring itself (UNIT).
    """
    table = ideal.set_table()
    top = 1 + max((len(s) for s in table), default=0)
    basis = [[UNIT]]
    mdeg = [[Monomial.one(ideal.n)]]
    for i in range(1, top + 1):
        level = []
        for j in range(1, ideal.k + 1):
            for alpha in combinations(table[j - 1], i - 1):
                level.append(Symbol(j, alpha))
        basis.append(level)
        mdeg.append(
            [
                ideal.gen(s.gen) * Monomial.from_support(s.alpha, ideal.n)
                for s in level
            ]
        )
    return basis, mdeg


def symbol_differential(ideal, rule, sym):
    """Differential of one symbol under a decomposition rule.

    d(m; {}) = m.  For alpha = (j_1 < ... < j_p):
        d(m;alpha) = sum_i (-1)^i x_{j_i} (m; alpha - j_i)
                   - sum_{j_i in tset} (-1)^i (x_{j_i} m / m_g) (m_g; alpha - j_i)
    with m_g = rule(x_{j_i} m); a rule term whose target (m_g; alpha - j_i)
    is not a symbol (alpha - j_i not inside set(m_g)) is dropped.

    Returns {Symbol: (sign, coeff)}.
    """
    j, alpha = sym.gen, sym.alpha
    mj = ideal.gen(j)
    if not alpha:
        return {UNIT: (1, mj)}
    table = ideal.set_table()
    out = {}
    tset = set(rule.tset(j, alpha))
    for i, t in enumerate(alpha, start=1):
        rest = tuple(x for x in alpha if x != t)
        sign = 1 if i % 2 == 0 else -1
        out[Symbol(j, rest)] = (sign, Monomial.variable(t, ideal.n))
        if t in tset:
            g = rule.apply(j, t)
            if set(rest) <= set(table[g - 1]):
                coeff = mj.times_var(t) // ideal.gen(g)
                out[Symbol(g, rest)] = (-sign, coeff)
    return out


def resolution_from_rule(ideal, rule):
    """The full symbol-basis complex with the rule-driven differential."""
    basis, mdeg = symbol_basis(ideal)
    diff = [dict() for _ in basis]
    for i in range(1, len(basis)):
        idx_lower = {s: p for p, s in enumerate(basis[i - 1])}
        for c, sym in enumerate(basis[i]):
            for target, (sign, coeff) in symbol_differential(ideal, rule, sym).items():
                diff[i][(idx_lower[target], c)] = (sign, coeff)
    return LabeledChainComplex(ideal.n, basis, mdeg, diff)


def ht_resolution(ideal, require_regular=True):
    """Minimal free resolution of R/I for an ideal with linear quotients and
    a regular decomposition function, on the symbol basis."""
    if not ideal.has_linear_quotients():
        raise NotLinearQuotients(str(ideal))
    if require_regular:
        report = check_regularity(ideal)
        if not report.regular:
            raise NotRegular("witnesses: %s" % report.witnesses[:3])
    return resolution_from_rule(ideal, BRule(ideal))


def iterated_cone_resolution(ideal, rule=None, check=True):
    """Rebuild the resolution one generator at a time, as an explicit
    mapping cone of a Koszul complex onto the previous stage.

    Must agree entrywise with resolution_from_rule; exercised by tests.
    """
    if rule is None:
        rule = BRule(ideal)
    table = ideal.set_table()
    n = ideal.n
    m1 = ideal.gen(1)
    current = LabeledChainComplex(
        n,
        [[UNIT], [Symbol(1, ())]],
        [[Monomial.one(n)], [m1]],
        [{}, {(0, 0): (1, m1)}],
    )
    for step in range(2, ideal.k + 1):
        mj = ideal.gen(step)
        variables = table[step - 1]
        kos = koszul_complex(variables, mj)
        maps = []
        for i in range(len(kos.basis)):
            mp = {}
            for c, beta in enumerate(kos.basis[i]):
                if not beta:
                    mp[(current.index[0][UNIT], c)] = (1, mj)
                    continue
                tset = set(rule.tset(step, beta))
                for pos, t in enumerate(beta, start=1):
                    if t not in tset:
                        continue
                    g = rule.apply(step, t)
                    rest = tuple(x for x in beta if x != t)
                    if not set(rest) <= set(table[g - 1]):
                        continue
                    sign = 1 if pos % 2 == 1 else -1
                    coeff = mj.times_var(t) // ideal.gen(g)
                    target = Symbol(g, rest)
                    mp[(current.index[i][target], c)] = (sign, coeff)
            maps.append(mp)
        psi = ChainMap(kos, current, maps)
        current = mapping_cone(
            psi, relabel_shifted=lambda beta, s=step: Symbol(s, beta), check=check
        )
    return _sorted_symbol_complex(current)


def _sorted_symbol_complex(cx):
    """Reorder each degree's basis into canonical Symbol order."""
    perms = []
    for i, level in enumerate(cx.basis):
        order = sorted(range(len(level)), key=lambda p: level[p])
        perms.append(order)
    basis = [[cx.basis[i][p] for p in perm] for i, perm in enumerate(perms)]
    mdeg = [[cx.mdeg[i][p] for p in perm] for i, perm in enumerate(perms)]
    inv = [
        {old: new for new, old in enumerate(perm)} for perm in perms
    ]
    diff = [dict() for _ in basis]
    for i in range(1, len(basis)):
        for (r, c), e in cx.diff[i].items():
            diff[i][(inv[i - 1][r], inv[i][c])] = e
    return LabeledChainComplex(cx.n, basis, mdeg, diff)
