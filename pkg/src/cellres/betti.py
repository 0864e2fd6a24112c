"""Ground-truth oracles: the Taylor complex, multigraded Betti numbers,
and the acyclicity criterion for labeled complexes.

The Taylor complex (full simplex on the generators, lcm labels) resolves
R/I for every monomial ideal, so the homology of its multidegree strands
computes Tor exactly; that is the arbiter every construction in this
package is compared against.

A labeled complex X supports a resolution of R/I iff for every b in the
lcm lattice the subcomplex of cells whose label divides b has vanishing
reduced homology.  Homology is checked over Q; a GF(p) run is used first
when allowed, which is sound in the only direction it is trusted: zero
homology mod p forces zero homology over Q.
"""

from collections import defaultdict
from itertools import combinations

from .chain import LabeledChainComplex, UNIT
from .errors import NonMonotoneLabels, TooManyGenerators
from .exact import ChainData, homology_ranks, is_exact
from .monomial import Monomial, lcm_of

TAYLOR_BOUND = 16


def taylor_complex(ideal, bound=TAYLOR_BOUND):
    """The full 2^k simplex with lcm labels, as a labeled chain complex.

    Resolves R/I; minimal only when no face's lcm equals a facet's.
    """
    k = ideal.k
    if k > bound:
        raise TooManyGenerators("%d generators exceed the bound %d" % (k, bound))
    n = ideal.n
    lcms = {(): Monomial.one(n)}
    basis = [[UNIT]]
    mdeg = [[Monomial.one(n)]]
    diff = [dict()]
    for size in range(1, k + 1):
        level = list(combinations(range(1, k + 1), size))
        for S in level:
            lcms[S] = lcm_of([ideal.gen(j) for j in S])
        basis.append(list(level))
        mdeg.append([lcms[S] for S in level])
        diff.append({})
    for size in range(1, k + 1):
        lower = {S: i for i, S in enumerate(basis[size - 1])}
        for c, S in enumerate(basis[size]):
            for pos, g in enumerate(S, start=1):
                rest = tuple(x for x in S if x != g)
                row = lower[rest] if size > 1 else 0
                sign = 1 if pos % 2 == 1 else -1
                diff[size][(row, c)] = (sign, lcms[S] // lcms[rest])
    return LabeledChainComplex(n, basis, mdeg, diff)


class TaylorSupport:
    """The Taylor complex as a cell complex for strand checking.

    Cells are the nonempty generator subsets.  Every divisibility strand
    is the full simplex on the generators dividing b: lcm(S) | b iff each
    member divides b.  The strand checker uses that to certify acyclicity
    without eliminating anything.
    """

    strands_are_full_simplices = True

    def __init__(self, ideal, bound=TAYLOR_BOUND):
        if ideal.k > bound:
            raise TooManyGenerators(
                "%d generators exceed the bound %d" % (ideal.k, bound)
            )
        self.ideal = ideal
        self._lcms = {}

    def label(self, key):
        if key not in self._lcms:
            self._lcms[key] = lcm_of([self.ideal.gen(j) for j in key])
        return self._lcms[key]

    def cells_with_labels(self):
        for size in range(1, self.ideal.k + 1):
            for S in combinations(range(1, self.ideal.k + 1), size):
                yield S, size - 1, self.label(S)

    def topo_boundary(self, key):
        if len(key) == 1:
            return []
        out = []
        for pos, g in enumerate(key, start=1):
            rest = tuple(x for x in key if x != g)
            out.append((rest, 1 if pos % 2 == 1 else -1))
        return out


class LabeledCellComplex:
    """Ad-hoc labeled complex from explicit cells and boundaries; handy for
    negative controls and external data."""

    def __init__(self, cells, boundary):
        # cells: {key: (dim, Monomial)}, boundary: {key: [(face, sign)]}
        self.cells = dict(cells)
        self.boundary = {k: list(v) for k, v in boundary.items()}

    def label(self, key):
        return self.cells[key][1]

    def cells_with_labels(self):
        for key in sorted(self.cells):
            dim, label = self.cells[key]
            yield key, dim, label

    def topo_boundary(self, key):
        return self.boundary.get(key, [])


def lcm_lattice(ideal):
    """All lcms of nonempty generator subsets: the closure of the
    generators under pairwise lcm."""
    current = {g for g in ideal.gens}
    frontier = set(current)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in list(current):
                m = a.lcm(b)
                if m not in current and m not in fresh:
                    fresh.add(m)
        current |= fresh
        frontier = fresh
    return sorted(current)


def _strand_chain(cells, boundaries, member):
    """ChainData of the cells in `member`, augmented so homology is reduced
    (the empty cell sits in degree -1)."""
    cells_by_deg = defaultdict(list)
    boundary = {}
    aug = ("",)  # sorts uniformly, cannot collide with cell keys
    cells_by_deg[-1].append(aug)
    for key, dim, _ in cells:
        if key not in member:
            continue
        cells_by_deg[dim].append(key)
        if dim == 0:
            boundary[key] = {aug: 1}
        else:
            boundary[key] = boundaries[key]
    return ChainData(cells_by_deg, boundary)


def check_cellular_resolution(X, ideal, prime=None, prefilter=True):
    """Does the labeled complex X support a resolution of R/I?

    Checks that the 0-cells are labeled exactly by the generators, that
    labels are monotone under the boundary, and that for every b in the
    lcm lattice the subcomplex of labels dividing b has zero reduced
    homology.  Returns (ok, failing multidegree or None).

    Distinct lattice points selecting the same cell set share one homology
    computation.
    """
    if getattr(X, "strands_are_full_simplices", False):
        # Every strand is the full simplex on the generators dividing b
        # (lcm(S) | b iff every member of S divides b), hence acyclic.
        # Only the vertex layer needs checking; it is emitted first.
        vertex_labels = []
        for _, dim, label in X.cells_with_labels():
            if dim > 0:
                break
            vertex_labels.append(label.e)
        gen_labels = sorted(g.e for g in ideal.gens)
        if sorted(vertex_labels) != gen_labels:
            return False, Monomial.one(ideal.n)
        return True, None
    cells = list(X.cells_with_labels())
    labels = {key: label for key, _, label in cells}
    boundaries = {}
    for key, dim, label in cells:
        faces = {}
        for face, sign in X.topo_boundary(key):
            if face not in labels:
                raise NonMonotoneLabels("face %r missing from the complex" % (face,))
            if not labels[face].divides(label):
                raise NonMonotoneLabels(
                    "label of %r does not divide label of %r" % (face, key)
                )
            faces[face] = sign
        boundaries[key] = faces
    vertex_labels = sorted(label.e for key, dim, label in cells if dim == 0)
    gen_labels = sorted(g.e for g in ideal.gens)
    if vertex_labels != gen_labels:
        return False, Monomial.one(ideal.n)
    if getattr(X, "strands_are_full_simplices", False):
        return True, None
    strands = {}
    for b in lcm_lattice(ideal):
        member = frozenset(key for key, label in labels.items() if label.divides(b))
        strands.setdefault(member, b)
    for member in sorted(strands, key=lambda m: (len(m), str(strands[m]))):
        strand = _strand_chain(cells, boundaries, member)
        ok, _ = is_exact(strand, prime=prime, prefilter=prefilter)
        if not ok:
            return False, strands[member]
    return True, None


class BettiTable:
    """Finitely supported table (homological degree, multidegree) -> rank."""

    def __init__(self, data, n):
        self.n = n
        self.data = {k: v for k, v in data.items() if v}

    def total(self, i):
        return sum(v for (d, _), v in self.data.items() if d == i)

    def totals(self):
        top = max((d for d, _ in self.data), default=0)
        return tuple(self.total(i) for i in range(top + 1))

    def by_total_degree(self):
        out = defaultdict(int)
        for (i, exps), v in self.data.items():
            out[(i, sum(exps))] += v
        return dict(out)

    def rows(self):
        """Deterministic (i, exponent tuple, value) rows."""
        return [
            (i, exps, self.data[(i, exps)])
            for (i, exps) in sorted(self.data)
        ]

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.data == other.data

    def __repr__(self):
        return "BettiTable(totals=%s)" % (self.totals(),)


def multigraded_betti(ideal, bound=TAYLOR_BOUND):
    """Tor of R/I against the residue field, from the Taylor complex.

    Tensoring the Taylor resolution with k keeps, in multidegree b, the
    faces whose lcm is exactly b; the surviving differential drops a
    generator only when the lcm is unchanged.  The homology of that strand
    is computed exactly over Q, bucket by bucket.
    """
    k = ideal.k
    if k > bound:
        raise TooManyGenerators("%d generators exceed the bound %d" % (k, bound))
    buckets = defaultdict(list)
    lcms = {(): Monomial.one(ideal.n)}
    for size in range(1, k + 1):
        for S in combinations(range(1, k + 1), size):
            lcms[S] = lcms[S[:-1]].lcm(ideal.gen(S[-1])) if size > 1 else ideal.gen(
                S[0]
            )
            buckets[lcms[S]].append(S)
    data = defaultdict(int)
    data[(0, Monomial.one(ideal.n).e)] = 1
    for b, faces in buckets.items():
        members = set(faces)
        cells_by_deg = defaultdict(list)
        boundary = {}
        for S in faces:
            cells_by_deg[len(S)].append(S)
            entries = {}
            for pos, g in enumerate(S, start=1):
                rest = tuple(x for x in S if x != g)
                if rest in members:
                    entries[rest] = 1 if pos % 2 == 1 else -1
            boundary[S] = entries
        h = homology_ranks(ChainData(cells_by_deg, boundary))
        for i, v in h.items():
            data[(i, b.e)] += v
    return BettiTable(dict(data), ideal.n)


def betti_from_resolution(cx):
    """Read Betti numbers off a (minimal) resolution's basis."""
    return BettiTable(cx.betti_by_multidegree(), cx.n)
