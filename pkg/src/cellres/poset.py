"""Canonical fingerprints of face posets.

Two complexes get the same fingerprint exactly when their face posets are
isomorphic.  The poset is handed over as covering relations (cell ->
cells one dimension down); the fingerprint is the minimal canonical form
over a color-refinement search with individualization, which is exact at
the desk scale this package works at.
"""


def _refine(colors, down, up):
    while True:
        sig = {}
        for v, c in colors.items():
            sig[v] = (
                c,
                tuple(sorted(colors[u] for u in down[v])),
                tuple(sorted(colors[u] for u in up[v])),
            )
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in colors}
        if new == colors:
            return colors
        colors = new


def _canonical_form(colors, down, up, nodes):
    classes = {}
    for v, c in colors.items():
        classes.setdefault(c, []).append(v)
    split = sorted(c for c, vs in classes.items() if len(vs) > 1)
    if not split:
        order = sorted(nodes, key=lambda v: colors[v])
        pos = {v: i for i, v in enumerate(order)}
        return tuple(
            (colors[v], tuple(sorted(pos[u] for u in down[v]))) for v in order
        )
    target = split[0]
    best = None
    fresh = max(colors.values()) + 1
    for v in sorted(classes[target], key=lambda u: str(u)):
        trial = dict(colors)
        trial[v] = fresh
        trial = _refine(trial, down, up)
        form = _canonical_form(trial, down, up, nodes)
        if best is None or form < best:
            best = form
    return best


def poset_fingerprint(cover_down):
    """Canonical form of the poset given by covering relations.

    cover_down: {node: iterable of nodes covered by it}.  Nodes missing
    from any value list but present as keys or covered nodes are included.
    """
    nodes = set(cover_down)
    for vs in cover_down.values():
        nodes.update(vs)
    down = {v: sorted(cover_down.get(v, ()), key=str) for v in nodes}
    up = {v: [] for v in nodes}
    for v, vs in down.items():
        for u in vs:
            up[u].append(v)
    # initial color: height layer computed from the covering structure
    height = {}

    def h(v):
        if v not in height:
            height[v] = 1 + max((h(u) for u in down[v]), default=-1)
        return height[v]

    colors = {v: (h(v), len(down[v]), len(up[v])) for v in nodes}
    palette = {c: i for i, c in enumerate(sorted(set(colors.values())))}
    colors = _refine({v: palette[colors[v]] for v in nodes}, down, up)
    return _canonical_form(colors, down, up, sorted(nodes, key=str))


def complex_fingerprint(X):
    """Fingerprint of a cell complex's face poset (signs and labels are
    combinatorially irrelevant and ignored)."""
    cover = {}
    for key, _, _ in X.cells_with_labels():
        cover[key] = [face for face, _ in X.topo_boundary(key)]
    return poset_fingerprint(cover)
