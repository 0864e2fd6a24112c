"""Deterministic serializers: JSON for complexes and cell complexes,
CSV for Betti tables, OFF for low-dimensional geometry.

All output is byte-stable across runs: dictionaries are emitted with
sorted keys and every list is explicitly ordered.
"""

import json

from .chain import Symbol


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def _basis_entry(label):
    if isinstance(label, Symbol):
        return {"gen": label.gen, "alpha": list(label.alpha)}
    if isinstance(label, tuple):
        return {"face": list(label)}
    return {"label": str(label)}


def complex_to_json(cx):
    """Schema: ranks, per-degree basis, per-degree sparse entries
    [row, col, sign, exponents]."""
    diff = []
    for i in range(1, len(cx.basis)):
        entries = [
            [r, c, sign, list(coeff.e)]
            for (r, c), (sign, coeff) in cx.entries(i)
        ]
        diff.append({"deg": i, "entries": entries})
    return _dump(
        {
            "n": cx.n,
            "ranks": list(cx.ranks()),
            "basis": [[_basis_entry(b) for b in level] for level in cx.basis],
            "diff": diff,
        }
    )


def ek_complex_to_json(X):
    ids = {}
    cells = []
    ordered = sorted(X.cells, key=lambda key: (len(key[1]), key))
    for i, key in enumerate(ordered):
        ids[key] = i
    for key in ordered:
        cell = X.cells[key]
        cells.append(
            {
                "id": ids[key],
                "dim": cell.dim,
                "gen": cell.source,
                "alpha": list(cell.alpha),
                "simplices": [list(s.vertices) for s in cell.simplices],
                "orientations": list(cell.eps),
                "label": list(X.label(key).e),
                "boundary": [
                    [ids[t], sign, list(coeff.e)]
                    for t, sign, coeff in X.boundary.get(key, [])
                ],
            }
        )
    return _dump(
        {
            "n": X.ideal.n,
            "f_vector": list(X.f_vector()),
            "vertices": {
                str(j): list(e) for j, e in X.vertex_coordinates().items()
            },
            "cells": cells,
        }
    )


def hom_complex_to_json(X, ideal):
    ids = {}
    ordered = [cell for cell, _, _ in X.cells_with_labels()]
    for i, cell in enumerate(ordered):
        ids[cell] = i
    cells = []
    for cell in ordered:
        label = X.label(cell)
        cells.append(
            {
                "id": ids[cell],
                "dim": sum(len(b) for b in cell) - len(cell),
                "blocks": [list(b) for b in cell],
                "label": list(label.e),
                "boundary": [
                    [ids[face], sign, list((label // X.label(face)).e)]
                    for face, sign in X.topo_boundary(cell)
                ],
            }
        )
    return _dump({"n": ideal.n, "f_vector": list(X.f_vector()), "cells": cells})


def betti_to_csv(table):
    head = "i," + ",".join("e%d" % (i + 1) for i in range(table.n)) + ",value"
    lines = [head]
    for i, exps, value in table.rows():
        lines.append("%d,%s,%d" % (i, ",".join(map(str, exps)), value))
    return "\n".join(lines) + "\n"


def betti_to_json(table):
    return _dump(
        {
            "n": table.n,
            "totals": list(table.totals()),
            "entries": [
                {"i": i, "multidegree": list(exps), "value": v}
                for i, exps, v in table.rows()
            ],
        }
    )


def _project_coords(coords):
    """Drop coordinates constant across all points, then keep the first
    three (padding with zeros)."""
    if not coords:
        return [], []
    n = len(next(iter(coords.values())))
    varying = [
        i
        for i in range(n)
        if len({e[i] for e in coords.values()}) > 1
    ]
    kept = varying[:3]
    out = {}
    for key, e in coords.items():
        p = [e[i] for i in kept]
        out[key] = p + [0] * (3 - len(p))
    return kept, out


def _polygon_cycle(edges):
    """Order the vertices of a polygon given its boundary edges as pairs."""
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = sorted(adj)[0]
    cycle = [start]
    prev = None
    while True:
        nxts = [v for v in adj[cycle[-1]] if v != prev]
        if not nxts:
            break
        prev = cycle[-1]
        cycle.append(nxts[0])
        if cycle[-1] == start:
            return cycle[:-1]
    return cycle


def ek_complex_to_off(X):
    """OFF export of the vertex set and the 2-cell triangles."""
    coords = X.vertex_coordinates()
    kept, projected = _project_coords(coords)
    order = sorted(projected)
    pos = {j: i for i, j in enumerate(order)}
    faces = []
    for key in sorted(X.cells, key=lambda key: (len(key[1]), key)):
        cell = X.cells[key]
        if cell.dim != 2:
            continue
        for s in cell.simplices:
            faces.append([pos[v] for v in s.vertices])
    lines = [
        "OFF",
        "# projection kept 1-based coordinates: %s"
        % (",".join(str(i + 1) for i in kept) or "none"),
        "%d %d 0" % (len(order), len(faces)),
    ]
    for j in order:
        lines.append(" ".join(str(c) for c in projected[j]))
    for f in faces:
        lines.append("3 " + " ".join(map(str, f)))
    return "\n".join(lines) + "\n"


def hom_complex_to_off(X, ideal):
    """OFF export of the vertex cells and polygonal 2-cells."""
    verts = [cell for cell, dim, _ in X.cells_with_labels() if dim == 0]
    coords = {
        cell: ideal.gen(ideal.index_of(X.label(cell))).e for cell in verts
    }
    kept, projected = _project_coords(coords)
    order = sorted(projected)
    pos = {v: i for i, v in enumerate(order)}
    faces = []
    for cell, dim, _ in X.cells_with_labels():
        if dim != 2:
            continue
        edges = []
        for edge, _ in X.topo_boundary(cell):
            edges.append(tuple(_endpoints(edge)))
        cycle = _polygon_cycle(edges)
        faces.append([pos[v] for v in cycle])
    lines = [
        "OFF",
        "# projection kept 1-based coordinates: %s"
        % (",".join(str(i + 1) for i in kept) or "none"),
        "%d %d 0" % (len(order), len(faces)),
    ]
    for v in order:
        lines.append(" ".join(str(c) for c in projected[v]))
    for f in faces:
        lines.append("%d " % len(f) + " ".join(map(str, f)))
    return "\n".join(lines) + "\n"


def _endpoints(cell):
    """The vertex cells (tuples of singleton blocks) of a cell."""
    from itertools import product

    return [tuple((v,) for v in choice) for choice in product(*cell)]


def corpus_to_jsonl(items):
    lines = []
    for it in items:
        lines.append(
            json.dumps(
                {
                    "name": it.name,
                    "kind": it.kind,
                    "n": it.ideal.n,
                    "gens": [list(g.e) for g in it.ideal.gens],
                    "tags": {
                        k: (list(v) if isinstance(v, (list, tuple)) else v)
                        for k, v in sorted(it.tags.items())
                        if k != "edges"
                    },
                },
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    return "\n".join(lines) + "\n"
