"""Isomorph-free streaming of small connected graphs.

Generation is by vertex augmentation: every connected graph on k+1 vertices
arises from a connected graph on k vertices by adding one vertex joined to a
nonempty subset of the old ones (order the vertices by BFS discovery to see
this), so extending every representative by every nonempty subset and
rejecting isomorphs level by level is exhaustive.

Isomorph rejection uses a canonical key: vertices are first partitioned by
iterated degree/neighborhood refinement, then the adjacency bitmask is
minimized over exactly the vertex orderings that respect the partition.
Refinement is isomorphism-invariant, so equal keys mean isomorphic graphs;
most graphs refine to singleton cells and cost one ordering.
"""

from __future__ import annotations

from itertools import permutations, product

from .graph import Graph

# Connected simple graphs on 1..9 vertices, one count per order.  The
# stream self-checks against these on exhaustion (full runs only).
CONNECTED_COUNTS = {
    1: 1,
    2: 1,
    3: 2,
    4: 6,
    5: 21,
    6: 112,
    7: 853,
    8: 11117,
    9: 261080,
}

MAX_N = 9


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _refine(n, adj):
    color = [adj[v].bit_count() for v in range(n)]
    while True:
        sig = [
            (color[v], tuple(sorted(color[u] for u in _bits(adj[v]))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if new == color:
            return color
        color = new


def _canonical_key(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    color = _refine(n, adj)
    cells = {}
    for v in range(n):
        cells.setdefault(color[v], []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    best = None
    for combo in product(*(permutations(cell) for cell in ordered)):
        pos = [0] * n
        i = 0
        for cell in combo:
            for v in cell:
                pos[v] = i
                i += 1
        key = 0
        for u, v in edges:
            a, b = pos[u], pos[v]
            if a > b:
                a, b = b, a
            key |= 1 << (a * n + b)
        if best is None or key < best:
            best = key
    return best


def enumerate_connected(n, max_edges=None):
    """Stream one representative per isomorphism class of connected graphs
    on exactly n vertices, optionally only those with at most max_edges
    edges.  Deterministic order.  The built-in ceiling is n = 9; larger
    corpora must be supplied externally.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"supported range is 1 <= n <= {MAX_N}, got {n}")
    if max_edges is not None and max_edges < n - 1:
        return
    if n == 1:
        yield Graph(1, [])
        return
    level = [()]  # edge tuples of the representatives on `size - 1` vertices
    for size in range(2, n + 1):
        last = size == n
        seen = set()
        out = []
        count = 0
        for edges in level:
            m = len(edges)
            # every later vertex adds at least one edge
            if max_edges is not None and m + 1 + (n - size) > max_edges:
                continue
            new = size - 1
            for mask in range(1, 1 << new):
                total = m + mask.bit_count()
                if max_edges is not None and total + (n - size) > max_edges:
                    continue
                cand = edges + tuple((u, new) for u in _bits(mask))
                key = _canonical_key(size, cand)
                if key in seen:
                    continue
                seen.add(key)
                if last:
                    count += 1
                    yield Graph(size, list(cand))
                else:
                    out.append(cand)
        if last and max_edges is None:
            assert count == CONNECTED_COUNTS[n], (
                f"enumeration self-check failed at n={n}: {count}"
            )
        level = sorted(out)
