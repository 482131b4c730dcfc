"""Strong edge-coloring: validity, color lists, extensions, exact solving.

A strong edge-coloring is a proper vertex coloring of the conflict graph
(edges that see each other get distinct colors).  This module provides:

* validity checking with explicit violation reporting,
* per-edge color lists: the palette colors unused on edges an edge sees,
* a list-size-ordered greedy extension (sound whenever some ordering of
  the uncolored edges has the i-th list of size at least i),
* systems of distinct representatives via bipartite matching, with a
  certified violating subfamily when none exists,
* the erase-and-extend maneuver: uncolor chosen edges, then retry by
  same-color reuse, by SDR, or by plain greedy, in that order,
* an exact decision procedure (saturation-ordered branch and bound) and
  an exact minimum-palette computation built on it.

Everything is deterministic: ties break by smallest edge id, colors are
tried ascending, and certificates depend only on the input.
"""

from __future__ import annotations

import time
from typing import NamedTuple


class PartialColoring:
    """Palette size k plus a per-edge optional color (colors are 1..k)."""

    __slots__ = ("k", "colors")

    def __init__(self, k, colors):
        if k < 0:
            raise ValueError(f"palette size must be nonnegative, got {k}")
        for e, c in enumerate(colors):
            if c is not None and not (1 <= c <= k):
                raise ValueError(f"edge {e}: color {c} outside 1..{k}")
        self.k = k
        self.colors = list(colors)

    @classmethod
    def empty(cls, k, m):
        return cls(k, [None] * m)

    def copy(self):
        return PartialColoring(self.k, self.colors)

    def assigned(self):
        """Edge ids that carry a color, ascending."""
        return [e for e, c in enumerate(self.colors) if c is not None]

    def is_total(self):
        return all(c is not None for c in self.colors)

    def __eq__(self, other):
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self.k == other.k and self.colors == other.colors

    def __repr__(self):
        done = sum(1 for c in self.colors if c is not None)
        return f"PartialColoring(k={self.k}, {done}/{len(self.colors)} edges)"


class SetFamily(NamedTuple):
    """An ordered family of subsets of {1..k}."""

    k: int
    sets: tuple

    @classmethod
    def of(cls, k, sets):
        frozen = tuple(frozenset(s) for s in sets)
        for i, s in enumerate(frozen):
            if any(not (1 <= x <= k) for x in s):
                raise ValueError(f"set {i} leaves the universe 1..{k}")
        return cls(k, frozen)


def is_valid_strong_coloring(cg, c):
    """Check a (partial) coloring; returns (ok, violations).

    A violation is a triple (e, e2, color) with e < e2, both colored the
    same and seeing each other.  Colors outside 1..k raise ValueError.
    """
    if len(c.colors) != cg.n:
        raise ValueError(
            f"coloring covers {len(c.colors)} edges, graph has {cg.n}"
        )
    for e, col in enumerate(c.colors):
        if col is not None and not (1 <= col <= c.k):
            raise ValueError(f"edge {e}: color {col} outside 1..{c.k}")
    violations = []
    for e in range(cg.n):
        ce = c.colors[e]
        if ce is None:
            continue
        for e2 in cg.sees[e]:
            if e2 > e and c.colors[e2] == ce:
                violations.append((e, e2, ce))
    return (not violations), violations


def available_colors(cg, c, e):
    """The palette colors not used on any edge that e sees.

    The edge's own current color is not excluded (an edge never sees
    itself), so recoloring decisions can reuse it.
    """
    if not (0 <= e < cg.n):
        raise ValueError(f"invalid edge id {e}")
    used = {c.colors[e2] for e2 in cg.sees[e] if c.colors[e2] is not None}
    return set(range(1, c.k + 1)) - used


class ExtendResult(NamedTuple):
    ok: bool
    coloring: object  # PartialColoring on success, None otherwise
    ordering: tuple  # edge ids in the order they were colored
    failed_edge: object  # first edge found with an empty list, or None


def greedy_extend(cg, c, targets):
    """Color all target edges greedily, smallest list first.

    At each step the uncolored target with the smallest current list is
    colored with its smallest available color (ties on list size break by
    edge id).  If the targets can be ordered so that the i-th has at least
    i available colors, this procedure never gets stuck: coloring one edge
    shrinks each other list by at most one, so the sorted list sizes stay
    ahead of the positions.  On failure the first edge observed with an
    empty list is reported.
    """
    targets = list(dict.fromkeys(targets))
    for e in targets:
        if c.colors[e] is not None:
            raise ValueError(f"target edge {e} is already colored")
    out = c.copy()
    ordering = []
    remaining = set(targets)
    while remaining:
        best_e = None
        best_list = None
        for e in sorted(remaining):
            avail = available_colors(cg, out, e)
            if best_list is None or len(avail) < len(best_list):
                best_e, best_list = e, avail
        if not best_list:
            return ExtendResult(False, None, tuple(ordering), best_e)
        out.colors[best_e] = min(best_list)
        ordering.append(best_e)
        remaining.discard(best_e)
    return ExtendResult(True, out, tuple(ordering), None)


class SDRResult(NamedTuple):
    ok: bool
    reps: tuple  # one representative per set, aligned with the family
    violator: tuple  # indices I with |union of S_i| < |I|, or None
    union_size: object  # size of that union, or None


def hall_sdr(fam):
    """A system of distinct representatives, or a certified violator.

    Bipartite maximum matching (sets on the left, elements on the right,
    augmenting paths in set order, elements tried ascending).  When some
    set stays unmatched, the indices reachable from it by alternating
    paths form a family whose union is smaller than its size; that index
    set and the union size are returned as the violation certificate.
    """
    sets = [sorted(s) for s in fam.sets]
    match_of_elem = {}
    match_of_set = [None] * len(sets)

    def augment(i, seen):
        for x in sets[i]:
            if x in seen:
                continue
            seen.add(x)
            j = match_of_elem.get(x)
            if j is None or augment(j, seen):
                match_of_elem[x] = i
                match_of_set[i] = x
                return True
        return False

    unmatched = None
    for i in range(len(sets)):
        if not augment(i, set()):
            unmatched = i
            break
    if unmatched is None:
        return SDRResult(True, tuple(match_of_set), None, None)
    # Alternating reachability from the unmatched set: visit an element,
    # then continue from the set it is matched to.
    reach_sets = {unmatched}
    reach_elems = set()
    frontier = [unmatched]
    while frontier:
        i = frontier.pop()
        for x in sets[i]:
            if x in reach_elems:
                continue
            reach_elems.add(x)
            j = match_of_elem.get(x)
            if j is not None and j not in reach_sets:
                reach_sets.add(j)
                frontier.append(j)
    union = set()
    for i in reach_sets:
        union.update(sets[i])
    violator = tuple(sorted(reach_sets))
    assert len(union) < len(violator), "violator certificate must be valid"
    return SDRResult(False, None, violator, len(union))


class ExtensionOutcome(NamedTuple):
    ok: bool
    coloring: object  # PartialColoring on success, None otherwise
    strategy: object  # "same_color" | "sdr" | "greedy" | None
    diagnostics: dict


def erase_and_extend(cg, c, erase, targets):
    """Uncolor the erase edges, then color erase+targets by escalation.

    Strategies, in order; the first to produce a valid total assignment
    of the working set (erase plus targets) wins:

    1. same_color: find two erased edges that do not see each other and
       share an available color; give both that color, then greedy-extend
       the rest.  Pairs are tried in ascending id order, shared colors
       ascending.
    2. sdr: one distinct representative per working edge's list.  Distinct
       colors from the edges' own lists satisfy every constraint among the
       working edges and toward the fixed ones.
    3. greedy: list-size-ordered greedy over the working set.

    Failure returns diagnostics: per-strategy failure reasons and the
    final color lists after erasure.
    """
    erase = list(dict.fromkeys(erase))
    targets = list(dict.fromkeys(targets))
    for e in erase:
        if c.colors[e] is None:
            raise ValueError(f"erase edge {e} is not colored")
    for e in targets:
        if c.colors[e] is not None:
            raise ValueError(f"target edge {e} is already colored")
    base = c.copy()
    for e in erase:
        base.colors[e] = None
    work = sorted(set(erase) | set(targets))
    lists = {e: available_colors(cg, base, e) for e in work}
    diagnostics = {
        "lists": {e: sorted(lists[e]) for e in work},
        "attempts": [],
    }

    # Strategy 1: reuse one color on a mutually non-seeing erased pair.
    erase_sorted = sorted(erase)
    for idx1 in range(len(erase_sorted)):
        for idx2 in range(idx1 + 1, len(erase_sorted)):
            e1, e2 = erase_sorted[idx1], erase_sorted[idx2]
            if e2 in cg.sees[e1]:
                continue
            shared = lists[e1] & lists[e2]
            for col in sorted(shared):
                trial = base.copy()
                trial.colors[e1] = col
                trial.colors[e2] = col
                rest = [e for e in work if e not in (e1, e2)]
                res = greedy_extend(cg, trial, rest)
                if res.ok:
                    ok, _ = is_valid_strong_coloring(cg, res.coloring)
                    assert ok, "greedy extension produced a conflict"
                    return ExtensionOutcome(
                        True, res.coloring, "same_color", diagnostics
                    )
            diagnostics["attempts"].append(
                {
                    "strategy": "same_color",
                    "pair": [e1, e2],
                    "shared_colors": sorted(shared),
                }
            )

    # Strategy 2: distinct representatives over all working lists.
    fam = SetFamily.of(c.k, [lists[e] for e in work])
    sdr = hall_sdr(fam)
    if sdr.ok:
        trial = base.copy()
        for e, col in zip(work, sdr.reps):
            trial.colors[e] = col
        ok, _ = is_valid_strong_coloring(cg, trial)
        assert ok, "SDR assignment produced a conflict"
        return ExtensionOutcome(True, trial, "sdr", diagnostics)
    diagnostics["attempts"].append(
        {
            "strategy": "sdr",
            "violator": [work[i] for i in sdr.violator],
            "union_size": sdr.union_size,
        }
    )

    # Strategy 3: plain greedy over the working set.
    res = greedy_extend(cg, base, work)
    if res.ok:
        ok, _ = is_valid_strong_coloring(cg, res.coloring)
        assert ok, "greedy extension produced a conflict"
        return ExtensionOutcome(True, res.coloring, "greedy", diagnostics)
    diagnostics["attempts"].append(
        {"strategy": "greedy", "failed_edge": res.failed_edge}
    )
    return ExtensionOutcome(False, None, None, diagnostics)


class SolveResult(NamedTuple):
    status: str  # "SAT" | "UNSAT" | "TIMEOUT"
    coloring: object  # total PartialColoring when SAT, else None
    nodes: int
    time_ms: int


def k_colorable(cg, k, time_budget=10.0):
    """Decide whether the conflict graph admits a proper k-coloring.

    Saturation-ordered branch and bound: always branch on the uncolored
    edge seeing the most distinct colors, ties broken by smallest edge id;
    try its feasible colors ascending, capped at one beyond the highest
    color used so far, which breaks color-name symmetry without losing
    completeness.  The wall-clock budget is polled every 1024 nodes.
    """
    if k < 1:
        raise ValueError(f"palette size must be >= 1, got {k}")
    m = cg.n
    if m == 0:
        return SolveResult("SAT", PartialColoring.empty(k, 0), 0, 0)
    start = time.monotonic()
    colors = [0] * m  # 0 = uncolored, else 1..k
    # neighbor_colors[e][col] counts colored conflict neighbors with col.
    neighbor_colors = [[0] * (k + 1) for _ in range(m)]
    sat = [0] * m  # distinct colors among colored neighbors
    nodes = 0

    def pick():
        best = None
        best_sat = -1
        for e in range(m):
            if colors[e] == 0 and sat[e] > best_sat:
                best_sat = sat[e]
                best = e
        return best

    def assign(e, col):
        colors[e] = col
        for e2 in cg.sees[e]:
            nc = neighbor_colors[e2]
            nc[col] += 1
            if nc[col] == 1:
                sat[e2] += 1

    def unassign(e, col):
        colors[e] = 0
        for e2 in cg.sees[e]:
            nc = neighbor_colors[e2]
            nc[col] -= 1
            if nc[col] == 0:
                sat[e2] -= 1

    def solve(depth, max_used):
        nonlocal nodes
        nodes += 1
        if nodes % 1024 == 0 and time.monotonic() - start > time_budget:
            return "TIMEOUT"
        if depth == m:
            return "SAT"
        e = pick()
        cap = min(k, max_used + 1)
        nc = neighbor_colors[e]
        for col in range(1, cap + 1):
            if nc[col]:
                continue
            assign(e, col)
            verdict = solve(depth + 1, max(max_used, col))
            if verdict != "UNSAT":
                if verdict == "TIMEOUT":
                    unassign(e, col)
                return verdict
            unassign(e, col)
        return "UNSAT"

    verdict = solve(0, 0)
    elapsed = int((time.monotonic() - start) * 1000)
    if verdict == "SAT":
        out = PartialColoring(k, [colors[e] for e in range(m)])
        ok, _ = is_valid_strong_coloring(cg, out)
        assert ok, "solver emitted an invalid coloring"
        return SolveResult("SAT", out, nodes, elapsed)
    return SolveResult(verdict, None, nodes, elapsed)


def _greedy_clique(cg):
    """A maximal clique in the conflict graph, grown from high degree."""
    if cg.n == 0:
        return ()
    order = sorted(range(cg.n), key=lambda e: (-len(cg.sees[e]), e))
    clique = [order[0]]
    members = {order[0]}
    for e in order[1:]:
        se = set(cg.sees[e])
        if members <= se:
            clique.append(e)
            members.add(e)
    return tuple(sorted(clique))


def _greedy_coloring(cg):
    """First-fit coloring in descending conflict degree; an upper bound."""
    colors = [0] * cg.n
    order = sorted(range(cg.n), key=lambda e: (-len(cg.sees[e]), e))
    used_max = 0
    for e in order:
        taken = {colors[e2] for e2 in cg.sees[e] if colors[e2]}
        col = 1
        while col in taken:
            col += 1
        colors[e] = col
        used_max = max(used_max, col)
    return used_max, colors


class ChiResult(NamedTuple):
    status: str  # "OK" | "TIMEOUT"
    value: object  # exact minimum when OK, else None
    lower: int
    upper: int
    coloring: object  # certificate PartialColoring when OK
    nodes: int


def chi_s_exact(cg, time_budget=10.0):
    """The minimum palette size, with a certificate coloring.

    Brackets with a greedy clique (lower) and first-fit coloring (upper),
    then runs the exact decision procedure on increasing k.  On budget
    exhaustion the bracketing interval found so far is reported.
    """
    if cg.n == 0:
        return ChiResult("OK", 0, 0, 0, PartialColoring.empty(0, 0), 0)
    lb = len(_greedy_clique(cg))
    ub, greedy_cols = _greedy_coloring(cg)
    start = time.monotonic()
    total_nodes = 0
    k = lb
    while k < ub:
        remaining = time_budget - (time.monotonic() - start)
        if remaining <= 0:
            return ChiResult("TIMEOUT", None, lb, ub, None, total_nodes)
        res = k_colorable(cg, k, remaining)
        total_nodes += res.nodes
        if res.status == "SAT":
            return ChiResult("OK", k, k, k, res.coloring, total_nodes)
        if res.status == "TIMEOUT":
            return ChiResult("TIMEOUT", None, lb, ub, None, total_nodes)
        lb = k + 1
        k += 1
    cert = PartialColoring(ub, greedy_cols)
    ok, _ = is_valid_strong_coloring(cg, cert)
    assert ok, "greedy upper-bound coloring must be valid"
    return ChiResult("OK", ub, ub, ub, cert, total_nodes)
