"""Exact sparseness metrics: Ore degree, maximum average degree, bound formulas.

The maximum average degree mad(G) is the maximum of 2|E(S)|/|S| over
nonempty vertex subsets S.  It is computed exactly by binary search on the
density rho = |E(S)|/|S| with a max-flow feasibility test per candidate,
followed by exact rational recovery: achievable densities have denominator
at most n, and two distinct such fractions differ by at least 1/(n(n-1)),
so once the search interval is narrower than that the answer is the unique
small-denominator fraction inside, found by a Stern-Brocot style walk.

All rationals are ``fractions.Fraction``; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil


def ore_degree(g):
    """max d(u)+d(v) over edges uv; undefined (ValueError) for edgeless graphs."""
    if g.m == 0:
        raise ValueError("Ore degree is undefined for an edgeless graph")
    return max(g.degree(u) + g.degree(v) for u, v in g.edges)


def conjectured_bound(theta):
    """Conjectured strong chromatic index bound as a function of the Ore degree.

    Four branches by theta mod 4, each quadratic in t = ceil(theta/4).
    Defined for theta >= 5.
    """
    if theta < 5:
        raise ValueError(f"bound formula requires theta >= 5, got {theta}")
    t = ceil(theta / 4)
    r = theta % 4
    if r == 1:
        return 5 * t * t - 8 * t + 3
    if r == 2:
        return 5 * t * t - 6 * t + 2
    if r == 3:
        return 5 * t * t - 4 * t + 1
    return 5 * t * t


def mad_upper_bound(theta):
    """Largest mad value a graph with Ore degree theta can attain.

    2k(k+1)/(2k+1) for odd theta = 2k+1, and k for even theta = 2k.
    """
    if theta < 2:
        raise ValueError(f"requires theta >= 2, got {theta}")
    k = theta // 2
    if theta % 2:
        return Fraction(2 * k * (k + 1), 2 * k + 1)
    return Fraction(k)


def mad_bruteforce(g):
    """Exhaustive mad over all nonempty vertex subsets (guard: n <= 20).

    Returns (value, witness) with the witness sorted; ties resolved toward
    the first maximizer in subset enumeration order.
    """
    if g.n > 20:
        raise ValueError(f"brute-force mad guarded at n <= 20, got n={g.n}")
    if g.m == 0:
        raise ValueError("mad is undefined for an edgeless graph")
    adj_mask = [0] * g.n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    best = Fraction(-1)
    best_set = None
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        inside = 0
        mm = mask
        while mm:
            v = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            inside += (adj_mask[v] & mask).bit_count()
        # inside counts every internal edge twice, so inside/size is
        # already the average degree of the induced subgraph.
        val = Fraction(inside, size)
        if val > best:
            best = val
            best_set = mask
    witness = tuple(v for v in range(g.n) if best_set >> v & 1)
    return best, witness


class _Dinic:
    """Max flow with integer capacities (arc list with residual pairing)."""

    def __init__(self, n):
        self.n = n
        self.head = [[] for _ in range(n)]
        self.to = []
        self.cap = []

    def add(self, u, v, c):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s, t):
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                for a in self.head[u]:
                    v = self.to[a]
                    if self.cap[a] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def augment(u, limit):
                if u == t:
                    return limit
                while it[u] < len(self.head[u]):
                    a = self.head[u][it[u]]
                    v = self.to[a]
                    if self.cap[a] > 0 and level[v] == level[u] + 1:
                        pushed = augment(v, min(limit, self.cap[a]))
                        if pushed:
                            self.cap[a] -= pushed
                            self.cap[a ^ 1] += pushed
                            return pushed
                    it[u] += 1
                return 0

            while True:
                pushed = augment(s, 1 << 62)
                if not pushed:
                    break
                flow += pushed

    def min_cut_side(self, s):
        """Nodes reachable from s in the residual network after max_flow."""
        seen = [False] * self.n
        seen[s] = True
        queue = [s]
        for u in queue:
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def _dense_subset(g, rho):
    """A vertex set S with |E(S)|/|S| > rho, or None if none exists.

    Goldberg's network: source->v capacity m, v->sink capacity
    m + 2*rho - d(v), and capacity 1 both ways across each edge, all scaled
    by rho's denominator.  For the cut with source side {s} union S the
    capacity is b*(n*m - 2(|E(S)| - rho*|S|)), so the min cut dips below
    b*n*m exactly when some S beats density rho.
    """
    n, m = g.n, g.m
    a, b = rho.numerator, rho.denominator
    s, t = n, n + 1
    net = _Dinic(n + 2)
    for v in range(n):
        net.add(s, v, m * b)
        net.add(v, t, m * b + 2 * a - g.degree(v) * b)
    for u, v in g.edges:
        net.add(u, v, b)
        net.add(v, u, b)
    flow = net.max_flow(s, t)
    if flow >= n * m * b:
        return None
    side = net.min_cut_side(s)
    return tuple(v for v in range(n) if side[v])


def _simplest_in(lo, hi, lo_strict, hi_strict):
    """Least-denominator fraction x with lo < x <= hi (strictness per flags).

    Continued-fraction descent, equivalent to walking the Stern-Brocot tree:
    take the integer part if an admissible integer exists, else recurse on
    the reciprocal of the fractional window (which swaps the bounds and
    their strictness).  Requires a nonempty window with lo >= 0.
    """
    i = lo.numerator // lo.denominator
    k = i + 1 if (lo_strict or lo != i) else i
    if k < hi or (k == hi and not hi_strict):
        return Fraction(k)
    a = lo - i
    b = hi - i
    if a == 0:
        q = ceil(1 / b)
        if hi_strict and Fraction(1, q) == b:
            q += 1
        return i + Fraction(1, q)
    y = _simplest_in(1 / b, 1 / a, hi_strict, lo_strict)
    return i + 1 / y


def mad_exact(g):
    """Exact mad(g) with a witnessing vertex subset.

    Returns (value, witness): value = 2 * rho_star as a Fraction, witness a
    sorted tuple of vertex ids whose induced subgraph attains it.  Raises
    ValueError on an edgeless graph.
    """
    if g.m == 0:
        raise ValueError("mad is undefined for an edgeless graph")
    n, m = g.n, g.m
    # rho_star lies in (lo, hi]: the whole graph beats lo, nothing beats hi.
    # lo stays >= 0 so every v->t capacity m + 2*rho - d(v) is nonnegative.
    lo = max(Fraction(m, n) - 1, Fraction(0))
    hi = Fraction(m + 1)
    gap = Fraction(1, 2 * n * max(n - 1, 1))
    while hi - lo > gap:
        mid = (lo + hi) / 2
        if _dense_subset(g, mid) is not None:
            lo = mid
        else:
            hi = mid
    rho = _simplest_in(lo, hi, True, False)
    witness = _dense_subset(g, rho - gap)
    assert witness, "feasibility at rho - gap must produce a witness"
    return 2 * rho, tuple(sorted(witness))
