"""Graph representation, the distance-2 edge conflict relation, and I/O.

The central object is :class:`Graph`, an immutable simple undirected graph
with canonical vertex and edge indexing: vertices are ``0..n-1`` and edges
are stored as pairs ``(u, v)`` with ``u < v``, sorted lexicographically, so
edge ids are stable across runs.

Two edges *see* each other when they are at distance one or two in the line
graph: they share an endpoint, or a third edge is incident to both.  A
strong edge-coloring must give distinct colors to any two edges that see
each other, so coloring questions reduce to vertex coloring of the
:class:`ConflictGraph` built here.

I/O supports the short-form graph6 encoding (one graph per line) and a
plain edge-list text format.
"""

from __future__ import annotations


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class Graph:
    """Immutable simple undirected graph with canonical edge indexing.

    Vertices are the integers ``0..n-1``.  Edges are normalized to pairs
    ``(u, v)`` with ``u < v`` and sorted lexicographically; the position of
    a pair in :attr:`edges` is its edge id.
    """

    __slots__ = ("_n", "_edges", "_adj", "_edge_index", "_incident")

    def __init__(self, n, edges):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normalized = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        for i in range(1, len(normalized)):
            if normalized[i] == normalized[i - 1]:
                raise ValueError(f"duplicate edge {normalized[i]}")
        self._n = n
        self._edges = tuple(normalized)
        adj = [[] for _ in range(n)]
        incident = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self._edges):
            adj[u].append(v)
            adj[v].append(u)
            incident[u].append(eid)
            incident[v].append(eid)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._incident = tuple(tuple(a) for a in incident)
        self._edge_index = {e: i for i, e in enumerate(self._edges)}

    @property
    def n(self):
        """Number of vertices."""
        return self._n

    @property
    def m(self):
        """Number of edges."""
        return len(self._edges)

    @property
    def edges(self):
        """All edges as (u, v) pairs with u < v, in edge-id order."""
        return self._edges

    def neighbors(self, v):
        """Sorted neighbors of v."""
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def max_degree(self):
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_index

    def edge_id(self, u, v):
        """Edge id of (u, v); raises KeyError if the edge is absent."""
        if u > v:
            u, v = v, u
        return self._edge_index[(u, v)]

    def endpoints(self, e):
        """The pair (u, v) of edge id e."""
        return self._edges[e]

    def incident_edges(self, v):
        """Edge ids incident to v, ascending."""
        return self._incident[v]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


class ConflictGraph:
    """The *sees* relation of a host graph, as an explicit graph on edge ids.

    Vertex ``e`` of the conflict graph is edge ``e`` of the host; two
    vertices are adjacent exactly when the host edges see each other.
    """

    __slots__ = ("base", "sees")

    def __init__(self, base, sees):
        self.base = base
        self.sees = sees

    @property
    def n(self):
        """Number of conflict vertices (= host edge count)."""
        return len(self.sees)

    def degree(self, e):
        return len(self.sees[e])

    def __repr__(self):
        return f"ConflictGraph(edges={self.n})"


def edge_sees(g, e, e2):
    """True iff distinct edges e and e2 share an endpoint or are joined by an edge.

    This is the distance-1-or-2 relation in the line graph of ``g``.  An
    edge never sees itself.
    """
    m = g.m
    if not (0 <= e < m):
        raise ValueError(f"invalid edge id {e}")
    if not (0 <= e2 < m):
        raise ValueError(f"invalid edge id {e2}")
    if e == e2:
        return False
    a, b = g.endpoints(e)
    c, d = g.endpoints(e2)
    if a in (c, d) or b in (c, d):
        return True
    for x in (a, b):
        nx = g.neighbors(x)
        if c in nx or d in nx:
            return True
    return False


def build_conflict_graph(g):
    """Compute the full sees-relation of g as a :class:`ConflictGraph`.

    For edge e = (u, v), every edge that sees e is incident to some vertex
    of N(u) ∪ N(v) (the endpoints themselves included, since u ∈ N(v)), so
    the neighborhood is gathered by one sweep over that vertex set.
    """
    sees = []
    for e, (u, v) in enumerate(g.edges):
        near = set()
        ball = set(g.neighbors(u)) | set(g.neighbors(v))
        for x in ball:
            near.update(g.incident_edges(x))
        near.discard(e)
        sees.append(tuple(sorted(near)))
    return ConflictGraph(g, tuple(sees))


def delete_vertex(g, v):
    """Delete v and its incident edges; compact ids.

    Returns ``(h, mapping)`` where ``h`` has ``n-1`` vertices and exactly
    the edges of ``g`` avoiding ``v``, and ``mapping`` sends each surviving
    old vertex id to its new id (v itself is absent from the mapping).
    """
    if not (0 <= v < g.n):
        raise ValueError(f"invalid vertex id {v}")
    mapping = {}
    for old in range(g.n):
        if old == v:
            continue
        mapping[old] = old if old < v else old - 1
    edges = [
        (mapping[a], mapping[b]) for (a, b) in g.edges if a != v and b != v
    ]
    return Graph(g.n - 1, edges), mapping


def is_connected(g):
    """True when g has one component (graphs on <= 1 vertex count)."""
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for u in g.neighbors(stack.pop()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def parse_graph6(line):
    """Decode one short-form graph6 record (n ≤ 62, no ``>>graph6<<`` header).

    Raises :class:`Graph6Error` with the offending byte offset on malformed
    input: bad length field, characters outside the printable range
    63..126, truncation, trailing bytes, or nonzero padding bits.
    """
    if isinstance(line, bytes):
        data = line
    else:
        data = line.encode("ascii", errors="replace")
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty input", 0)
    first = data[0]
    if first == 126:
        raise Graph6Error("long-form length field not supported (n > 62)", 0)
    if not (63 <= first <= 125):
        raise Graph6Error(f"length byte {first} out of range", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 < nbytes:
        raise Graph6Error(
            f"truncated: need {nbytes} data bytes for n={n}, got {len(data) - 1}",
            len(data),
        )
    if len(data) - 1 > nbytes:
        raise Graph6Error("trailing bytes after graph data", 1 + nbytes)
    bits = []
    for i in range(nbytes):
        byte = data[1 + i]
        if not (63 <= byte <= 126):
            raise Graph6Error(f"data byte {byte} out of range", 1 + i)
        val = byte - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    for j in range(k, len(bits)):
        if bits[j]:
            raise Graph6Error("nonzero padding bits", 1 + j // 6)
    return Graph(n, edges)


def to_graph6(g):
    """Encode g in short-form graph6 (requires n ≤ 62)."""
    n = g.n
    if n > 62:
        raise ValueError(f"short-form graph6 requires n <= 62, got {n}")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text):
    """Parse the plain edge-list format.

    Lines hold ``u v`` with 0-based ids; blank lines and ``#`` comments are
    ignored; an optional first (non-comment) line ``n=<count>`` fixes the
    vertex count, otherwise n = 1 + max id.  Self-loops, duplicate edges,
    and negative ids are rejected with the line number.
    """
    n_declared = None
    edges = []
    seen = set()
    first_content = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if first_content and line.startswith("n="):
            try:
                n_declared = int(line[2:])
            except ValueError:
                raise ValueError(f"line {lineno}: bad vertex count {line!r}")
            if n_declared < 0:
                raise ValueError(f"line {lineno}: negative vertex count")
            first_content = False
            continue
        first_content = False
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer id in {raw!r}")
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex id")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    n = (1 + max(max(e) for e in edges)) if edges else 0
    if n_declared is not None:
        if n > n_declared:
            raise ValueError(
                f"edge id {n - 1} exceeds declared vertex count {n_declared}"
            )
        n = n_declared
    return Graph(n, edges)
