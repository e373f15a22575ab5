"""Undirected simple graphs: graph6 codec, BFS distances, induced-pattern
search, canonical labelling and small-order connected enumeration.

Vertices are 0..n-1 and adjacency is stored as one bitmask per vertex, which
keeps BFS, subset tests and canonical-form search fast enough for desk-scale
censuses (all connected graphs up to order 8).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class Graph6Error(ValueError):
    """Malformed graph6 text; carries the byte offset of the offending character."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DisconnectedError(ValueError):
    """Operation defined only for connected graphs received a disconnected one."""


class ContradictionError(AssertionError):
    """A structural claim that must hold was falsified; aborting loudly."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[u]`` has bit ``v`` set iff ``u ~ v``."""

    n: int
    rows: tuple

    @classmethod
    def from_edges(cls, n, edges):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self):
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def degree(self, u):
        return self.rows[u].bit_count()

    def degrees(self):
        return [r.bit_count() for r in self.rows]

    def edges(self):
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.rows[u] >> v & 1]

    def neighbors(self, u):
        row = self.rows[u]
        out = []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return out

    def is_connected(self):
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def relabeled(self, perm):
        """New graph where old vertex v becomes perm[v]."""
        rows = [0] * self.n
        for u in range(self.n):
            row = self.rows[u]
            nu = perm[u]
            while row:
                low = row & -row
                rows[nu] |= 1 << perm[low.bit_length() - 1]
                row ^= low
        return Graph(self.n, tuple(rows))

    def complement(self):
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ r) & ~(1 << u)
                                   for u, r in enumerate(self.rows)))


@dataclass(frozen=True)
class DistanceMatrix:
    """Shortest-path distances of a connected graph, in hops."""

    n: int
    d: tuple  # tuple of row tuples


# ---------------------------------------------------------------------------
# graph6 codec (standard format: bytes offset 63, upper triangle column-major)

def _g6_order(data):
    """Decode the order header, returning (n, index past the header)."""
    if data[0] != 126:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise Graph6Error("order byte out of range", 0)
        return n, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated long-form order header", len(data))
        n = 0
        for i in range(2, 8):
            b = data[i]
            if not 63 <= b <= 126:
                raise Graph6Error(f"byte {b} outside graph6 range", i)
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated long-form order header", len(data))
    n = 0
    for i in range(1, 4):
        b = data[i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range", i)
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text):
    """Decode one graph6 line into a Graph."""
    if isinstance(text, bytes):
        data = text
    else:
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character in graph6 input") from exc
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty graph6 input", 0)
    n, pos = _g6_order(data)
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(f"body too short, expected {nbytes} bytes", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing garbage after graph6 body", pos + nbytes)
    rows = [0] * n
    bit = 0
    for i in range(nbytes):
        b = data[pos + i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range", pos + i)
        group = b - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", pos + i)
                continue
            if group >> k & 1:
                u, v = _bit_to_pair(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def _bit_to_pair(bit):
    # column-major upper triangle: bits for column v are preceded by v(v-1)/2 bits
    v = 1
    while v * (v + 1) // 2 <= bit:
        v += 1
    u = bit - v * (v - 1) // 2
    return u, v


def write_graph6(g):
    """Encode a Graph as a graph6 string; round-trips bit-exactly."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [((n >> (6 * i)) & 63) + 63 for i in range(5, -1, -1)]
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.rows[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = group << 1 | b
        body.append(group + 63)
    return bytes(head + body).decode("ascii")


def read_graph6_lines(lines):
    """Yield graphs from an iterable of graph6 lines, skipping '>>' headers."""
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        line = line.strip()
        if not line or line.startswith(">>"):
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


# ---------------------------------------------------------------------------
# distances

def apsp(g):
    """All-pairs shortest paths by n BFS passes; raises on disconnected input."""
    n = g.n
    full = (1 << n) - 1
    dist = [[0] * n for _ in range(n)]
    for s in range(n):
        seen = 1 << s
        frontier = 1 << s
        d = 0
        row = dist[s]
        while frontier:
            f = frontier
            while f:
                low = f & -f
                row[low.bit_length() - 1] = d
                f ^= low
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
            d += 1
        if seen != full:
            raise DisconnectedError("distance matrix undefined for disconnected graphs")
    return DistanceMatrix(n, tuple(tuple(r) for r in dist))


def diameter(dm):
    return max(max(row) for row in dm.d)


def principal_submatrix(dm, subset):
    """Rows/columns of dm restricted to the given vertex subset (order preserved)."""
    verts = list(subset)
    if not verts:
        raise ValueError("subset must be nonempty")
    for v in verts:
        if not 0 <= v < dm.n:
            raise ValueError(f"vertex {v} out of range")
    return tuple(tuple(dm.d[u][v] for v in verts) for u in verts)


# ---------------------------------------------------------------------------
# fixed patterns (forbidden subgraphs and the 6-leaf star)

@dataclass(frozen=True)
class Pattern:
    name: str
    n: int
    edges: tuple

    def graph(self):
        return Graph.from_edges(self.n, self.edges)


PATTERNS = {
    "C4": Pattern("C4", 4, ((0, 1), (1, 2), (2, 3), (3, 0))),
    "C5": Pattern("C5", 5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))),
    "P5": Pattern("P5", 5, ((0, 1), (1, 2), (2, 3), (3, 4))),
    # K4 minus one edge
    "H1": Pattern("H1", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))),
    # path v1..v4 plus v5 adjacent to v2 only
    "H2": Pattern("H2", 5, ((0, 1), (1, 2), (2, 3), (1, 4))),
    # path v1..v4 plus v5 adjacent to v1 and v2
    "H3": Pattern("H3", 5, ((0, 1), (1, 2), (2, 3), (0, 4), (1, 4))),
    # star with 6 leaves
    "K16": Pattern("K16", 7, tuple((0, i) for i in range(1, 7))),
}


def _pattern_rows(p):
    rows = [0] * p.n
    for u, v in p.edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def find_induced(g, p, all_occurrences=False):
    """Search for induced occurrences of pattern p in g.

    Ordered-tuple backtracking with degree pruning; induced semantics, so
    adjacency and non-adjacency must both be respected.  Returns the first
    occurrence as a vertex tuple (or None), or with ``all_occurrences`` a
    sorted list of (vertex_set_tuple, labelled_tuple) pairs, one per set.
    """
    k = p.n
    if k > g.n:
        return [] if all_occurrences else None
    prow = _pattern_rows(p)
    pdeg = [r.bit_count() for r in prow]
    gdeg = g.degrees()
    assign = [0] * k
    found = {}

    def extend(i, used):
        for v in range(g.n):
            if used >> v & 1 or gdeg[v] < pdeg[i]:
                continue
            ok = True
            grow = g.rows[v]
            for j in range(i):
                if (grow >> assign[j] & 1) != (prow[i] >> j & 1):
                    ok = False
                    break
            if not ok:
                continue
            assign[i] = v
            if i + 1 == k:
                occ = tuple(assign)
                if not all_occurrences:
                    return occ
                key = tuple(sorted(occ))
                if key not in found:
                    found[key] = occ
            else:
                res = extend(i + 1, used | 1 << v)
                if res is not None and not all_occurrences:
                    return res
        return None

    res = extend(0, 0)
    if all_occurrences:
        return sorted(found.items())
    return res


# ---------------------------------------------------------------------------
# canonical labelling (backtracking, max adjacency bitstring) and isomorphism

_ISO_MAX = 16


def _canonical_search(g):
    """Return (key, order): the maximal segment-tuple over admissible orderings
    and one ordering attaining it.  Segment at depth d is the adjacency of the
    newly placed vertex to the d already-placed ones, read as an integer."""
    n = g.n
    rows = g.rows
    if n == 1:
        return (), (0,)
    deg = [r.bit_count() for r in rows]
    start_key = [(deg[v], tuple(sorted((deg[u] for u in g.neighbors(v)), reverse=True)))
                 for v in range(n)]
    top = max(start_key)
    starts = [v for v in range(n) if start_key[v] == top]

    best_bits = None
    best_order = None

    def extend(order, mask, bits):
        nonlocal best_bits, best_order
        d = len(order)
        if d == n:
            if best_bits is None or bits > best_bits:
                best_bits = bits
                best_order = order
            return
        if d == 0:
            cands = starts
        else:
            cands = [v for v in range(n) if not mask >> v & 1]
        segs = []
        for v in cands:
            s = 0
            rv = rows[v]
            for u in order:
                s = s << 1 | (rv >> u & 1)
            segs.append((s, v))
        mx = max(s for s, _ in segs)
        nxt = bits + (mx,)
        if best_bits is not None:
            pref = best_bits[:d + 1]
            if nxt < pref:
                return
        seen_open = set()
        seen_closed = set()
        for s, v in segs:
            if s != mx:
                continue
            # interchangeable twins need only one branch
            o = rows[v]
            c = rows[v] | 1 << v
            if o in seen_open or c in seen_closed:
                continue
            seen_open.add(o)
            seen_closed.add(c)
            extend(order + (v,), mask | 1 << v, nxt)

    extend((), 0, ())
    return best_bits, best_order


def canonical_key(g):
    """Isomorphism-invariant key: equal keys iff isomorphic (any order)."""
    key, _ = _canonical_search(g)
    return (g.n,) + key


def canonical_graph(g):
    """Canonically relabelled copy of g."""
    _, order = _canonical_search(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabeled(perm)


def is_isomorphic(g1, g2):
    """Exact isomorphism test via canonical forms; supported up to order 16."""
    if g1.n > _ISO_MAX or g2.n > _ISO_MAX:
        raise ValueError(f"isomorphism testing supported only up to order {_ISO_MAX}")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_key(g1) == canonical_key(g2)


# ---------------------------------------------------------------------------
# connected-graph census for small orders

_ENUM_MAX = 8


@lru_cache(maxsize=None)
def _connected_reps(n):
    if n == 1:
        return (Graph(1, (0,)),)
    reps = {}
    for parent in _connected_reps(n - 1):
        prows = parent.rows
        # every connected graph of order n arises by attaching a vertex to a
        # connected graph of order n-1 (remove any non-cutvertex)
        for nbhd in range(1, 1 << (n - 1)):
            rows = [prows[u] | ((nbhd >> u & 1) << (n - 1)) for u in range(n - 1)]
            rows.append(nbhd)
            child = canonical_graph(Graph(n, tuple(rows)))
            reps[child.rows] = child
    return tuple(reps[k] for k in sorted(reps))


def enumerate_connected(n):
    """One representative per isomorphism class of connected graphs of order n.

    Deterministic order (sorted canonical forms); capped at order 8 — larger
    censuses must be ingested from graph6 files produced by an external
    generator.
    """
    if not 1 <= n <= _ENUM_MAX:
        raise ValueError(
            f"built-in enumeration is limited to 1 <= n <= {_ENUM_MAX}; "
            "for larger orders feed a graph6 file from an external generator")
    yield from _connected_reps(n)


def all_subsets_isomorphic_scan(g, p):
    """Brute-force oracle: does any |p|-subset of g induce a copy of p?

    Independent of find_induced: checks every subset by permutation search.
    Intended for small n only.
    """
    pg = p.graph()
    pedges = {frozenset(e) for e in pg.edges()}
    from itertools import permutations
    for subset in combinations(range(g.n), p.n):
        sub = {frozenset((a, b)) for a, b in combinations(subset, 2)
               if g.has_edge(a, b)}
        if len(sub) != len(pedges):
            continue
        for perm in permutations(range(p.n)):
            mapped = {frozenset((subset[perm[u]], subset[perm[v]]))
                      for u, v in pg.edges()}
            if mapped == sub:
                return True
    return False
