"""The three graph families with small second distance eigenvalue: builders,
closed-form distance characteristic polynomials, recognizers, and recovery of
the family parameters from an exact polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, DisconnectedError
from .spectra import (
    CharPoly,
    SQRT2_MINUS_2_MIN_POLY,
    poly_add,
    poly_div_exact,
    poly_mul,
    poly_pow,
    poly_trim,
    root_multiplicity,
)


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class Complete:
    n: int

    @property
    def order(self):
        return self.n

    def build(self):
        return build_complete(self.n)

    def describe(self):
        return f"K_n({self.n})"


@dataclass(frozen=True)
class PendantClique:
    """Clique of size s with a pendant edge on t of its vertices, 2 <= t <= s."""

    s: int
    t: int

    @property
    def order(self):
        return self.s + self.t

    def build(self):
        return build_pendant_clique(self.s, self.t)

    def describe(self):
        return f"Kst({self.s},{self.t})"


@dataclass(frozen=True)
class ConeOfCliques:
    """Universal apex joined to a disjoint union of k >= 2 cliques."""

    parts: tuple  # sorted descending

    @property
    def order(self):
        return sum(self.parts) + 1

    def build(self):
        return build_cone_of_cliques(self.parts)

    def describe(self):
        return "Cone(" + ",".join(str(p) for p in self.parts) + ")"


FamilyDescriptor = (Complete, PendantClique, ConeOfCliques)


# ---------------------------------------------------------------------------
# builders


def build_complete(n):
    if n < 1:
        raise ValueError("order must be positive")
    return Graph(n, tuple(((1 << n) - 1) & ~(1 << v) for v in range(n)))


def build_pendant_clique(s, t):
    """Vertices 0..s-1 form the clique; vertex s+i is pendant on vertex i."""
    if not 2 <= t <= s:
        raise ValueError(f"need 2 <= t <= s, got (s,t)=({s},{t})")
    edges = [(u, v) for u in range(s) for v in range(u + 1, s)]
    edges += [(i, s + i) for i in range(t)]
    return Graph.from_edges(s + t, edges)


def build_cone_of_cliques(parts):
    """Vertex 0 is the apex; cliques occupy consecutive blocks after it."""
    parts = tuple(sorted(parts, reverse=True))
    if len(parts) < 2:
        raise ValueError("need at least two cliques")
    if any(p < 1 for p in parts):
        raise ValueError("clique sizes must be positive")
    n = sum(parts) + 1
    edges = [(0, v) for v in range(1, n)]
    base = 1
    for p in parts:
        edges += [(base + i, base + j) for i in range(p) for j in range(i + 1, p)]
        base += p
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# closed-form characteristic polynomials


def closed_form_pendant_poly(s, t):
    """Distance char poly of the pendant-clique graph as an exact expansion.

    The two surd linear factors are only ever handled as their integer
    product x^2 + 4x + 2.
    """
    if not 2 <= t <= s:
        raise ValueError(f"need 2 <= t <= s, got (s,t)=({s},{t})")
    quad = SQRT2_MINUS_2_MIN_POLY  # x^2 + 4x + 2
    if s == t:
        tail = (2 - 2 * t - t * t, 4 - 4 * t, 1)
        poly = poly_mul(poly_pow(quad, t - 1), tail)
    else:
        tail = (2 - 2 * s - s * t, 6 - 4 * s - 2 * t - s * t, 5 - s - 3 * t, 1)
        poly = poly_mul(poly_pow((1, 1), s - t - 1),
                        poly_mul(poly_pow(quad, t - 1), tail))
    return CharPoly(poly)


def _cone_h_and_g(parts):
    """h = prod(x + n_i + 1); g = x*h - (2x+1) * sum_i n_i * h/(x+n_i+1)."""
    k = len(parts)
    h = (1,)
    for p in parts:
        h = poly_mul(h, (p + 1, 1))
    s = (0,)
    for i, p in enumerate(parts):
        partial = (1,)
        for j, q in enumerate(parts):
            if j != i:
                partial = poly_mul(partial, (q + 1, 1))
        term = tuple(p * c for c in partial)
        s = poly_add(s, term)
    g = poly_add(poly_mul((0, 1), h), tuple(-c for c in poly_mul((1, 2), s)))
    return h, g, k


@dataclass(frozen=True)
class ConeFactor:
    """The two integer factors carrying the cone family's spectral data."""

    h: tuple  # monic, degree k, roots -(n_i + 1)
    g: tuple  # monic, degree k + 1
    k: int


def cone_factor(parts):
    parts = tuple(sorted(parts, reverse=True))
    if len(parts) < 2:
        raise ValueError("need at least two cliques")
    h, g, k = _cone_h_and_g(parts)
    return ConeFactor(h, g, k)


def closed_form_cone_poly(parts):
    """Distance char poly of the cone of cliques, by exact polynomial arithmetic."""
    parts = tuple(sorted(parts, reverse=True))
    if len(parts) < 2:
        raise ValueError("need at least two cliques")
    n = sum(parts) + 1
    k = len(parts)
    _, g, _ = _cone_h_and_g(parts)
    poly = poly_mul(poly_pow((1, 1), n - k - 1), g)
    return CharPoly(poly)


# ---------------------------------------------------------------------------
# recognition


def recognize(g):
    """Structural membership test; returns a descriptor or None.

    The three predicates are mutually exclusive: a cone has a universal vertex
    whose removal disconnects the rest, a pendant-clique has >= 2 degree-1
    vertices hanging off distinct clique vertices, and a complete graph has
    neither.
    """
    if not g.is_connected():
        raise DisconnectedError("recognition is defined for connected graphs only")
    n = g.n
    degs = g.degrees()
    if all(d == n - 1 for d in degs):
        return Complete(n)
    apex = next((v for v in range(n) if degs[v] == n - 1), None)
    if apex is not None:
        parts = _clique_components(g, apex)
        if parts is not None and len(parts) >= 2:
            return ConeOfCliques(tuple(sorted(parts, reverse=True)))
        return None
    pendants = [v for v in range(n) if degs[v] == 1]
    t = len(pendants)
    if t >= 2:
        attach = [g.rows[v].bit_length() - 1 for v in pendants]
        if len(set(attach)) != t:
            return None
        clique = [v for v in range(n) if degs[v] > 1]
        s = len(clique)
        if s + t != n or not 2 <= t <= s:
            return None
        cmask = 0
        for v in clique:
            cmask |= 1 << v
        for v in clique:
            if g.rows[v] & cmask != cmask & ~(1 << v):
                return None
        if any(a not in clique for a in attach):
            return None
        return PendantClique(s, t)
    return None


def _clique_components(g, apex):
    """Sizes of the components of g - apex if each is a clique, else None."""
    n = g.n
    rest = ((1 << n) - 1) & ~(1 << apex)
    sizes = []
    remaining = rest
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.rows[low.bit_length() - 1] & rest
                f ^= low
            frontier = nxt & ~comp
            comp |= nxt & rest
        size = comp.bit_count()
        # every vertex of the component must see all others in it
        c = comp
        while c:
            low = c & -c
            v = low.bit_length() - 1
            if (g.rows[v] & comp).bit_count() != size - 1:
                return None
            c ^= low
        sizes.append(size)
        remaining &= ~comp
    return sizes


# ---------------------------------------------------------------------------
# parameter recovery from exact polynomials


def reconstruct_cone_partition(p):
    """Recover the clique sizes of a cone of cliques from its distance char poly.

    Uses the identity g = [x - k(2x+1)] h + (2x+1)(x+1) h', which determines
    the monic degree-k polynomial h by a triangular back-substitution; the
    clique sizes are then (root magnitudes of h) - 1.  Returns None unless the
    rebuilt closed form reproduces p exactly.
    """
    if not isinstance(p, CharPoly):
        p = CharPoly(poly_trim(p))
    n = p.degree
    if n < 3:
        return None
    mult = root_multiplicity(p, -1)
    k = n - 1 - mult
    if k < 2:
        return None
    g = poly_div_exact(p.coeffs, poly_pow((1, 1), mult))
    if g is None or len(g) != k + 2:
        return None
    # coefficient identity: g_i = (2i-1-2k) a_{i-1} + (3i-k) a_i + (i+1) a_{i+1}
    a = [None] * (k + 1)
    a[k] = Fraction(1)
    for i in range(k, 0, -1):
        up = a[i + 1] if i + 1 <= k else Fraction(0)
        num = Fraction(g[i]) - (3 * i - k) * a[i] - (i + 1) * up
        a[i - 1] = num / (2 * i - 1 - 2 * k)
    if g[0] != -k * a[0] + a[1]:
        return None
    if any(x.denominator != 1 for x in a):
        return None
    h = tuple(int(x) for x in a)
    parts = []
    rem = h
    for v in range(2, n + 1):
        while True:
            q = poly_div_exact(rem, (v, 1))
            if q is None:
                break
            rem = q
            parts.append(v - 1)
    if rem != (1,) or len(parts) != k:
        return None
    parts = tuple(sorted(parts, reverse=True))
    if closed_form_cone_poly(parts) != p:
        return None
    return parts


def pendant_params_from_poly(p):
    """Recover (s, t) of a pendant-clique graph from its distance char poly."""
    if not isinstance(p, CharPoly):
        p = CharPoly(poly_trim(p))
    n = p.degree
    quad = SQRT2_MINUS_2_MIN_POLY
    count = 0
    rem = p.coeffs
    while True:
        q = poly_div_exact(rem, quad)
        if q is None:
            break
        rem = q
        count += 1
    t = count + 1
    s = n - t
    if not 2 <= t <= s:
        return None
    if closed_form_pendant_poly(s, t) != p:
        return None
    return (s, t)


def descriptor_from_string(text):
    """Parse the serialized descriptor forms K_n(7), Kst(5,3), Cone(3,2,1)."""
    text = text.strip()
    head, _, body = text.partition("(")
    if not body.endswith(")"):
        raise ValueError(f"malformed descriptor: {text!r}")
    nums = [int(x) for x in body[:-1].split(",")]
    if head == "K_n" and len(nums) == 1:
        return Complete(nums[0])
    if head == "Kst" and len(nums) == 2:
        return PendantClique(nums[0], nums[1])
    if head == "Cone" and len(nums) >= 2:
        return ConeOfCliques(tuple(sorted(nums, reverse=True)))
    raise ValueError(f"malformed descriptor: {text!r}")
