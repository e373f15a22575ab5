"""Exact distance characteristic polynomials and algebraic root localization.

Everything the classification depends on is decided in exact arithmetic:
characteristic polynomials are integer vectors, threshold comparisons go
through Sturm sequences evaluated in a quadratic extension field, and floats
appear only in human-facing reports.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, sqrt

import numpy as np

from .graphs import DistanceMatrix

# ---------------------------------------------------------------------------
# dense integer/rational polynomial helpers, coefficients low -> high


def poly_trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return poly_trim(out)


def poly_neg(a):
    return tuple(-x for x in a)


def poly_scale(a, s):
    return poly_trim([x * s for x in a])


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_pow(a, e):
    out = (1,)
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def poly_deriv(a):
    if len(a) == 1:
        return (0,)
    return poly_trim([i * a[i] for i in range(1, len(a))])


def poly_degree(a):
    return len(a) - 1


def poly_divmod(a, b):
    """Quotient/remainder over the rationals."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    if b == [Fraction(0)]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = a[:]
    while len(r) >= len(b) and any(r):
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        c = r[-1] / b[-1]
        d = len(r) - len(b)
        q[d] = c
        for i, x in enumerate(b):
            r[i + d] -= c * x
        r.pop()
    return poly_trim(q), poly_trim(r if r else [Fraction(0)])


def poly_div_exact(a, b):
    """Exact division of integer polynomials; None if it does not divide."""
    q, r = poly_divmod(a, b)
    if any(r):
        return None
    if any(x.denominator != 1 for x in q):
        return None
    return tuple(int(x) for x in q)


def _content(a):
    g = 0
    for x in a:
        g = gcd(g, abs(int(x)))
    return g or 1


def poly_primitive(a):
    """Clear denominators and divide by the content, preserving sign."""
    if any(isinstance(x, Fraction) for x in a):
        from math import lcm
        denom = 1
        for x in a:
            denom = lcm(denom, Fraction(x).denominator)
        a = [int(Fraction(x) * denom) for x in a]
    else:
        a = [int(x) for x in a]
    c = _content(a)
    return poly_trim([x // c for x in a])


def poly_gcd(a, b):
    """Gcd of integer polynomials, returned primitive with positive leading sign."""
    a = poly_primitive(a)
    b = poly_primitive(b)
    while any(b):
        _, r = poly_divmod(a, b)
        a, b = b, (poly_primitive(r) if any(r) else (0,))
    if a[-1] < 0:
        a = poly_neg(a)
    return a


def poly_squarefree(a):
    """Product of distinct irreducible factors of a."""
    if poly_degree(a) <= 1:
        return poly_primitive(a)
    g = poly_gcd(a, poly_deriv(a))
    if poly_degree(g) == 0:
        return poly_primitive(a)
    q = poly_div_exact_frac(a, g)
    return poly_primitive(q)


def poly_div_exact_frac(a, b):
    q, r = poly_divmod(a, b)
    if any(r):
        raise ArithmeticError("expected exact polynomial division")
    return q


# ---------------------------------------------------------------------------
# quadratic extension scalars a + b*sqrt(rad), exact sign


@dataclass(frozen=True)
class QuadAlg:
    """Exact value a + b*sqrt(rad) with rational a, b and fixed radicand."""

    rad: int
    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, rad, a, b=0):
        return cls(rad, Fraction(a), Fraction(b))

    def _coerce(self, other):
        if isinstance(other, QuadAlg):
            if other.rad != self.rad:
                raise ValueError("mixed radicands")
            return other
        return QuadAlg(self.rad, Fraction(other), Fraction(0))

    def __add__(self, other):
        o = self._coerce(other)
        return QuadAlg(self.rad, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadAlg(self.rad, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        o = self._coerce(other)
        return QuadAlg(self.rad,
                       self.a * o.a + self.rad * self.b * o.b,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def sign(self):
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        d = a * a - self.rad * b * b
        if d == 0:
            return 0
        big_is_a = d > 0
        if big_is_a:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __float__(self):
        return float(self.a) + float(self.b) * sqrt(self.rad)


# the paper's three algebraic constants and their minimal polynomials
THETA = QuadAlg.of(329, Fraction(17, 2), Fraction(-1, 2))       # (17-sqrt329)/2
THETA_MIN_POLY = (-10, -17, 1)                                   # x^2 - 17x - 10
ONE_MINUS_SQRT3 = QuadAlg.of(3, 1, -1)
ONE_MINUS_SQRT3_MIN_POLY = (-2, -2, 1)                           # x^2 - 2x - 2
SQRT2_MINUS_2 = QuadAlg.of(2, -2, 1)
SQRT2_MINUS_2_MIN_POLY = (2, 4, 1)                               # x^2 + 4x + 2


def _poly_eval_quad(coeffs, x):
    acc = QuadAlg(x.rad, Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_at(coeffs, x):
    if x is None:  # +infinity
        lead = coeffs[-1]
        return (lead > 0) - (lead < 0)
    if isinstance(x, QuadAlg):
        return _poly_eval_quad(coeffs, x).sign()
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


class SturmChain:
    """Sturm chain of the square-free part; exact root counting in (t, +inf)."""

    def __init__(self, coeffs):
        p0 = poly_squarefree(coeffs)
        chain = [p0]
        if poly_degree(p0) >= 1:
            chain.append(poly_primitive(poly_deriv(p0)))
            while poly_degree(chain[-1]) >= 1:
                _, r = poly_divmod(chain[-2], chain[-1])
                if not any(r):
                    break
                chain.append(poly_primitive(poly_neg(r)))
        self.chain = chain

    def variations(self, x):
        signs = [s for s in (_sign_at(c, x) for c in self.chain) if s != 0]
        return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])

    def count_above(self, t):
        """Distinct real roots strictly greater than t (t itself excluded)."""
        return self.variations(t) - self.variations(None)


# ---------------------------------------------------------------------------
# characteristic polynomials


@dataclass(frozen=True)
class CharPoly:
    """Monic integer characteristic polynomial, coefficients low -> high."""

    coeffs: tuple

    def __post_init__(self):
        if self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0.0 if isinstance(x, float) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def serialize(self):
        """Exact dedup key: decimal coefficients, constant term first."""
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def deserialize(cls, text):
        return cls(tuple(int(t) for t in text.split(",")))

    def pretty(self, var="x"):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = f"{var}" if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def _as_rows(matrix):
    if isinstance(matrix, DistanceMatrix):
        return matrix.d
    return tuple(tuple(int(x) for x in row) for row in matrix)


def _check_symmetric(rows):
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix must be symmetric")
    return n


def _charpoly_int(rows, n):
    # Faddeev-LeVerrier; all divisions are exact over the integers
    a = [list(r) for r in rows]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cs = []
    for k in range(1, n + 1):
        am = [[sum(a[i][l] * m[l][j] for l in range(n)) for j in range(n)]
              for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        assert tr % k == 0
        ck = -(tr // k)
        cs.append(ck)
        for i in range(n):
            for j in range(n):
                m[i][j] = am[i][j] + (ck if i == j else 0)
    return cs


def _charpoly_np(rows, n):
    # int64 fast path; caller guarantees no overflow is possible
    a = np.array(rows, dtype=np.int64)
    m = np.eye(n, dtype=np.int64)
    cs = []
    for k in range(1, n + 1):
        am = a @ m
        tr = int(np.trace(am))
        assert tr % k == 0
        ck = -(tr // k)
        cs.append(ck)
        m = am + ck * np.eye(n, dtype=np.int64)
    return cs


def char_poly_exact(matrix):
    """Exact monic integer characteristic polynomial of a symmetric integer matrix."""
    rows = _as_rows(matrix)
    n = _check_symmetric(rows)
    if n == 0:
        raise ValueError("empty matrix")
    mx = max(abs(x) for row in rows for x in row)
    # safe int64 envelope for the fast path (entry bound << 2^63)
    if 2 <= n <= 8 and mx <= 7:
        cs = _charpoly_np(rows, n)
    else:
        cs = _charpoly_int(rows, n)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k, ck in enumerate(cs, start=1):
        coeffs[n - k] = ck
    return CharPoly(tuple(coeffs))


def eigenvalues(matrix):
    """All eigenvalues of a symmetric matrix, sorted descending (floats)."""
    rows = _as_rows(matrix)
    _check_symmetric(rows)
    vals = np.linalg.eigvalsh(np.array(rows, dtype=float))
    return [float(v) for v in vals[::-1]]


def lambda2_float(matrix):
    return eigenvalues(matrix)[1]


# ---------------------------------------------------------------------------
# exact threshold decisions


class Trichotomy(enum.Enum):
    BELOW = "below"
    EQUAL = "equal"
    ABOVE = "above"


def count_distinct_roots_above(p, t):
    """Distinct real roots of p strictly greater than t (QuadAlg or rational)."""
    coeffs = p.coeffs if isinstance(p, CharPoly) else poly_trim(p)
    return SturmChain(coeffs).count_above(t)


def poly_divides(d, p):
    coeffs = p.coeffs if isinstance(p, CharPoly) else p
    return poly_div_exact(coeffs, d) is not None


def lambda2_vs_threshold(p, chain=None):
    """Exact trichotomy of the second largest root against theta = (17-sqrt329)/2.

    Valid for distance char polys of connected graphs of order >= 2, where the
    largest root is simple and positive (Perron-Frobenius), so counting the
    distinct roots above theta settles lambda2.
    """
    if p.degree < 2:
        raise ValueError("need a polynomial of degree at least 2")
    if chain is None:
        chain = SturmChain(p.coeffs)
    count = chain.count_above(THETA)
    if count >= 2:
        return Trichotomy.ABOVE
    if poly_divides(THETA_MIN_POLY, p):
        return Trichotomy.EQUAL
    return Trichotomy.BELOW


def root_multiplicity(p, r):
    """Largest e with (x - r)^e dividing p, by repeated exact synthetic division."""
    coeffs = [Fraction(c) for c in (p.coeffs if isinstance(p, CharPoly) else p)]
    r = Fraction(r)
    mult = 0
    while len(coeffs) > 1:
        q = []
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * r + c
            q.append(acc)
        rem = q.pop()
        if rem != 0:
            break
        coeffs = list(reversed(q))
        mult += 1
    return mult


def power_sum_moment(p, k):
    """Newton-identity power sums of the roots for k in {1, 2}."""
    n = p.degree
    c_nm1 = p.coeffs[n - 1] if n >= 1 else 0
    if k == 1:
        return -c_nm1
    if k == 2:
        c_nm2 = p.coeffs[n - 2] if n >= 2 else 0
        return c_nm1 * c_nm1 - 2 * c_nm2
    raise ValueError("only moments 1 and 2 are supported")


@dataclass(frozen=True)
class SpectrumSummary:
    eigen: tuple
    lambda2_exact: Trichotomy


def summarize(matrix):
    """Floating spectrum plus the exact lambda2-vs-theta verdict."""
    rows = _as_rows(matrix)
    eig = eigenvalues(rows)
    p = char_poly_exact(rows)
    return SpectrumSummary(tuple(eig), lambda2_vs_threshold(p))
