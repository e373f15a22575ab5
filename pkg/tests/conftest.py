import random
from fractions import Fraction

import pytest

from distspec import Graph


def random_connected_graph(rng, n, extra_p=0.3):
    """Random connected graph: random spanning tree plus extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        edges.add(tuple(sorted((order[i], order[rng.randrange(i)]))))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def charpoly_oracle(rows):
    """Independent exact char poly: rational Gaussian determinants of (xI - D)
    at n+1 integer points, then Lagrange interpolation."""
    n = len(rows)

    def det_at(x):
        a = [[Fraction((x if i == j else 0) - rows[i][j]) for j in range(n)]
             for i in range(n)]
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                f = a[r][col] * inv
                if f:
                    for c in range(col, n):
                        a[r][c] -= f * a[col][c]
        return det

    xs = list(range(n + 1))
    ys = [det_at(x) for x in xs]
    # Lagrange interpolation, coefficients low -> high
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                new[d] -= c * xj
                new[d + 1] += c
            basis = new
        scale = ys[i] / denom
        for d, c in enumerate(basis):
            coeffs[d] += c * scale
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in coeffs)


@pytest.fixture
def rng():
    return random.Random(987123)
