"""Named property suites behind the ``verify`` CLI subcommand.

Each suite re-derives one published claim from scratch (fixed reference
tables, closed forms against direct computation, pairwise distinctness,
parameter round trips) and returns per-check rows suitable for a pass/fail
table.
"""

from __future__ import annotations

from .families import (
    build_cone_of_cliques,
    build_pendant_clique,
    closed_form_cone_poly,
    closed_form_pendant_poly,
)
from .graphs import PATTERNS, apsp
from .scan import family_cross_check, partitions
from .spectra import (
    SQRT2_MINUS_2,
    Trichotomy,
    char_poly_exact,
    eigenvalues,
    lambda2_vs_threshold,
)

# reference lambda2 values for the forbidden-pattern distance completions;
# the (3,3,3) entry is -0.4384, confirmed by exact Sturm localization of the
# eigenvalue in (-0.4385, -0.4384] (a transposed-digit variant circulates)
P5_TABLE = {
    (3, 3, 3): -0.4384, (3, 2, 2): -0.3260, (3, 2, 3): 0.0000,
    (3, 3, 2): -0.3713, (2, 3, 3): -0.3713, (2, 3, 2): -0.1646,
    (2, 2, 2): -0.2909, (2, 2, 3): -0.3260,
}
H2_TABLE = {(3, 3): -0.5120, (2, 3): -0.3583, (3, 2): -0.3583, (2, 2): -0.2245}
H3_TABLE = {(3, 3): -0.5686, (2, 3): -0.3626, (3, 2): -0.3626, (2, 2): -0.3311}
FIXED_TABLE = {"C4": 0.0000, "C5": -0.3820, "H1": -0.5616, "P5": -0.5578}

TABLE_TOL = 5e-4


def p5_completion_matrix(a, b, c):
    return ((0, 1, 2, a, b),
            (1, 0, 1, 2, c),
            (2, 1, 0, 1, 2),
            (a, 2, 1, 0, 1),
            (b, c, 2, 1, 0))


def h2_completion_matrix(a, b):
    return ((0, 1, 2, a, 2),
            (1, 0, 1, 2, 1),
            (2, 1, 0, 1, 2),
            (a, 2, 1, 0, b),
            (2, 1, 2, b, 0))


def h3_completion_matrix(a, b):
    return ((0, 1, 2, a, 1),
            (1, 0, 1, 2, 1),
            (2, 1, 0, 1, 2),
            (a, 2, 1, 0, b),
            (1, 1, 2, b, 0))


def verify_lemma4():
    """Forbidden-pattern lambda2 tables (4 fixed graphs + 16 completions)."""
    rows = []
    for name, want in FIXED_TABLE.items():
        dm = apsp(PATTERNS[name].graph())
        got = eigenvalues(dm.d)[1]
        rows.append((f"lambda2(D({name}))", abs(got - want) <= TABLE_TOL,
                     f"got {got:.4f}, table {want:.4f}"))
    for (a, b, c), want in P5_TABLE.items():
        got = eigenvalues(p5_completion_matrix(a, b, c))[1]
        rows.append((f"P5 completion (a,b,c)=({a},{b},{c})",
                     abs(got - want) <= TABLE_TOL,
                     f"got {got:.4f}, table {want:.4f}"))
    for (a, b), want in H2_TABLE.items():
        got = eigenvalues(h2_completion_matrix(a, b))[1]
        rows.append((f"H2 completion (a,b)=({a},{b})",
                     abs(got - want) <= TABLE_TOL,
                     f"got {got:.4f}, table {want:.4f}"))
    for (a, b), want in H3_TABLE.items():
        got = eigenvalues(h3_completion_matrix(a, b))[1]
        rows.append((f"H3 completion (a,b)=({a},{b})",
                     abs(got - want) <= TABLE_TOL,
                     f"got {got:.4f}, table {want:.4f}"))
    return rows


def pendant_grid(order_max=14):
    for t in range(2, order_max // 2 + 1):
        for s in range(t, order_max - t + 1):
            if s + t <= order_max:
                yield s, t


def verify_lemma6(order_max=14):
    """Closed-form pendant-clique polynomial equals direct computation, exactly."""
    rows = []
    for s, t in pendant_grid(order_max):
        direct = char_poly_exact(apsp(build_pendant_clique(s, t)))
        closed = closed_form_pendant_poly(s, t)
        rows.append((f"Kst({s},{t}) closed form", closed == direct,
                     "exact equality" if closed == direct else
                     f"{closed.serialize()} != {direct.serialize()}"))
    return rows


def verify_lemma8(sum_max=11):
    """Closed-form cone polynomial equals direct computation, exactly."""
    rows = []
    for total in range(2, sum_max + 1):
        for parts in partitions(total):
            if len(parts) < 2:
                continue
            direct = char_poly_exact(apsp(build_cone_of_cliques(parts)))
            closed = closed_form_cone_poly(parts)
            rows.append((f"Cone{parts} closed form", closed == direct,
                         "exact equality" if closed == direct else
                         f"{closed.serialize()} != {direct.serialize()}"))
    return rows


def verify_corollary7(order_max=14, tol=1e-9):
    """lambda2 of every pendant-clique graph is sqrt(2)-2: exact Below verdict,
    float agreement, and the sign pattern of the cubic factor when s > t."""
    target = float(SQRT2_MINUS_2)
    rows = []
    for s, t in pendant_grid(order_max):
        p = closed_form_pendant_poly(s, t)
        verdict = lambda2_vs_threshold(p)
        lam2 = eigenvalues(apsp(build_pendant_clique(s, t)).d)[1]
        ok = verdict is Trichotomy.BELOW and abs(lam2 - target) <= tol
        detail = f"verdict {verdict.value}, lambda2 {lam2:.12f}"
        if s > t:
            def f(x):
                return (x ** 3 + (5 - s - 3 * t) * x ** 2
                        + (6 - 4 * s - 2 * t - s * t) * x + (2 - 2 * s - s * t))
            from fractions import Fraction
            signs_ok = (f(0) < 0 and f(Fraction(-2, 3)) < 0 and f(-1) == s - t > 0)
            ok = ok and signs_ok
            detail += f", cubic signs {'ok' if signs_ok else 'BAD'}"
        rows.append((f"Kst({s},{t}) lambda2 = sqrt2-2", ok, detail))
    return rows


def _cross_check_rows(n_max=14):
    res = family_cross_check(n_max)
    rows = [("family polynomials pairwise distinct + round trips "
             f"(orders <= {n_max}, {res['polynomials_checked']} checks)",
             res["ok"],
             "; ".join(res["violations"]) if res["violations"] else "no coincidences")]
    return rows


def verify_theorem9(n_max=14):
    return _cross_check_rows(n_max)


def verify_theorem10(n_max=14):
    return _cross_check_rows(n_max)


def verify_theorem11(n_max=14):
    return _cross_check_rows(n_max)


SUITES = {
    "lemma4": verify_lemma4,
    "lemma6": verify_lemma6,
    "lemma8": verify_lemma8,
    "corollary7": verify_corollary7,
    "theorem9": verify_theorem9,
    "theorem10": verify_theorem10,
    "theorem11": verify_theorem11,
}


def run_suite(name):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name]()
