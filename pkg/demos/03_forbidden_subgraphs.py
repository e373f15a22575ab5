"""Why the classification works: six forbidden patterns.

A connected graph outside the three families always contains one of six
small induced subgraphs (C4, C5, P5, and three 5-vertex graphs H1, H2, H3).
The principal submatrix of the distance matrix on such an occurrence has two
eigenvalues above the threshold, and by Cauchy interlacing the host graph
inherits lambda2 above the threshold too.  The witness subset is therefore a
certificate that anyone can re-check from the distance matrix alone.
"""

from distspec import (
    AboveThreshold,
    Graph,
    apsp,
    check_certificate,
    classify_structural,
    eigenvalues,
    forbidden_scan,
    principal_submatrix,
)


def main():
    # C6 is in none of the families
    g = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    dm = apsp(g)

    print("Forbidden-pattern occurrences in C_6:")
    for rec in forbidden_scan(g, dm):
        slots = ", ".join(f"{k}={v}" for k, v in rec.slots)
        extra = f" (free distances {slots})" if slots else ""
        print(f"  {rec.pattern} on vertices {rec.vertices}{extra}, "
              f"submatrix lambda2 = {rec.lambda2:.4f}")
    print()

    cert = classify_structural(g)
    assert isinstance(cert, AboveThreshold)
    print(f"Chosen witness: {cert.witness} "
          f"({cert.roots_above} distinct submatrix eigenvalues above theta)")
    sub = principal_submatrix(dm, cert.witness)
    print("Witness submatrix rows:")
    for row in sub:
        print("   " + " ".join(str(x) for x in row))
    print("Submatrix spectrum: "
          + " ".join(f"{v:.4f}" for v in eigenvalues(sub)))
    print(f"Full-graph lambda2: {eigenvalues(dm.d)[1]:.4f}")
    print(f"Certificate re-check from scratch: {check_certificate(g, cert)}")


if __name__ == "__main__":
    main()
