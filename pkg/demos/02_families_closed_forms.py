"""The three families with small second distance eigenvalue.

Exactly three kinds of connected graph have lambda2(D) below (or equal to)
the threshold (17 - sqrt(329))/2:

  * K_n, the complete graph;
  * K_s^t, a clique of size s with pendant edges on t of its vertices;
  * the cone over a disjoint union of k >= 2 cliques (a universal apex).

Each family has a closed-form distance characteristic polynomial, and the
family parameters can be read back off the polynomial alone.  This script
checks the closed forms against direct computation and runs the parameter
round trips.
"""

from distspec import (
    apsp,
    build_cone_of_cliques,
    build_pendant_clique,
    char_poly_exact,
    closed_form_cone_poly,
    closed_form_pendant_poly,
    pendant_params_from_poly,
    reconstruct_cone_partition,
    recognize,
)


def main():
    print("Pendant-clique closed form, (s,t) = (6,3):")
    direct = char_poly_exact(apsp(build_pendant_clique(6, 3)))
    closed = closed_form_pendant_poly(6, 3)
    print(f"  direct : {direct.pretty()}")
    print(f"  closed : {closed.pretty()}")
    print(f"  equal  : {direct == closed}")
    print(f"  recovered (s,t) from the polynomial: {pendant_params_from_poly(closed)}")
    print()

    parts = (4, 2, 2, 1)
    print(f"Cone of cliques, parts {parts}:")
    g = build_cone_of_cliques(parts)
    direct = char_poly_exact(apsp(g))
    closed = closed_form_cone_poly(parts)
    print(f"  order {g.n}, closed form equals direct: {direct == closed}")
    print(f"  recovered partition from the polynomial: "
          f"{reconstruct_cone_partition(closed)}")
    print()

    print("Structural recognition on a shuffled copy:")
    perm = [3, 0, 5, 1, 8, 2, 7, 4, 6, 9]
    print(f"  {recognize(g.relabeled(perm)).describe()}")
    print()
    print("The polynomial alone identifies the graph inside its family; the")
    print("distinctness of these polynomials across families is what makes")
    print("the graphs determined by their distance spectra.")


if __name__ == "__main__":
    main()
