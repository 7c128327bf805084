"""Universal comeasuring presentations of the catalog algebras, per backend.

Prints reduced relations and truncated dimensions; symmetric backends also get the
Delta/eps table of the coacting bimonoid.
"""

import argparse

from tambara.catalog import backend, magma
from tambara.ncalg import truncated_basis
from tambara.universal import (bimonoid_structure, delta_table, reduced_relations,
                               universal_presentation)

CASES = [("vect", "dual_numbers"), ("vect", "kxk"), ("graded", "dual_numbers"),
         ("graded", "kxk"), ("dg", "dual_numbers"), ("left_yd", "dual_numbers"),
         ("vect", "truncated_poly")]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=4)
    args = ap.parse_args()
    d = args.degree
    for bk, alg in CASES:
        cat = backend(bk)
        a = magma(alg, cat)
        u = universal_presentation(a, a)
        dims = truncated_basis(u.presentation, d)[1]
        print(f"{alg} in {bk}: {u.presentation.ngens} generators, dims {dims}")
        for r in reduced_relations(u, d):
            print(f"    {r}")
        if cat.symmetric:
            delta, eps = delta_table(bimonoid_structure(u, d))
            for nm in u.presentation.names:
                print(f"    D({nm}) = {delta[nm]}   e({nm}) = {eps[nm]}")


if __name__ == "__main__":
    main()
