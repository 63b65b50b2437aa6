#!/usr/bin/env python3
"""Survey the built-in catalog.

For each Boolean space and lantern in range: property-lattice size, the
axiom profile, symmetry-group order, and plane transitivity.  With
``--products``, the same core profile for the minimal and separated
products of every catalog pair that fits the atom budget.
"""

import argparse
import sys

import orthlab as O
from orthlab.axioms import (
    Orthocomplementation,
    check_boolean,
    check_covering_law,
    check_irreducible,
    check_orthomodular,
    find_compatible_orthocomplementation,
)
from orthlab.products import minimal_product, separated_product
from orthlab.statespace import property_lattice
from orthlab.symmetry import count_symmetries, is_plane_transitive


def yn(flag) -> str:
    return {True: "yes", False: "no", None: "-"}[flag]


def axiom_profile(ppl) -> dict:
    oc = find_compatible_orthocomplementation(ppl)
    has_oc = isinstance(oc, Orthocomplementation)
    return {
        "oc": has_oc,
        "om": check_orthomodular(ppl, oc).holds if has_oc else None,
        "covering": check_covering_law(ppl.cs).holds,
        "boolean": check_boolean(ppl.cs, oc).holds if has_oc else None,
        "irreducible": check_irreducible(ppl, oc).holds if has_oc else None,
    }


def survey_line(name: str, ppl, *, symmetries: bool) -> str:
    prof = axiom_profile(ppl)
    cols = [name, f"atoms={ppl.n}", f"elements={len(ppl.cs)}",
            f"oc={yn(prof['oc'])}", f"om={yn(prof['om'])}",
            f"covering={yn(prof['covering'])}", f"boolean={yn(prof['boolean'])}",
            f"irreducible={yn(prof['irreducible'])}"]
    if symmetries:
        cols.append(f"symmetries={count_symmetries(ppl)}")
        cols.append(f"plane-transitive={yn(is_plane_transitive(ppl).transitive)}")
    return "\t".join(cols)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--boolean-max", type=int, default=5,
                    help="largest Boolean space (default 5)")
    ap.add_argument("--lantern-max", type=int, default=3,
                    help="largest lantern MO_n (default 3)")
    ap.add_argument("--products", action="store_true",
                    help="also profile catalog products")
    ap.add_argument("--product-atoms", type=int, default=16,
                    help="atom budget for product pairs (default 16)")
    args = ap.parse_args()

    members = [(f"boolean:{n}", O.boolean_space(n))
               for n in range(1, args.boolean_max + 1)]
    members += [(f"mo:{n}", O.mo_lantern(n))
                for n in range(2, args.lantern_max + 1)]
    ppls = [(name, property_lattice(ss)) for name, ss in members]

    for name, ppl in ppls:
        print(survey_line(name, ppl, symmetries=True))

    if args.products:
        print()
        for name1, ss1 in members:
            for name2, ss2 in members:
                if ss1.n * ss2.n > args.product_atoms:
                    continue
                p1, p2 = property_lattice(ss1), property_lattice(ss2)
                print(survey_line(f"minimal({name1},{name2})",
                                  minimal_product(p1, p2), symmetries=False))
                print(survey_line(f"separated({name1},{name2})",
                                  property_lattice(separated_product(ss1, ss2)),
                                  symmetries=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
