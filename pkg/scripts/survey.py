#!/usr/bin/env python3
"""Survey the corpus polynomials: structural invariants and how the Euler
characteristic moves across the standard subgroups.

Usage: python scripts/survey.py
"""

import sys

from orbefun import (
    central_charge,
    determinant,
    efunction_basis,
    gf_group,
    grading_subgroup,
    milnor_number,
    parse_polynomial,
    sl_subgroup,
    subgroup,
    weights,
)
from orbefun.corpus import default_corpus


def main() -> int:
    seen = {}
    for entry in default_corpus():
        f = parse_polynomial(entry.poly)
        seen.setdefault(f.exponents, (entry.name.split("/")[0], f))

    print(f"{'family':<18}{'n':>3}{'mu':>6}{'detE':>6}{'c_hat':>8}"
          f"{'chi(triv)':>11}{'chi(G0)':>9}{'chi(SL)':>9}{'chi(Gf)':>9}")
    for name, f in seen.values():
        chis = []
        for G in (subgroup(f, ()), grading_subgroup(f), sl_subgroup(f), gf_group(f)):
            chis.append(efunction_basis(f, G).chi())
        qs = weights(f).q
        assert len(qs) == f.n
        print(f"{name:<18}{f.n:>3}{milnor_number(f):>6}{determinant(f):>6}"
              f"{str(central_charge(f)):>8}"
              f"{chis[0]:>11}{chis[1]:>9}{chis[2]:>9}{chis[3]:>9}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
