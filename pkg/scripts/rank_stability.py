"""Top-degree b_mu as the rank r grows, for each lambda up to a weight.

Once r >= |lambda| the top coefficients settle at a_mu / 2^l(mu); below
that they are the same top part written in the <= r-part basis.
"""

import argparse
from fractions import Fraction

from okcas.expansion import verify_theorem
from okcas.okounkov import SpecializationParams
from okcas.partitions import key, length, partitions_up_to
from okcas.symfunc import coeffs_to_json_obj


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-weight", type=int, default=3)
    parser.add_argument("--max-rank", type=int, default=4)
    args = parser.parse_args()
    for lam in partitions_up_to(args.max_weight):
        if not lam:
            continue
        for r in range(max(1, length(lam)), args.max_rank + 1):
            report = verify_theorem(lam, SpecializationParams(2 * r + 1, r, Fraction(1, 2)))
            tag = "reduced" if report.reduced else "direct "
            print(f"{key(lam):>8} r={r} {tag} {'PASS' if report.passed else 'FAIL'} "
                  f"{coeffs_to_json_obj(report.observed)}")


if __name__ == "__main__":
    main()
