"""Print b_mu for every lambda up to a given weight, one JSON line per run.

    python scripts/expansion_table.py --max-weight 3 --n 5 --r 2 --s 1/2
"""

import argparse

from okcas.exactpoly import to_rational
from okcas.expansion import expand
from okcas.okounkov import SpecializationParams
from okcas.partitions import partitions_up_to


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-weight", type=int, default=3)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--s", default="0")
    args = parser.parse_args()
    sp = SpecializationParams(args.n, args.r, to_rational(args.s))
    for lam in partitions_up_to(args.max_weight, max_length=args.r):
        print(expand(lam, sp).to_json())


if __name__ == "__main__":
    main()
