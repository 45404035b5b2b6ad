#!/usr/bin/env python3
"""Search for graded contractible posets whose graded Euler
characteristic differs from 1.

Such posets are never cellular (on cellular posets the two Euler
characteristics agree), so each hit separates gradedness from
cellularity.  Contractibility is certified by beat-point reduction.
"""

import argparse

from posetmorse import check_cellularity, euler_characteristics
from posetmorse.formats import serialize_poset
from posetmorse.randgen import XorShift64Star, find_euler_gap_poset


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--max-elements", type=int, default=8)
    parser.add_argument("--count", type=int, default=3, help="how many witnesses")
    args = parser.parse_args()

    rng = XorShift64Star(args.seed)
    for i in range(args.count):
        poset = find_euler_gap_poset(rng, max_elements=args.max_elements)
        if poset is None:
            print("no witness found within the try budget")
            return
        chi_g, chi = euler_characteristics(poset)
        report = check_cellularity(poset)
        print(f"-- witness {i + 1}: {len(poset)} elements, "
              f"chi_g = {chi_g}, chi = {chi}, cellular = {report.is_cellular}")
        print(serialize_poset(poset), end="")


if __name__ == "__main__":
    main()
