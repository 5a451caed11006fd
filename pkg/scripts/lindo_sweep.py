"""Cross-check the cyclic-conjugacy decision against the oracle on small GL_n(p).

For each (p, n) this compares holomorph isomorphism decided by linear algebra
with the brute-force answer, over all pairs of cyclic-subgroup class
representatives (or all pairs when the group is tiny).

    python3 scripts/lindo_sweep.py [--cases 2,2 3,2 2,3 5,2]
"""

import argparse
import sys

from holoforge.oracle import verify_lindo


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", nargs="+", default=["2,2", "3,2", "2,3", "5,2"])
    args = ap.parse_args()
    bad = 0
    for case in args.cases:
        p, n = (int(x) for x in case.split(","))
        rep = verify_lindo(p, n)
        bad += len(rep.disagreements)
        print(f"GL_{n}({p}) scope={rep.scope:<4} pairs={rep.pairs:<5} isomorphic={rep.isomorphic_pairs:<4} "
              f"disagreements={len(rep.disagreements)} ({rep.seconds:.2f} s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
