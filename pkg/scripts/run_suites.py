"""Run the property suites over several seeds and tabulate case counts.

    python3 scripts/run_suites.py [--seeds 0 1 2] [--only lindo psimilar]
"""

import argparse
import sys

from holoforge.config import Limits
from holoforge.suites import SUITES, run_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--only", nargs="+", choices=sorted(SUITES))
    args = ap.parse_args()
    names = args.only or list(SUITES)
    bad = 0
    print(f"{'suite':<14}{'seed':>5}{'exhaustive':>12}{'random':>8}{'failures':>10}{'seconds':>9}")
    for seed in args.seeds:
        for name in names:
            rep = run_suite(name, Limits.from_env(seed=seed))
            res = rep.results
            n_bad = len(res["counterexamples"])
            bad += n_bad or not rep.overall
            print(f"{name:<14}{seed:>5}{res['exhaustive_cases']:>12}{res['random_cases']:>8}"
                  f"{n_bad:>10}{rep.wall_time:>9.2f}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
