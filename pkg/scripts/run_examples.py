"""Run every worked-example reproduction and optionally save the JSON reports.

    python3 scripts/run_examples.py [--out DIR] [--seed S]
"""

import argparse
import pathlib
import sys

from holoforge.config import Limits
from holoforge.reproductions import EXAMPLES, run_example

EXTRA = [("e3", {"p": 5}), ("e9", {"p": 3})]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=pathlib.Path)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    limits = Limits.from_env(seed=args.seed)
    runs = [(name, {}) for name in EXAMPLES] + EXTRA
    failures = 0
    for name, params in runs:
        rep = run_example(name, limits, **params)
        tag = name + "".join(f"_{k}{v}" for k, v in params.items())
        print(rep.lines()[0] + (f" {params}" if params else ""))
        failures += not rep.overall
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"example_{tag}.json").write_text(rep.to_json())
    print(f"{len(runs) - failures}/{len(runs)} reproductions pass")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
