#!/usr/bin/env python3
"""Run every suite over the rationals and a small prime field and write the
reports under out/.

Usage: python3 scripts/verify_report.py [--n-min 2] [--n-max 4] [--seed 0]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from umrow.fields import RATIONALS, prime_field
from umrow.suites import SuiteConfig, run_suite


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-min", type=int, default=2)
    parser.add_argument("--n-max", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="out")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(exist_ok=True)
    worst = 0
    for field in (RATIONALS, prime_field(5)):
        for suite in ("identities", "rows", "fold", "euler"):
            n_min = args.n_min
            if suite == "fold":
                # the certificate assembly starts at n = 4; smaller n would
                # be reported as declined cases
                if args.n_max < 4:
                    continue
                n_min = max(4, n_min)
            config = SuiteConfig(
                suite=suite,
                n_min=n_min,
                n_max=args.n_max,
                field=field,
                seed=args.seed,
                timing=True,
            )
            report = run_suite(config)
            name = f"{suite}-{field}".replace(":", "")
            (out / f"{name}.json").write_text(report.to_json())
            summary = report.summary()
            status = "ok" if report.all_pass() else "FAILING"
            print(
                f"{suite:<11} {str(field):<6} pass={summary['pass']:<3} "
                f"fail={summary['fail']:<2} error={summary['error']:<2} {status}"
            )
            if not report.all_pass():
                worst = 1
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
