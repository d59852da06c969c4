"""Run a bench config and write the JSON report (and optionally CSV rows).

    python scripts/run_bench.py configs/bench_gnp16.cfg --out bench.json --csv bench.csv
"""

import argparse
import json
import sys

from cliquecover.bench import bench_run, format_report, load_config


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("config")
    ap.add_argument("--out", help="JSON report path")
    ap.add_argument("--csv", help="per-row CSV path")
    ap.add_argument("--workers", type=int, help="override the worker count")
    args = ap.parse_args()

    cfg = load_config(args.config)
    if args.workers:
        cfg.workers = args.workers
    rep = bench_run(cfg)
    print(format_report(rep))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rep.to_json(), fh, indent=1)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(rep.to_csv())
    return 0 if rep.consistent else 1


if __name__ == "__main__":
    sys.exit(main())
