"""Run every theorem sweep and write one JSONL file per tag plus a summary."""

import argparse
import json
import sys
import time
from pathlib import Path

from ffinterleave.verify import TAGS, SweepConfig, run_sweep, summarize


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--q-max", type=int, default=64)
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--jn-max", type=int, default=60)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--tags", nargs="*", default=sorted(TAGS))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    lines = []
    for tag in args.tags:
        q_max = min(args.q_max, 16) if tag.startswith("mobius") else args.q_max
        cfg = SweepConfig(q_max=q_max, n_max=args.n_max, jn_max=args.jn_max, jobs=args.jobs)
        start = time.perf_counter()
        records = list(run_sweep(tag, cfg))
        with open(args.out / f"{tag}.jsonl", "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
        line = f"{summarize(tag, records).line()} ({time.perf_counter() - start:.1f}s)"
        print(line, flush=True)
        lines.append(line)
    (args.out / "summary.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0 if all(line.startswith("PASS") for line in lines) else 1


if __name__ == "__main__":
    sys.exit(main())
