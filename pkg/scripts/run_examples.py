"""Reproduce the eleven reported example parameter sets and write the
comparison report as JSON next to a human-readable table."""

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from whiteman6.cli import dumps, render_table
from whiteman6.reference import exit_status, run_examples


@dataclass
class ExamplesConfig:
    out: Path = Path("results/examples.json")
    wmax: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=ExamplesConfig.out)
    ap.add_argument("--wmax", type=int, default=ExamplesConfig.wmax)
    cfg = ExamplesConfig(**vars(ap.parse_args()))
    t = time.perf_counter()
    results = run_examples(wmax=cfg.wmax)
    payload = {"examples": [r.to_dict() for r in results]}
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(dumps(payload) + "\n")
    print(render_table("examples", payload))
    print(f"\n{len(results)} examples in {time.perf_counter() - t:.1f} s; report in {cfg.out}")
    return exit_status(results)


if __name__ == "__main__":
    sys.exit(main())
