"""Per-system counts: |W|, singular X(w), criterion holders, and how often Aut0 = P_w.

    python3 scripts/survey_table.py
    python3 scripts/survey_table.py --systems A2 A3 B2 G2 --jobs 4
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from schubaut.cli import QueryConfig, run_survey


@dataclass
class TableConfig:
    systems: tuple[str, ...] = ("A2", "A3", "B2", "G2", "B3", "C3", "D4")
    jobs: int = 1
    cache: str | None = None


def row(name: str, cfg: TableConfig) -> dict:
    doc = run_survey(QueryConfig(name[0], int(name[1:]), survey=True, jobs=cfg.jobs, cache=cfg.cache))
    rows = doc["rows"]
    return {
        "system": name,
        "order": len(rows),
        "singular": sum(not r["smooth"] for r in rows),
        "criterion": sum(r["criterion"] for r in rows),
        "smooth_and_criterion": sum(r["smooth"] and r["criterion"] for r in rows),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--systems", nargs="+", default=list(TableConfig.systems))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache")
    ns = p.parse_args(argv)
    cfg = TableConfig(tuple(ns.systems), ns.jobs, ns.cache)
    cols = ["system", "order", "singular", "criterion", "smooth_and_criterion"]
    print("  ".join(f"{c:>20}" for c in cols))
    for name in cfg.systems:
        r = row(name, cfg)
        print("  ".join(f"{r[c]:>20}" for c in cols), flush=True)


if __name__ == "__main__":
    main()
