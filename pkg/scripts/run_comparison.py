#!/usr/bin/env python3
"""
Script to regenerate the comparison tables and cross-check them against
constructed schemes.
"""

import argparse
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.evaluation import check_table, render_csv, render_text, table_report
from src.evaluation.tables import render_checks
from src.utils import Timer, configure_logging

TABLES = ('I', 'II', 'III', 'IV')


def run_comparison(output_dir: Path, jobs: int = 1):
    failures = 0
    for table in TABLES:
        with Timer() as timer:
            rows = table_report(table, jobs=jobs)
            results = check_table(table, jobs=jobs)
        failures += sum(not result.passed for result in results)
        (output_dir / f"table-{table}.csv").write_text(render_csv(rows))
        print(f"\nTable {table} ({timer.elapsed:.2f}s)")
        print(render_text(rows), end='')
        print(render_checks(results), end='')
    return failures


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description='Regenerate and check the comparison tables')
    parser.add_argument('--output-dir', default='data/processed', help='Directory for table CSVs')
    parser.add_argument('--jobs', type=int, default=1, help='Worker processes for the constructions')
    parser.add_argument('--verbose', action='store_true', help='DEBUG logging')
    args = parser.parse_args()
    configure_logging(args.verbose)

    output_dir = Path(args.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    print("Running table comparison...")
    failed = run_comparison(output_dir, jobs=args.jobs)
    print(f"\n{failed} failed check(s). Saved to {output_dir}")
    sys.exit(2 if failed else 0)
