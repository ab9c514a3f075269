#!/usr/bin/env python3
"""Command-line script to simulate every built-in scheme over random demands."""

import argparse
import sys
from datetime import datetime
from pathlib import Path

import pandas as pd

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.arrays import example1_dpda
from src.designs import load_fixture
from src.evaluation import aggregate_results, run_experiment_suite
from src.schemes import (
    COR1,
    THM5,
    cor5_scheme,
    original_d2d_bundle,
    tdesign_d2d_scheme,
    tdesign_scheme,
    tgdd_scheme,
    thm9_scheme,
)
from src.utils import configure_logging

SCHEMES = {
    'example1': lambda: original_d2d_bundle(*example1_dpda(), kind='example1'),
    'fano-i1': lambda: tdesign_scheme(load_fixture('fano'), 1, THM5),
    'fano-d2d-i1': lambda: tdesign_d2d_scheme(load_fixture('fano'), 1, THM5),
    'steiner-i2': lambda: tdesign_scheme(load_fixture('steiner-3-8-4'), 2, THM5),
    'example13-cor1-i2': lambda: tdesign_scheme(load_fixture('example13'), 2, COR1),
    'example14-tgdd': lambda: tgdd_scheme(load_fixture('example14-gdd'), load_fixture('example14-oa'), 1),
    'thm9-3-2-2': lambda: thm9_scheme(3, 2, 2),
    'cor5-3-2-2': lambda: cor5_scheme(3, 2, 2),
}


def main():
    """Main entry point for the simulation sweep."""
    parser = argparse.ArgumentParser(
        description='Place, deliver and decode every built-in scheme over random demands'
    )
    parser.add_argument(
        '--output-dir',
        type=str,
        default=None,
        help='Directory for per-scheme CSVs. If not specified, generates data/processed/simulations-DD-MM-YYYY-HH-MM-SS'
    )
    parser.add_argument(
        '--trials',
        type=int,
        default=100,
        help='Random demand vectors per scheme (default: 100)'
    )
    parser.add_argument(
        '--seed',
        type=int,
        default=42,
        help='Base random seed; trial t uses seed + t (default: 42)'
    )
    parser.add_argument(
        '--file-size',
        type=int,
        default=4096,
        help='File size B in bytes (default: 4096)'
    )
    parser.add_argument(
        '--schemes',
        nargs='+',
        choices=sorted(SCHEMES),
        default=sorted(SCHEMES),
        help='Schemes to simulate (default: all)'
    )
    parser.add_argument('--verbose', action='store_true', help='DEBUG logging')
    args = parser.parse_args()
    configure_logging(args.verbose)

    if args.output_dir is None:
        timestamp = datetime.now().strftime("%d-%m-%Y-%H-%M-%S")
        args.output_dir = str(Path("data/processed") / f"simulations-{timestamp}")
    output_dir = Path(args.output_dir)

    print("=" * 60)
    print("Coded caching simulations")
    print("=" * 60)
    print(f"Schemes: {args.schemes}")
    print(f"Trials: {args.trials}")
    print(f"Base seed: {args.seed}")
    print(f"File size: {args.file_size}")
    print(f"Output: {output_dir}")
    print("=" * 60)

    frames = []
    for name in args.schemes:
        bundle = SCHEMES[name]()
        frames.append(run_experiment_suite(bundle, trials=args.trials, seed=args.seed,
                                           file_size=args.file_size,
                                           output_path=output_dir / f"{name}.csv"))

    summary = aggregate_results(pd.concat(frames, ignore_index=True))
    summary.to_csv(output_dir / 'summary.csv', index=False)
    print(summary.to_string(index=False))
    failed = int((summary['decoded'] < summary['trials']).sum())
    print(f"\n{failed} scheme(s) with decode failures. Results saved to {output_dir}")
    return 1 if failed else 0


if __name__ == '__main__':
    sys.exit(main())
