#!/usr/bin/env python3
"""
Setup verification script for madcc (multiaccess D2D coded caching).

Imports every third-party package, then runs two tiny checks that exercise
them the way the package does: a GF(q) field from galois and the built-in example1
DPDA through the checker and the simulator.
"""

import sys
from pathlib import Path

PACKAGES = ('numpy', 'pandas', 'tqdm', 'galois', 'pytest', 'hypothesis')


def verify_imports():
    """Return (name, version or error, ok) for each required package."""
    rows = []
    for name in PACKAGES:
        try:
            module = __import__(name)
            rows.append((name, getattr(module, '__version__', 'unknown'), True))
        except ImportError as exc:
            rows.append((name, str(exc), False))
    return rows


def verify_package():
    """Run the checker and one simulation on the built-in DPDA."""
    sys.path.insert(0, str(Path(__file__).parent))
    import galois

    from src.arrays import example1_dpda, verify_dpda
    from src.evaluation import run_experiment
    from src.schemes import original_d2d_bundle

    field = galois.GF(9)
    arr, phi = example1_dpda()
    report = verify_dpda(arr, phi)
    run = run_experiment(original_d2d_bundle(arr, phi, kind='example1'), file_size=64)
    return [
        ('GF(9) order', str(field.order), field.order == 9),
        ('example1 DPDA', report.describe(), report.valid),
        ('example1 decode', f"R={run.load}", run.success),
    ]


def print_rows(title, rows):
    print(f"\n{title}:")
    for name, detail, ok in rows:
        print(f"  {'✅' if ok else '❌'} {name}: {detail}")


if __name__ == '__main__':
    print("=" * 60)
    print("madcc setup verification")
    print("=" * 60)
    imports = verify_imports()
    print_rows("Packages", imports)
    ok = all(row[2] for row in imports)
    if ok:
        checks = verify_package()
        print_rows("Self-checks", checks)
        ok = all(row[2] for row in checks)
    print("\n" + "=" * 60)
    print("✅ All checks passed!" if ok else "❌ Setup is incomplete")
    print("=" * 60)
    sys.exit(0 if ok else 1)
