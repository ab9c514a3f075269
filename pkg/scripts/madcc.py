#!/usr/bin/env python3
"""Command-line launcher for the coded caching toolkit (see src/cli.py)."""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
