#!/usr/bin/env python3
"""Main entry point for the divpoly command-line tool."""

import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import main


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\nProcess interrupted by user", file=sys.stderr)
        sys.exit(130)
