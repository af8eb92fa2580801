#!/usr/bin/env python3
"""
Chordal Toolkit command line
Run from a checkout without installing: ./crt.py gen --family fig2 | ./crt.py crg
"""

import sys
from pathlib import Path

# Add the package root to path
sys.path.insert(0, str(Path(__file__).parent))

from chordal_toolkit.cli import main

if __name__ == "__main__":
    sys.exit(main())
