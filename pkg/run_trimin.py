#!/usr/bin/env python
"""Run trimin from a source checkout."""

import sys

from report.cli import main

if __name__ == "__main__":
    sys.exit(main())
