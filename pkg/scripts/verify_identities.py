#!/usr/bin/env python3
"""Run the full identity registry at desk scale and print a summary table.

Equivalent to `expsumlab verify-all --format text`; use the CLI for
machine-readable output.
"""

import sys

from expsumlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-all", "--format", "text", *sys.argv[1:]]))
