#!/usr/bin/env python3
"""Simple script to run the qginv command line."""

import os
import sys

from dotenv import load_dotenv

# Add the project directory to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli import run


def main():
    # Load environment variables from .env if present so QGINV_CONFIG can live in a file.
    load_dotenv()
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
