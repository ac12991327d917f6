"""Console entry point: ``python main.py <command> ...``."""
import sys

from dclifford.cli.router import cli_main

if __name__ == "__main__":
    sys.exit(cli_main())
