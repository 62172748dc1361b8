"""Allow running as `python -m nlstop`."""

from nlstop.cli.app import main

main()
