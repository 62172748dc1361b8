"""nlstop: optimal stopping of absorbed Brownian motion under risk mappings."""

__version__ = "0.1.0"
