"""Direct computation of the nonconcave majorant w."""

from nlstop.majorant.models import Family, MajorantResult
from nlstop.majorant.search import compute_majorant

__all__ = ["Family", "MajorantResult", "compute_majorant"]
