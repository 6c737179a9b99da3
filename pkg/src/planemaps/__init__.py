"""Surgery, counting, enumeration and exact sampling of plane maps."""

from .errors import PlaneMapError
from .maps import CornerSlot, PlaneMap, build

__all__ = ["CornerSlot", "PlaneMap", "PlaneMapError", "build"]
