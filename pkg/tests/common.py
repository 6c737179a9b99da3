"""Small hand-checked maps shared across the test suite."""

from planemaps.maps import PlaneMap


def digon() -> PlaneMap:
    """One edge bounding a single face of degree 2."""
    return PlaneMap((1, 0), (1, 0), (1, 1), (0,))


def double_edge() -> PlaneMap:
    """Two parallel edges, type (2, 2)."""
    return PlaneMap((1, 0, 3, 2), (2, 3, 0, 1), (1, 2, 1, 2), (0, 3))


def path_map() -> PlaneMap:
    """Two edges in a path, one face of degree 4."""
    return PlaneMap((1, 0, 3, 2), (2, 0, 3, 1), (1, 1, 1, 1), (0,))


def loop_pendant() -> PlaneMap:
    """A loop with a pendant edge inside the outer face, type (3, 1)."""
    return PlaneMap((1, 0, 3, 2), (2, 1, 3, 0), (1, 2, 1, 1), (0, 1))


def loop_map() -> PlaneMap:
    """A single loop, type (1, 1)."""
    return PlaneMap((1, 0), (0, 1), (1, 2), (0, 1))


ALL_EXAMPLES = (digon, double_edge, path_map, loop_pendant, loop_map)
