"""Exact counting of rooted plane maps with prescribed face degrees.

For a degree tuple a = (a_1, ..., a_r) with at most two odd entries,
the number of plane maps with r labelled faces of these degrees, one
marked corner per face, is

    M(a) = (E - 1)! / V! * prod_i alpha(a_i)

with E = (sum a_i) / 2 edges, V = E - r + 2 vertices and
alpha(x) = x! / (floor(x/2)! floor((x-1)/2)!).

The module also evaluates both sides of four integral identities that
relate M(a) to M(a~) for a neighbouring degree tuple a~; each identity
counts one family of decorated maps in two ways.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Iterable

from .errors import BadParity, NonPositiveV, OddSum, TooManyOddFaces


def check_type(a: Iterable[int]) -> tuple[int, ...]:
    """Normalise a degree tuple, rejecting junk."""
    try:
        t = tuple(int(x) for x in a)
    except (TypeError, ValueError):
        raise ValueError("degree tuple must consist of integers")
    if not t or any(x < 1 for x in t):
        raise ValueError("degrees must be positive and at least one face given")
    return t


def odd_positions(a: Iterable[int]) -> tuple[int, ...]:
    """1-based positions of the odd degrees."""
    return tuple(i for i, x in enumerate(check_type(a), start=1) if x % 2)


def classify(a: Iterable[int]) -> str:
    """'bipartite' for all-even degrees, 'quasibipartite' for two odd."""
    odd = odd_positions(a)
    if not odd:
        return "bipartite"
    if len(odd) == 2:
        return "quasibipartite"
    raise TooManyOddFaces(
        f"more than two odd faces: positions {list(odd)}"
        if len(odd) > 2
        else f"odd degree sum: single odd face at position {odd[0]}"
    )


def edge_count(a: Iterable[int]) -> int:
    t = check_type(a)
    total = sum(t)
    if total % 2:
        raise OddSum(f"degree sum {total} is odd")
    return total // 2


def vertex_count(a: Iterable[int]) -> int:
    t = check_type(a)
    v = edge_count(t) - len(t) + 2
    if v < 1:
        raise NonPositiveV(f"degree tuple {t} forces {v} vertices")
    return v


def alpha(x: int) -> int:
    """x! / (floor(x/2)! * floor((x-1)/2)!), the per-face weight."""
    if x < 1:
        raise ValueError("face degrees are positive")
    return factorial(x) // (factorial(x // 2) * factorial((x - 1) // 2))


def tutte_count(a: Iterable[int]) -> int:
    """Number of plane maps of type a with one marked corner per face."""
    t = check_type(a)
    classify(t)
    e = edge_count(t)
    v = vertex_count(t)
    val = Fraction(factorial(e - 1), factorial(v))
    for x in t:
        val *= alpha(x)
    if val.denominator != 1:
        raise ArithmeticError(f"count for {t} is not integral: {val}")
    return val.numerator


class Identity(Enum):
    """The four counting identities, named by the decoration they count.

    TWO_CORNERS_SAME_FACE  an edge plus a nested ordered pair of corners
                           of the first face, against a vertex plus two
                           half-edges of the enlarged first face.
    CORNER_EACH_TWO_FACES  an edge plus one corner in each of the first
                           two faces, against a vertex plus one incoming
                           half-edge in each enlarged face.
    FACE_TO_FACE           a corner of the first face plus a half-edge
                           of the last face, against the same data with
                           the roles of the two faces exchanged.
    UNIT_FACE              a corner of the first face of a type ending
                           in a degree-one face, against a vertex plus
                           an incoming half-edge after erasing it.
    """

    TWO_CORNERS_SAME_FACE = "two-corners-same-face"
    CORNER_EACH_TWO_FACES = "corner-each-two-faces"
    FACE_TO_FACE = "face-to-face"
    UNIT_FACE = "unit-face"


def identity_target(identity: Identity, a: Iterable[int]) -> tuple[int, ...]:
    """Degree tuple on the right-hand side of the identity, or BadParity."""
    t = check_type(a)
    odd = odd_positions(t)
    if identity is Identity.TWO_CORNERS_SAME_FACE:
        if odd:
            raise BadParity("needs all face degrees even")
        return (t[0] + 2,) + t[1:]
    if identity is Identity.CORNER_EACH_TWO_FACES:
        if odd or len(t) < 2:
            raise BadParity("needs at least two faces, all degrees even")
        return (t[0] + 1, t[1] + 1) + t[2:]
    if identity is Identity.FACE_TO_FACE:
        if len(t) < 2 or t[-1] < 2:
            raise BadParity("needs two faces and last degree at least 2")
        if odd and (len(odd) != 2 or t[-1] % 2 == 0):
            raise BadParity("odd degrees must be exactly two, one of them last")
        return (t[0] + 1,) + t[1:-1] + (t[-1] - 1,)
    if identity is Identity.UNIT_FACE:
        if len(t) < 2 or t[-1] != 1 or len(odd) != 2:
            raise BadParity("needs a final degree-one face and one more odd face")
        return (t[0] + 1,) + t[1:-1]
    raise TypeError(f"unknown identity {identity!r}")


def identity_sides(identity: Identity, a: Iterable[int]) -> tuple[int, int]:
    """Evaluate both sides of the identity at type a."""
    t = check_type(a)
    tt = identity_target(identity, t)
    if identity is Identity.TWO_CORNERS_SAME_FACE:
        lhs = (t[0] + 1) * (t[0] + 2) * edge_count(t) * tutte_count(t)
        rhs = (tt[0] // 2) * ((tt[0] - 1) // 2) * vertex_count(tt) * tutte_count(tt)
    elif identity is Identity.CORNER_EACH_TWO_FACES:
        lhs = (t[0] + 1) * (t[1] + 1) * edge_count(t) * tutte_count(t)
        rhs = (tt[0] // 2) * (tt[1] // 2) * vertex_count(tt) * tutte_count(tt)
    elif identity is Identity.FACE_TO_FACE:
        lhs = (t[0] + 1) * (t[-1] // 2) * tutte_count(t)
        rhs = (tt[0] // 2) * (tt[-1] + 1) * tutte_count(tt)
    else:
        lhs = (t[0] + 1) * tutte_count(t)
        rhs = (tt[0] // 2) * vertex_count(tt) * tutte_count(tt)
    return lhs, rhs
