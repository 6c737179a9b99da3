"""Exception hierarchy for the plane map library.

Construction errors are raised while validating raw permutation data,
surgery errors while cutting and sewing, bijection errors when a
decorated input violates the preconditions of a mapping, and counting
errors for inadmissible degree tuples.
"""


class PlaneMapError(Exception):
    """Base class for all library errors."""


# construction / serialization

class NotPermutation(PlaneMapError):
    pass


class NotInvolution(PlaneMapError):
    pass


class FaceMismatch(PlaneMapError):
    pass


class BadMark(PlaneMapError):
    pass


class Disconnected(PlaneMapError):
    pass


class WrongGenus(PlaneMapError):
    pass


class ParseError(PlaneMapError):
    pass


# surgery

class InvalidWalk(PlaneMapError):
    pass


class CornerMismatch(PlaneMapError):
    pass


class LengthMismatch(PlaneMapError):
    pass


class NotDangling(PlaneMapError):
    pass


class NotDigon(PlaneMapError):
    pass


# bijections

class NotBipartite(PlaneMapError):
    pass


class BadFace(PlaneMapError):
    pass


class SameSlot(PlaneMapError):
    pass


class SameFace(PlaneMapError):
    pass


class BadParity(PlaneMapError):
    pass


class DegreeTooSmall(PlaneMapError):
    pass


class NoDegreeOneFace(PlaneMapError):
    pass


class BadDecoration(PlaneMapError):
    pass


# counting

class OddSum(PlaneMapError):
    pass


class NonPositiveV(PlaneMapError):
    pass


class TooManyOddFaces(PlaneMapError):
    pass


# sampler

class OddCoordinate(PlaneMapError):
    pass


class BadSchedule(PlaneMapError):
    pass
