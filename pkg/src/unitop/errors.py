"""Exception hierarchy.

Every error carries a stable ``code`` (the class name) so the CLI and the
JSON reports can name it without string matching.
"""


class UnitopError(Exception):
    @property
    def code(self) -> str:
        return type(self).__name__


# -- space construction -------------------------------------------------------

class InvalidSpace(UnitopError):
    pass


class DuplicateLabel(InvalidSpace):
    pass


class UnknownLabel(InvalidSpace):
    pass


class MissingEmptyOrFull(InvalidSpace):
    pass


class NotClosedUnderUnion(InvalidSpace):
    pass


class NotClosedUnderIntersection(InvalidSpace):
    pass


class NotReflexive(InvalidSpace):
    pass


class NotTransitive(InvalidSpace):
    pass


# -- families and maps -------------------------------------------------------

class NotDirected(UnitopError):
    pass


class SpaceMismatch(UnitopError):
    pass


class InvalidMap(UnitopError):
    pass


class EmptySubset(UnitopError):
    pass


# -- lattice level -----------------------------------------------------------

class NoBound(UnitopError):
    pass


class NoPointWitness(UnitopError):
    pass


class AmbiguousWitness(UnitopError):
    pass


class NotZeroDimensional(UnitopError):
    pass


class ExtractionFailed(UnitopError):
    pass


class NotAnIsomorphism(UnitopError):
    pass


# -- guards ------------------------------------------------------------------

class SearchSpaceTooLarge(UnitopError):
    pass


class SpaceTooLarge(SearchSpaceTooLarge):
    pass


class Overflow(UnitopError):
    pass
