"""Exception hierarchy.

Every domain error derives from :class:`PlatticeError` (itself a
``ValueError``), so callers can catch the whole family at once. The CLI maps
:class:`ResourceLimit` to exit code 2 and everything else to exit code 1.
"""


class PlatticeError(ValueError):
    """Base class for domain errors."""

    code = "domain_error"


class InvalidStructure(PlatticeError):
    code = "invalid_structure"


class DomainMismatch(PlatticeError):
    code = "domain_mismatch"


class NotAParkingFunction(PlatticeError):
    code = "not_a_parking_function"


class NotACover(PlatticeError):
    code = "not_a_cover"


class ContainsTop(PlatticeError):
    code = "contains_top"


class NotSaturated(PlatticeError):
    code = "not_saturated"


class InvalidLabelWord(PlatticeError):
    code = "invalid_label_word"


class EdgeNotInDifference(PlatticeError):
    code = "edge_not_in_difference"


class NotComparable(PlatticeError):
    code = "not_comparable"


class NotAbove(PlatticeError):
    code = "not_above"


class ResourceLimit(PlatticeError):
    code = "resource_limit"
