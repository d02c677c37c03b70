"""Exception hierarchy shared by the engine modules.

Domain errors (unknown ids, invalid parameters, combinatorial blow-up)
derive from :class:`SwatError` so callers can map them to exit code 2 or
HTTP status codes in one place.  I/O failures stay ordinary ``OSError``.
"""

from __future__ import annotations


class SwatError(Exception):
    """Base class for all domain-level errors."""


class FormatError(SwatError):
    """A file could not be understood at the container level (bad header,
    undecodable bytes).  Per-record problems are anomalies, not errors."""


class IntegrityError(SwatError):
    """A record violates referential integrity or a hard model invariant.

    Carries the locator of the offending record when one is known.
    """

    def __init__(self, message: str, locator: str | None = None):
        self.locator = locator
        super().__init__(f"{message} ({locator})" if locator else message)


class UnknownIndividualError(SwatError):
    def __init__(self, individual_id: str):
        self.individual_id = individual_id
        super().__init__(f"unknown individual: {individual_id!r}")


class UnknownAreaError(SwatError):
    def __init__(self, area_id: str):
        self.area_id = area_id
        super().__init__(f"unknown expertise area: {area_id!r}")


class InvalidParamsError(SwatError):
    """Caller-supplied parameters are out of range or inconsistent."""


class EmptyAssignmentError(SwatError):
    """A competence score was requested for an assignment with no areas."""


class CandidateExplosionError(SwatError):
    """The slate product exceeds the configured candidate cap."""

    def __init__(self, product: int, cap: int):
        self.product = product
        self.cap = cap
        super().__init__(
            f"candidate enumeration would score {product} combinations "
            f"(cap {cap}); narrow the query or raise the cap"
        )


class InsufficientAreasError(SwatError):
    """The snapshot has fewer populated areas than a benchmark run needs."""

    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(
            f"benchmark needs {needed} populated areas, snapshot has {available}"
        )
