"""Exception hierarchy. Every error carries a machine-readable name and details."""

from __future__ import annotations

from typing import Any


class CFPOError(Exception):
    """Base class for domain errors raised by the library."""

    def __init__(self, message: str = "", **details: Any):
        super().__init__(message or self.__class__.__name__)
        self.details = details

    @property
    def name(self) -> str:
        return self.__class__.__name__

    def to_json(self) -> dict:
        return {"error": self.name, "message": str(self), "details": self.details}


class CycleInOrder(CFPOError):
    pass


class UnknownElement(CFPOError):
    pass


class DuplicateElement(CFPOError):
    pass


class ReservedColor(CFPOError):
    pass


class NotACFPO(CFPOError):
    pass


class NotATree(CFPOError):
    pass


class NotConnected(CFPOError):
    pass


class EmptySet(CFPOError):
    pass


class ElementNotInCenter(CFPOError):
    pass


class InvalidSize(CFPOError):
    pass


class EmptyPoset(CFPOError):
    pass


class NotOddClass(CFPOError):
    pass


class NotEvenClass(CFPOError):
    pass


class NotAWitness(CFPOError):
    pass


class TooLarge(CFPOError):
    pass


class CarrierMismatch(CFPOError):
    pass


class NotAFixedPoint(CFPOError):
    pass


class NotInvariant(CFPOError):
    pass


class NotConnectedSubset(CFPOError):
    pass


class Disjointness(CFPOError):
    pass


class NotCFPO3(CFPOError):
    pass


class NoFixedPoint(CFPOError):
    pass


class VerificationFailed(CFPOError):
    pass
