"""Arithmetic domain for subtree costs: nonnegative integers extended with infinity.

Every dynamic program in this package measures "number of black vertices
needed", where an impossible configuration costs infinity.  Infinity is a
distinct variant rather than a large sentinel integer: the solvers rewrite
some minimizations into subtractive form (cost deltas), and a sentinel
would silently corrupt those rewrites.  Subtraction is therefore only
defined between finite values; expressions involving infinity must be
evaluated in their additive form.

Internally the solvers carry plain ``int`` costs with ``None`` standing for
infinity, which keeps the hot loops free of object overhead.  ``CostValue``
is the public face of the same domain: results returned by the library
(``gamma12``, ``gamma_ab``, ``gamma_total``, oracle minima) are CostValue
instances, and ``from_optional``/``to_optional`` bridge the two encodings.
"""

from __future__ import annotations

from typing import Iterable, Optional


class CostValue:
    """A nonnegative integer cost or infinity, totally ordered.

    Addition saturates: ``x + INFINITY == INFINITY``.  Finite values compare
    by magnitude and every finite value is smaller than ``INFINITY``.
    Instances are immutable and hashable.
    """

    __slots__ = ("_value",)

    def __init__(self, value: Optional[int]):
        if value is not None:
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError("finite cost must be an int")
            if value < 0:
                raise ValueError("cost cannot be negative")
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("CostValue is immutable")

    @classmethod
    def finite(cls, value: int) -> "CostValue":
        return cls(value)

    @classmethod
    def infinite(cls) -> "CostValue":
        return INFINITY

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> int:
        """The finite magnitude; raising on infinity keeps callers honest."""
        if self._value is None:
            raise ValueError("infinite cost has no finite value")
        return self._value

    def __add__(self, other: "CostValue") -> "CostValue":
        if not isinstance(other, CostValue):
            return NotImplemented
        if self._value is None or other._value is None:
            return INFINITY
        return CostValue(self._value + other._value)

    def __sub__(self, other: "CostValue") -> "CostValue":
        # Only the finite-finite case is meaningful; the delta rewrites in
        # the solvers must never see an infinite operand.
        if not isinstance(other, CostValue):
            return NotImplemented
        if self._value is None or other._value is None:
            raise ValueError("subtraction is undefined for infinite costs")
        if self._value < other._value:
            raise ValueError("cost subtraction would be negative")
        return CostValue(self._value - other._value)

    def __lt__(self, other: "CostValue") -> bool:
        if not isinstance(other, CostValue):
            return NotImplemented
        if self._value is None:
            return False
        if other._value is None:
            return True
        return self._value < other._value

    def __le__(self, other: "CostValue") -> bool:
        if not isinstance(other, CostValue):
            return NotImplemented
        return self == other or self < other

    def __gt__(self, other: "CostValue") -> bool:
        if not isinstance(other, CostValue):
            return NotImplemented
        return other < self

    def __ge__(self, other: "CostValue") -> bool:
        if not isinstance(other, CostValue):
            return NotImplemented
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, CostValue):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __repr__(self) -> str:
        if self._value is None:
            return "CostValue(inf)"
        return f"CostValue({self._value})"

    def __str__(self) -> str:
        """Rendering used by the CLI and JSON output: decimal or "inf"."""
        if self._value is None:
            return "inf"
        return str(self._value)


INFINITY = CostValue(None)
ZERO = CostValue(0)


class NoSetError(ValueError):
    """A witness was requested but no set with the required properties exists."""


def cv_add(x: CostValue, y: CostValue) -> CostValue:
    """Saturating addition: any infinite operand makes the sum infinite."""
    return x + y


def cv_min(xs: Iterable[CostValue]) -> CostValue:
    """Least element of a nonempty collection under the total order."""
    best = None
    for x in xs:
        if best is None or x < best:
            best = x
    if best is None:
        raise ValueError("cv_min of an empty collection")
    return best


def from_optional(value: Optional[int]) -> CostValue:
    """Lift the solvers' internal ``int | None`` encoding (None = infinity)."""
    return CostValue(value)


def to_optional(cv: CostValue) -> Optional[int]:
    return cv._value
