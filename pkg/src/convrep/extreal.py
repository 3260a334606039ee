"""Extended-real scalar arithmetic: values in R union {+inf}.

Every function value in this package lives in the extended half-line.
Storage is IEEE float64 where +inf is the genuinely tagged infinity (its
absorbing arithmetic is exact: ``inf + a == inf``, ``c*inf == inf`` for
``c > 0``).  NaN and -inf are rejected everywhere; the one undefined
operation, ``0 * inf``, raises instead of producing NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["ExtReal", "ExtRealError", "INF", "as_extended_array", "finite_mask"]


class ExtRealError(ArithmeticError):
    """Raised for undefined extended-real operations (e.g. ``0 * inf``)."""


def _check_scalar(v: float) -> float:
    v = float(v)
    if math.isnan(v):
        raise ExtRealError("NaN is not an extended real")
    if v == -math.inf:
        raise ExtRealError("-inf is outside R union {+inf}")
    return v


@dataclass(frozen=True, order=True)
class ExtReal:
    """A single value in R union {+inf} with checked arithmetic."""

    value: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", _check_scalar(self.value))

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)

    def __add__(self, other):
        o = other.value if isinstance(other, ExtReal) else _check_scalar(other)
        return ExtReal(self.value + o)

    __radd__ = __add__

    def __mul__(self, c):
        c = float(c)
        if math.isnan(c):
            raise ExtRealError("NaN scale factor")
        if not self.is_finite:
            if c == 0.0:
                raise ExtRealError("0 * inf is undefined")
            if c < 0.0:
                raise ExtRealError("negative scale of +inf leaves R union {+inf}")
        return ExtReal(c * self.value)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return "ExtReal(inf)" if not self.is_finite else f"ExtReal({self.value!r})"


#: The distinguished +infinity element.
INF = ExtReal(math.inf)


def as_extended_array(values, shape=None) -> np.ndarray:
    """Validate and return a float64 array of extended reals.

    Rejects NaN and -inf entries.  The result is a locked (read-only) copy.
    """
    arr = np.array(values, dtype=np.float64, copy=True)
    if shape is not None and arr.shape != tuple(shape):
        raise ValueError(f"expected shape {tuple(shape)}, got {arr.shape}")
    if np.isnan(arr).any():
        raise ExtRealError("NaN entries are not extended reals")
    if np.any(arr == -np.inf):
        raise ExtRealError("-inf entries are outside R union {+inf}")
    arr.flags.writeable = False
    return arr


def finite_mask(arr: np.ndarray) -> np.ndarray:
    """Boolean mask of finite entries (the discrete effective domain)."""
    return np.isfinite(arr)
