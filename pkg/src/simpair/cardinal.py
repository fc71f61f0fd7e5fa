"""Symbolic cardinal arithmetic.

Values are either a nonnegative integer or one of three infinite symbols:
aleph0 < aleph1 < continuum.  Every finite value sits below every infinite
one.  Addition agrees with integer addition on finite values and saturates
to the larger argument as soon as either side is infinite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering

_FINITE, _ALEPH0, _ALEPH1, _CONTINUUM = range(4)
_NAMES = {_ALEPH0: "aleph0", _ALEPH1: "aleph1", _CONTINUUM: "continuum"}


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    level: int
    value: int = field(default=0)

    def __post_init__(self):
        if self.level not in (_FINITE, _ALEPH0, _ALEPH1, _CONTINUUM):
            raise ValueError(f"bad cardinal level {self.level!r}")
        if self.level == _FINITE:
            if not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 0:
                raise ValueError(f"finite cardinal needs a nonnegative int, got {self.value!r}")
        elif self.value != 0:
            raise ValueError("infinite cardinals carry no finite value")

    @property
    def is_finite(self) -> bool:
        return self.level == _FINITE

    def __lt__(self, other: "Cardinal") -> bool:
        if not isinstance(other, Cardinal):
            return NotImplemented
        return (self.level, self.value) < (other.level, other.value)

    def __add__(self, other: "Cardinal") -> "Cardinal":
        if not isinstance(other, Cardinal):
            return NotImplemented
        if self.is_finite and other.is_finite:
            return Cardinal(_FINITE, self.value + other.value)
        return max(self, other)

    def __str__(self) -> str:
        return str(self.value) if self.is_finite else _NAMES[self.level]

    def __repr__(self) -> str:
        return f"fin({self.value})" if self.is_finite else _NAMES[self.level].upper()


def fin(n: int) -> Cardinal:
    return Cardinal(_FINITE, n)


ZERO = fin(0)
ONE = fin(1)
ALEPH0 = Cardinal(_ALEPH0)
ALEPH1 = Cardinal(_ALEPH1)
CONTINUUM = Cardinal(_CONTINUUM)


def as_cardinal(v) -> Cardinal:
    """Coerce an int (or Cardinal) to a Cardinal; bools are rejected."""
    if isinstance(v, Cardinal):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return fin(v)
    raise TypeError(f"cannot treat {v!r} as a cardinal")


def cardinal_sum(values) -> Cardinal:
    total = ZERO
    for v in values:
        total = total + as_cardinal(v)
    return total
