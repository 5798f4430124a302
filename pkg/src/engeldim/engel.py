"""Engel expansion arithmetic over exact rationals.

The map T(x) = x*ceil(1/x) - 1 sends [0, 1) into itself with T(0) = 0.
Iterating it from a point x in (0, 1) produces the digits of the Engel
series of x, a sum of reciprocals of growing digit products.  Every
rational orbit reaches 0 after finitely many steps, so digit extraction,
series reconstruction, and the interval geometry of digit prefixes can
all be done exactly.  Nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, InternalError, InvalidWordError


def is_admissible(digits: Iterable[int]) -> bool:
    """True iff some x realizes the digits as its expansion prefix.

    A finite word is admissible exactly when 2 <= d_1 <= ... <= d_n.
    The empty word is not admissible.
    """
    prev = 2
    seen = False
    for d in digits:
        if not isinstance(d, int) or isinstance(d, bool):
            return False
        if d < prev:
            return False
        prev = d
        seen = True
    return seen


class DigitWord(tuple):
    """Immutable admissible digit word; behaves as a tuple of ints."""

    __slots__ = ()

    def __new__(cls, digits: Iterable[int]) -> "DigitWord":
        word = tuple(digits)
        if not is_admissible(word):
            raise InvalidWordError(f"inadmissible digit word {list(word)!r}")
        return super().__new__(cls, word)

    def __repr__(self) -> str:
        return f"DigitWord({list(self)!r})"


@dataclass(frozen=True)
class RatInterval:
    """Interval with exact rational endpoints and end-closure flags."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("a degenerate interval must be closed on both ends")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = Fraction(x)
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    __contains__ = contains

    def encloses(self, other: "RatInterval") -> bool:
        """True when every point of other belongs to this interval."""
        if other.lo < self.lo or (other.lo == self.lo
                                  and other.lo_closed and not self.lo_closed):
            return False
        if other.hi > self.hi or (other.hi == self.hi
                                  and other.hi_closed and not self.hi_closed):
            return False
        return True

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


@dataclass(frozen=True)
class ExpansionResult:
    """Digits extracted from one orbit, with its termination status.

    remainder is the orbit point after the last extracted digit, so
    terminated is equivalent to remainder == 0.  When terminated, the
    digits reconstruct the input exactly.
    """

    digits: DigitWord
    terminated: bool
    remainder: Fraction


def _ceil_reciprocal(x: Fraction) -> int:
    # exact ceil(1/x) for x in (0, 1); integer ceiling division only,
    # floating point would misplace reciprocal-integer boundaries
    return -((-x.denominator) // x.numerator)


def engel_map(x) -> Fraction:
    """One step of the digit map: x*ceil(1/x) - 1, with 0 fixed."""
    x = Fraction(x)
    if x < 0 or x >= 1:
        raise DomainError(f"engel_map needs 0 <= x < 1, got {x}")
    if x == 0:
        return x
    return x * _ceil_reciprocal(x) - 1


def engel_digits(x, max_depth: int | None = None) -> ExpansionResult:
    """Extract the Engel digits of a rational x in (0, 1).

    Stops after max_depth digits; None means run until the orbit hits 0,
    which happens within denominator-many steps for any rational.  The
    digit at step k is ceil(1/T^(k-1)(x)).
    """
    x = Fraction(x)
    if not 0 < x < 1:
        raise DomainError(f"engel_digits needs 0 < x < 1, got {x}")
    if max_depth is not None and max_depth < 1:
        raise DomainError(f"max_depth must be >= 1, got {max_depth}")
    cap = x.denominator
    limit = cap if max_depth is None else max_depth
    digits: list[int] = []
    r = x
    while r != 0 and len(digits) < limit:
        if len(digits) >= cap:
            # the orbit numerator over a fixed denominator strictly
            # decreases, so a run this long means broken arithmetic
            raise InternalError(f"expansion of {x} exceeded {cap} digits")
        d = _ceil_reciprocal(r)
        digits.append(d)
        r = r * d - 1
    return ExpansionResult(DigitWord(digits), r == 0, r)


def reconstruct(word) -> Fraction:
    """Exact value of the finite Engel series with the given digits."""
    w = word if isinstance(word, DigitWord) else DigitWord(word)
    total = Fraction(0)
    prod = 1
    for d in w:
        prod *= d
        total += Fraction(1, prod)
    return total


def cylinder_interval(word) -> RatInterval:
    """Half-open interval of the points whose expansion starts with word.

    For digits (d_1, ..., d_n) this is [A, B): A is the reconstruction
    of the word and B adds 1/(d_1...d_{n-1}(d_n - 1)) to the
    reconstruction of the parent word instead of the last term.
    """
    w = word if isinstance(word, DigitWord) else DigitWord(word)
    prefix = Fraction(0)
    prod = 1
    for d in w[:-1]:
        prod *= d
        prefix += Fraction(1, prod)
    last = w[-1]
    lo = prefix + Fraction(1, prod * last)
    hi = prefix + Fraction(1, prod * (last - 1))
    return RatInterval(lo, hi, lo_closed=True, hi_closed=False)


def cylinder_length(word) -> Fraction:
    """Exact length 1/(d_1...d_{n-1} * d_n * (d_n - 1)) of the cylinder."""
    w = word if isinstance(word, DigitWord) else DigitWord(word)
    prod = 1
    for d in w:
        prod *= d
    return Fraction(1, prod * (w[-1] - 1))
