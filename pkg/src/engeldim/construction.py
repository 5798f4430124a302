"""Nested interval constructions driven by a pair of digit-window sequences.

A family supplies two sequences s_n, t_n of positive rationals.  At level
k the allowed Engel digits are the integers in (floor(s_k), floor(s_k + t_k)],
so each level contributes m_k = floor(s_k + t_k) - floor(s_k) choices.  The
words built from these windows select cylinder sets, and the union of the
level-(n+1) child cylinders of a word, taken closed, is its basic interval.
Collecting the basic intervals of all level-n words gives a nested sequence
of unions of closed intervals whose intersection is the target set.

Everything here is exact: windows come from rational floors, endpoints and
the two a priori bounds (the diameter bound delta_n that dominates every
basic-interval length, and the gap bound epsilon_n that every gap between
intervals of the same level dominates) are plain Fractions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Callable, Iterable, Iterator, Sequence

from .engel import DigitWord, RatInterval, reconstruct
from .errors import (
    ConditionError,
    DomainError,
    EvaluationError,
    InvalidWordError,
    SizeLimitError,
)
from .ratmath import exact_kth_root

# hard cap on materialized words per level; counts grow like the product
# of the t_k, so a runaway request must fail loudly instead of thrashing
DEFAULT_LEVEL_LIMIT = 10**6

# divergence of s_n is a statement about all n, so a finite check cannot
# establish it; these tokens say how the claim is supported
DIVERGES_CERTIFIED = "certified"
DIVERGES_ASSERTED = "asserted"
DIVERGES_VIOLATED = "violated-at-depth"


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of checking the window conditions up to a finite depth.

    bounds_ok covers s_n >= t_n >= 2, growth_ok covers s_{n+1} >= s_n + t_n,
    both verified exactly for every n up to depth.  The violation fields
    hold the first failing index, or None.  divergence reports how the
    requirement lim s_n = infinity is supported: certified by the family's
    closed form, asserted by the caller, or provably violated.
    """

    depth: int
    bounds_ok: bool
    bounds_violation: int | None
    growth_ok: bool
    growth_violation: int | None
    divergence: str

    @property
    def all_ok(self) -> bool:
        return self.bounds_ok and self.growth_ok and self.divergence != DIVERGES_VIOLATED


@dataclass(frozen=True)
class LevelQuantities:
    """Exact bookkeeping for one level: count, branching, and both bounds."""

    n: int
    count: int
    branch_counts: tuple[int, ...]
    diameter_bound: Fraction
    gap_bound: Fraction


@dataclass(frozen=True, eq=False)
class SequenceFamily:
    """A pair of positive-rational sequences defining the digit windows.

    Construct via one of the classmethods; the generic constructor is only
    for wiring in closures.  kind is one of "geometric", "power-geometric",
    "explicit-pair".
    """

    kind: str
    description: str
    _s_fn: Callable[[int], Fraction]
    _t_fn: Callable[[int], Fraction]
    _diverges: bool | None  # True certified, False refuted, None unknown

    # -- constructors -------------------------------------------------

    @classmethod
    def geometric(cls, s_ratio, t_ratio, s_coef=1, t_coef=1) -> "SequenceFamily":
        """s_n = s_coef * s_ratio**n and t_n = t_coef * t_ratio**n."""
        sr, tr = Fraction(s_ratio), Fraction(t_ratio)
        sc, tc = Fraction(s_coef), Fraction(t_coef)
        for label, v in (("s_ratio", sr), ("t_ratio", tr),
                         ("s_coef", sc), ("t_coef", tc)):
            if v <= 0:
                raise DomainError(f"{label} must be positive, got {v}")
        parts = []
        for coef, ratio, name in ((sc, sr, "s"), (tc, tr, "t")):
            parts.append(f"{name}_n = {coef}*{ratio}^n" if coef != 1
                         else f"{name}_n = {ratio}^n")
        return cls(
            kind="geometric",
            description=", ".join(parts),
            _s_fn=lambda n: sc * sr**n,
            _t_fn=lambda n: tc * tr**n,
            _diverges=sr > 1,
        )

    @classmethod
    def power_geometric(cls, base, theta) -> "SequenceFamily":
        """s_n = base**n and t_n = base**(theta*n) for rational theta.

        Requires base**theta to be rational, which makes every t_n
        rational; otherwise the family cannot be represented exactly and
        an explicit-pair family should be used instead.
        """
        b = Fraction(base)
        th = Fraction(theta)
        if b <= 0:
            raise DomainError(f"base must be positive, got {b}")
        if th <= 0:
            raise DomainError(f"theta must be positive, got {th}")
        p, q = th.numerator, th.denominator
        power = b**p
        root_num = exact_kth_root(power.numerator, q)
        root_den = exact_kth_root(power.denominator, q)
        if root_num is None or root_den is None:
            raise DomainError(
                f"{b}**({th}) is irrational; supply the values as explicit pairs"
            )
        t_base = Fraction(root_num, root_den)
        return cls(
            kind="power-geometric",
            description=f"s_n = {b}^n, t_n = {b}^({th}*n)",
            _s_fn=lambda n: b**n,
            _t_fn=lambda n: t_base**n,
            _diverges=b > 1,
        )

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "SequenceFamily":
        """Finite table family; entry k of pairs supplies (s_{k+1}, t_{k+1})."""
        table = _validated_pairs(pairs)

        def lookup(n: int, column: int) -> Fraction:
            if n > len(table):
                raise EvaluationError(
                    f"table family has {len(table)} entries, index {n} requested"
                )
            return table[n - 1][column]

        return cls(
            kind="explicit-pair",
            description=f"table of {len(table)} (s, t) pairs",
            _s_fn=lambda n: lookup(n, 0),
            _t_fn=lambda n: lookup(n, 1),
            _diverges=None,
        )

    @classmethod
    def from_function(cls, s_fn: Callable[[int], object],
                      t_fn: Callable[[int], object],
                      description: str = "closure-defined family") -> "SequenceFamily":
        """Family backed by arbitrary callables returning rationals."""
        return cls(
            kind="explicit-pair",
            description=description,
            _s_fn=lambda n: Fraction(s_fn(n)),
            _t_fn=lambda n: Fraction(t_fn(n)),
            _diverges=None,
        )

    # -- raw sequence access ------------------------------------------

    def s(self, n: int) -> Fraction:
        return self._eval(self._s_fn, "s", n)

    def t(self, n: int) -> Fraction:
        return self._eval(self._t_fn, "t", n)

    def _eval(self, fn, name: str, n: int) -> Fraction:
        if n < 1:
            raise DomainError(f"sequence index must be >= 1, got {n}")
        try:
            value = Fraction(fn(n))
        except EvaluationError:
            raise
        except Exception as exc:
            raise EvaluationError(f"{name}_{n} evaluation failed: {exc}") from exc
        if value <= 0:
            raise EvaluationError(f"{name}_{n} = {value} is not positive")
        return value

    @property
    def divergence_certified(self) -> bool:
        return self._diverges is True

    # -- conditions ----------------------------------------------------

    def check_conditions(self, depth: int) -> ConditionReport:
        """Verify the window conditions exactly for all n <= depth.

        The growth comparison at n = depth evaluates s_{depth+1}, so table
        families need depth + 1 entries to be checked to a given depth.
        """
        if depth < 1:
            raise DomainError(f"depth must be >= 1, got {depth}")
        bounds_violation = growth_violation = None
        s_prev = t_prev = None
        for n in range(1, depth + 2):
            if n <= depth:
                s_n, t_n = self.s(n), self.t(n)
                if bounds_violation is None and not s_n >= t_n >= 2:
                    bounds_violation = n
            else:
                s_n, t_n = self.s(n), None
            if s_prev is not None and growth_violation is None:
                if s_n < s_prev + t_prev:
                    growth_violation = n - 1
            s_prev, t_prev = s_n, t_n
        if self._diverges is True:
            divergence = DIVERGES_CERTIFIED
        elif self._diverges is None:
            divergence = DIVERGES_ASSERTED
        else:
            divergence = DIVERGES_VIOLATED
        return ConditionReport(
            depth=depth,
            bounds_ok=bounds_violation is None,
            bounds_violation=bounds_violation,
            growth_ok=growth_violation is None,
            growth_violation=growth_violation,
            divergence=divergence,
        )

    def _require_conditions(self, depth: int) -> None:
        # raises where check_conditions reports; used as the precondition
        # guard of every geometric operation below
        s_prev = t_prev = None
        for n in range(1, depth + 1):
            s_n, t_n = self.s(n), self.t(n)
            if not s_n >= t_n >= 2:
                raise ConditionError(
                    1, n, f"s_{n} >= t_{n} >= 2 fails: s={s_n}, t={t_n}"
                )
            if s_prev is not None and s_n < s_prev + t_prev:
                raise ConditionError(
                    2, n - 1,
                    f"s_{n} >= s_{n-1} + t_{n-1} fails: {s_n} < {s_prev + t_prev}",
                )
            s_prev, t_prev = s_n, t_n

    # -- digit windows --------------------------------------------------

    def digit_range(self, k: int) -> tuple[int, int]:
        """Inclusive integer digit window (floor(s_k)+1, floor(s_k+t_k))."""
        self._require_conditions(k)
        return self._window(k)

    def _window(self, k: int) -> tuple[int, int]:
        s_k, t_k = self.s(k), self.t(k)
        return floor(s_k) + 1, floor(s_k + t_k)

    def branch_count(self, k: int) -> int:
        """Number of admissible digits at level k."""
        j_min, j_max = self.digit_range(k)
        return j_max - j_min + 1

    def word_count(self, n: int) -> int:
        """Exact number of level-n words: the product of the branch counts."""
        self._require_conditions(n)
        total = 1
        for k in range(1, n + 1):
            j_min, j_max = self._window(k)
            total *= j_max - j_min + 1
        return total

    def iter_words(self, n: int, limit: int | None = None) -> Iterator[DigitWord]:
        """Yield the level-n words in lexicographic order.

        A limit truncates the stream after that many words; truncation is
        detectable by comparing with word_count(n), it is not an error.
        Growth of the windows across levels makes every word admissible.
        """
        if n < 1:
            raise DomainError(f"level must be >= 1, got {n}")
        self._require_conditions(n)
        ranges = []
        for k in range(1, n + 1):
            j_min, j_max = self._window(k)
            ranges.append(range(j_min, j_max + 1))
        words = (DigitWord(combo) for combo in itertools.product(*ranges))
        return words if limit is None else itertools.islice(words, limit)

    def sample_words(self, n: int, count: int, rng: random.Random) -> list[DigitWord]:
        """Draw level-n words uniformly; the level is a product of windows,
        so independent uniform picks per level are uniform over the whole."""
        if n < 1:
            raise DomainError(f"level must be >= 1, got {n}")
        if count < 1:
            raise DomainError(f"count must be >= 1, got {count}")
        self._require_conditions(n)
        windows = [self._window(k) for k in range(1, n + 1)]
        return [
            DigitWord(rng.randint(j_min, j_max) for j_min, j_max in windows)
            for _ in range(count)
        ]

    # -- basic intervals -------------------------------------------------

    def basic_interval(self, word) -> RatInterval:
        """Closed interval spanned by the child cylinders of a level-n word.

        With S the reconstruction of the word, P its digit product, and
        (j_min, j_max) the level-(n+1) window, this is
        [S + 1/(P*j_max), S + 1/(P*(j_min - 1))].
        """
        w = word if isinstance(word, DigitWord) else DigitWord(word)
        n = len(w)
        self._require_conditions(n + 1)
        for k, digit in enumerate(w, start=1):
            j_min, j_max = self._window(k)
            if not j_min <= digit <= j_max:
                raise InvalidWordError(
                    f"digit {digit} at position {k} outside window "
                    f"[{j_min}, {j_max}]"
                )
        j_min, j_max = self._window(n + 1)
        return self._interval_from_word(w, j_min, j_max)

    @staticmethod
    def _interval_from_word(w: DigitWord, j_min: int, j_max: int) -> RatInterval:
        base = reconstruct(w)
        prod = 1
        for d in w:
            prod *= d
        lo = base + Fraction(1, prod * j_max)
        hi = base + Fraction(1, prod * (j_min - 1))
        return RatInterval(lo, hi, lo_closed=True, hi_closed=True)

    def level_intervals(self, n: int,
                        limit: int | None = DEFAULT_LEVEL_LIMIT) -> list[RatInterval]:
        """All basic intervals of level n, sorted by left endpoint.

        Level 0 is the convention [0, 1].  Raises a size-limit error, with
        the exact count attached, when the level exceeds the limit.
        """
        if n < 0:
            raise DomainError(f"level must be >= 0, got {n}")
        if n == 0:
            return [RatInterval(Fraction(0), Fraction(1), True, True)]
        self._require_conditions(n + 1)
        total = self.word_count(n)
        if limit is not None and total > limit:
            raise SizeLimitError(
                total, limit, f"level {n} holds {total} intervals, limit {limit}"
            )
        j_min, j_max = self._window(n + 1)
        intervals = [
            self._interval_from_word(w, j_min, j_max) for w in self.iter_words(n)
        ]
        # lexicographic word order is not endpoint order: within a parent,
        # a larger last digit starts further left
        intervals.sort(key=lambda iv: iv.lo)
        return intervals

    def min_gap(self, n: int,
                limit: int | None = DEFAULT_LEVEL_LIMIT) -> Fraction | None:
        """Smallest distance between consecutive level-n intervals.

        None when the level has fewer than two intervals.
        """
        intervals = self.level_intervals(n, limit)
        if len(intervals) < 2:
            return None
        return min(
            right.lo - left.hi
            for left, right in zip(intervals, intervals[1:])
        )

    def max_interval_length(self, n: int) -> Fraction:
        """Largest basic-interval length at level n, in closed form.

        The length of a word's interval depends on the word only through
        its digit product, so the all-minimal word dominates the level and
        no enumeration is needed.
        """
        if n < 1:
            raise DomainError(f"level must be >= 1, got {n}")
        self._require_conditions(n + 1)
        prod = 1
        for k in range(1, n + 1):
            j_min, _ = self._window(k)
            prod *= j_min
        j_min, j_max = self._window(n + 1)
        return Fraction(1, prod) * (Fraction(1, j_min - 1) - Fraction(1, j_max))

    # -- a priori bounds ---------------------------------------------------

    def diameter_bound(self, n: int) -> Fraction:
        """Exact bound dominating every level-n interval length:
        (1/(s_1...s_n)) * 4*t_{n+1}/s_{n+1}**2."""
        if n < 1:
            raise DomainError(f"level must be >= 1, got {n}")
        self._require_conditions(n + 1)
        prod = Fraction(1)
        for k in range(1, n + 1):
            prod *= self.s(k)
        s_next, t_next = self.s(n + 1), self.t(n + 1)
        return (1 / prod) * (4 * t_next / s_next**2)

    def gap_bound(self, n: int) -> Fraction:
        """Exact bound below every gap at level n:
        1/(2**(n+3) * s_1...s_n * s_n)."""
        if n < 1:
            raise DomainError(f"level must be >= 1, got {n}")
        self._require_conditions(n)
        prod = Fraction(1)
        s_n = None
        for k in range(1, n + 1):
            s_n = self.s(k)
            prod *= s_n
        return Fraction(1, 2 ** (n + 3)) / (prod * s_n)

    def iter_level_quantities(self, depth: int) -> Iterator[LevelQuantities]:
        """Yield the quantities of levels 1..depth in one incremental sweep.

        Each sequence value is evaluated once, so this is the way to
        tabulate deep runs; per-level calls would redo the prefix work.
        """
        if depth < 1:
            raise DomainError(f"depth must be >= 1, got {depth}")
        self._require_conditions(depth + 1)
        prod_s = Fraction(1)
        count = 1
        branches: list[int] = []
        s_next, t_next = self.s(1), self.t(1)
        for n in range(1, depth + 1):
            s_n, t_n = s_next, t_next
            s_next, t_next = self.s(n + 1), self.t(n + 1)
            prod_s *= s_n
            m = floor(s_n + t_n) - floor(s_n)
            branches.append(m)
            count *= m
            yield LevelQuantities(
                n=n,
                count=count,
                branch_counts=tuple(branches),
                diameter_bound=4 * t_next / (prod_s * s_next**2),
                gap_bound=Fraction(1, 2 ** (n + 3)) / (prod_s * s_n),
            )

    def level_quantities(self, n: int) -> LevelQuantities:
        """Bundle count, branch counts, and both bounds for one level."""
        last = None
        for last in self.iter_level_quantities(n):
            pass
        return last


def _validated_pairs(pairs: Iterable) -> tuple[tuple[Fraction, Fraction], ...]:
    table = []
    for idx, pair in enumerate(pairs, start=1):
        try:
            s_val, t_val = pair
            entry = (Fraction(s_val), Fraction(t_val))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"pair {idx} is not a rational pair: {pair!r}") from exc
        if entry[0] <= 0 or entry[1] <= 0:
            raise DomainError(f"pair {idx} must be positive, got {pair!r}")
        table.append(entry)
    if not table:
        raise DomainError("a table family needs at least one (s, t) pair")
    return tuple(table)
