"""Dimension estimates for the digit-window constructions.

Three quotient sequences are evaluated from exact level data.  The formula
quotient F_n compares accumulated log t against accumulated log s.  The
upper quotient comes from covering a level by its own intervals: count
N_n against the diameter bound delta_n.  The lower quotient comes from the
separation of a level: counts through n-1 against the gap quantity
m_n * epsilon_n.  Under the window conditions all three converge to the
same limit; at finite depth they differ, which is why the report carries
all of them.

Counts, floors, and bounds stay exact; only the final logarithm of each
exact quantity is floated, through a guard-digit conversion, so quotient
values carry ordinary double precision.  The quotients are ratios of
logarithms and therefore base-independent; natural base is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor, log
from typing import Sequence

from .construction import SequenceFamily
from .errors import DomainError, SizeLimitError
from .ratmath import log_rational

# how the headline number of a report must be read
PROXY_CAVEAT = (
    "finite-prefix proxy: the minimum of the formula quotient over the "
    "tail window, not a certified limit"
)

# cover fits use closed forms, never enumeration, so their cap can sit
# well above the level-enumeration default and still only guard absurdity
DEFAULT_FIT_LIMIT = 2**24

LOG2 = log(2)
LOG4 = log(4)


@dataclass(frozen=True)
class DimensionReport:
    """All three quotient sequences up to n_max, plus the tail summary.

    Entry k of each list is the value at level k+1; the lower sequence is
    undefined at level 1 and holds None there.  estimated_dim equals
    tail_min_formula and is only a proxy for the limiting value, as the
    caveat field states.  monotone_tail reports whether the formula
    quotient was non-decreasing across the tail window; a False value
    means the tail minimum may sit well below the eventual limit.
    """

    n_max: int
    tail_window: int
    formula: tuple[float, ...]
    upper: tuple[float, ...]
    lower: tuple[float | None, ...]
    tail_min_formula: float
    monotone_tail: bool
    estimated_dim: float
    caveat: str = PROXY_CAVEAT


@dataclass(frozen=True)
class CoverFitResult:
    """Proportional fit of log count against log inverse diameter."""

    slope: float
    depths: tuple[int, ...]
    log_counts: tuple[float, ...]
    log_inv_diameters: tuple[float, ...]


def formula_quotient(f: SequenceFamily, n: int) -> float:
    """F_n = (sum of log t_k, k <= n) over
    (sum of log s_k, k <= n+1) + log s_{n+1} - log t_{n+1}."""
    if n < 1:
        raise DomainError(f"level must be >= 1, got {n}")
    f._require_conditions(n + 1)
    num = 0.0
    den = 0.0
    for k in range(1, n + 2):
        log_s = log_rational(f.s(k))
        log_t = log_rational(f.t(k))
        den += log_s
        if k <= n:
            num += log_t
        else:
            den += log_s - log_t
    return num / den


def upper_bound_quotient(f: SequenceFamily, n: int) -> float:
    """log N_n over -log delta_n, both quantities exact."""
    if n < 1:
        raise DomainError(f"level must be >= 1, got {n}")
    count = f.word_count(n)
    delta = f.diameter_bound(n)
    return log_rational(count) / -log_rational(delta)


def lower_bound_quotient(f: SequenceFamily, n: int) -> float:
    """log(m_1...m_{n-1}) over -log(m_n * epsilon_n); needs n >= 2.

    At n = 1 the numerator product is empty and the quotient is undefined.
    """
    if n < 2:
        raise DomainError(f"lower quotient needs level >= 2, got {n}")
    f._require_conditions(n)
    num = 0.0
    for k in range(1, n):
        num += log_rational(f.branch_count(k))
    m_n = f.branch_count(n)
    eps = f.gap_bound(n)
    return num / -log_rational(m_n * eps)


def estimate_dimension(f: SequenceFamily, n_max: int,
                       tail_window: int | None = None) -> DimensionReport:
    """Evaluate all three sequences up to n_max in one pass.

    tail_window defaults to a tenth of n_max (at least 1).  The estimate
    is the minimum of the formula quotient over the final tail_window
    levels; it proxies a limit infimum and the report says so.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if tail_window is None:
        tail_window = max(1, n_max // 10)
    if not 1 <= tail_window <= n_max:
        raise DomainError(
            f"tail_window must lie in [1, {n_max}], got {tail_window}"
        )
    f._require_conditions(n_max + 1)

    # one shared sweep: prefix sums of the floated logs; every floor and
    # branch count is computed exactly before its log is taken
    log_s: list[float] = [0.0]  # 1-indexed
    log_t: list[float] = [0.0]
    log_m: list[float] = [0.0]
    for k in range(1, n_max + 2):
        s_k, t_k = f.s(k), f.t(k)
        log_s.append(log_rational(s_k))
        log_t.append(log_rational(t_k))
        m_k = floor(s_k + t_k) - floor(s_k)
        log_m.append(log_rational(m_k))

    formula: list[float] = []
    upper: list[float] = []
    lower: list[float | None] = []
    sum_log_s = 0.0
    sum_log_t = 0.0
    sum_log_m = 0.0
    for n in range(1, n_max + 1):
        prev_sum_log_m = sum_log_m
        sum_log_s += log_s[n]
        sum_log_t += log_t[n]
        sum_log_m += log_m[n]
        den_formula = sum_log_s + 2 * log_s[n + 1] - log_t[n + 1]
        formula.append(sum_log_t / den_formula)
        # -log delta_n with delta_n = (1/(s_1...s_n)) * 4 t_{n+1} / s_{n+1}^2
        neg_log_delta = sum_log_s + 2 * log_s[n + 1] - log_t[n + 1] - LOG4
        upper.append(sum_log_m / neg_log_delta)
        if n == 1:
            lower.append(None)
        else:
            # -log(m_n * epsilon_n), epsilon_n = 2^-(n+3) / (s_1...s_n * s_n)
            neg_log_gap = (n + 3) * LOG2 + sum_log_s + log_s[n] - log_m[n]
            lower.append(prev_sum_log_m / neg_log_gap)

    tail = formula[-tail_window:]
    tail_min = min(tail)
    monotone = all(a <= b for a, b in zip(tail, tail[1:]))
    return DimensionReport(
        n_max=n_max,
        tail_window=tail_window,
        formula=tuple(formula),
        upper=tuple(upper),
        lower=tuple(lower),
        tail_min_formula=tail_min,
        monotone_tail=monotone,
        estimated_dim=tail_min,
    )


def empirical_cover_fit(f: SequenceFamily, depths: Sequence[int],
                        limit: int | None = DEFAULT_FIT_LIMIT) -> CoverFitResult:
    """Slope of log N_n against -log(max level-n interval length).

    The relation has no additive offset (one interval of unit diameter
    would contribute the origin), so the least-squares line is constrained
    through the origin and its slope is directly comparable to the
    quotient sequences at the same depths.
    """
    depth_list = tuple(int(d) for d in depths)
    if len(depth_list) < 2:
        raise DomainError("cover fit needs at least two depths")
    if any(d < 1 for d in depth_list):
        raise DomainError(f"depths must be >= 1, got {list(depth_list)}")
    xs: list[float] = []
    ys: list[float] = []
    for d in depth_list:
        count = f.word_count(d)
        if limit is not None and count > limit:
            raise SizeLimitError(
                count, limit, f"depth {d} holds {count} intervals, limit {limit}"
            )
        xs.append(-log_rational(f.max_interval_length(d)))
        ys.append(log_rational(count))
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    return CoverFitResult(
        slope=sxy / sxx,
        depths=depth_list,
        log_counts=tuple(ys),
        log_inv_diameters=tuple(xs),
    )
