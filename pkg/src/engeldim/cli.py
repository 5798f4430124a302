"""Command-line front end.

Seven commands: digits, cylinder, check, level, quantities, dim, cover-fit.
Families are specified by --family plus kind-specific flags; numeric flag
values accept exact rationals written as "p/q" or plain integers.  A config
file (--config) supplies defaults as flat key = value lines whose keys are
the flag names without leading dashes; explicit flags win.

Output formats: text for reading, csv and json for machines.  Exact values
are serialized as "p/q" strings and quotient values as shortest round-trip
decimal strings, so identical configurations produce byte-identical output.
Exit codes: 0 success, 1 usage problem, 2 violated window conditions.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .construction import DEFAULT_LEVEL_LIMIT, SequenceFamily
from .dimension import DEFAULT_FIT_LIMIT, empirical_cover_fit, estimate_dimension
from .engel import (
    DigitWord,
    cylinder_interval,
    cylinder_length,
    engel_digits,
    reconstruct,
)
from .errors import (
    ConditionError,
    DomainError,
    EvaluationError,
    InvalidWordError,
    SizeLimitError,
    UsageError,
)
from .ratmath import parse_rational

_OUTPUTS = ("text", "csv", "json")

_FAMILY_OPTIONS = ("family", "s", "t", "s-coef", "t-coef", "theta", "pairs")

# which --flags each command accepts; config-file keys are validated
# against the same table
_COMMAND_OPTIONS: dict[str, tuple[str, ...]] = {
    "digits": ("x", "depth", "output", "config"),
    "cylinder": ("word", "output", "config"),
    "check": _FAMILY_OPTIONS + ("depth", "output", "config"),
    "level": _FAMILY_OPTIONS
    + ("depth", "limit", "sample", "seed", "output", "config"),
    "quantities": _FAMILY_OPTIONS + ("depth", "output", "config"),
    "dim": _FAMILY_OPTIONS + ("n-max", "tail-window", "output", "config"),
    "cover-fit": _FAMILY_OPTIONS + ("depths", "limit", "output", "config"),
}

_COMMAND_HELP = {
    "digits": "expand a rational into its digit sequence",
    "cylinder": "exact interval of points sharing a digit prefix",
    "check": "verify the window conditions of a family to a depth",
    "level": "enumerate or sample the basic intervals of one level",
    "quantities": "exact per-level counts and bounds of a family",
    "dim": "evaluate the dimension quotient sequences",
    "cover-fit": "fit log count against log inverse diameter",
}

_OPTION_HELP = {
    "x": "rational in (0, 1) to expand, written p/q",
    "depth": "digit cap, check depth, or level, depending on the command",
    "word": "comma-separated digit word, e.g. 3,4,7",
    "family": "family kind: geometric, power-geometric, explicit-pair",
    "s": "s-sequence ratio (geometric) or base (power-geometric)",
    "t": "t-sequence ratio (geometric)",
    "s-coef": "coefficient of the s sequence (geometric, default 1)",
    "t-coef": "coefficient of the t sequence (geometric, default 1)",
    "theta": "exponent for t_n = s^(theta*n) (power-geometric)",
    "pairs": "explicit (s, t) table, e.g. 4:2,16:4,64:8",
    "n-max": "last level to evaluate",
    "tail-window": "levels in the tail summary (default n-max/10)",
    "depths": "comma-separated fit depths (default 2,3,4,5,6)",
    "limit": "cap on materialized intervals "
    f"(default {DEFAULT_LEVEL_LIMIT}; {DEFAULT_FIT_LIMIT} for cover-fit)",
    "sample": "sample this many words instead of enumerating the level",
    "seed": "seed for sampling (default 0)",
    "output": "text, csv, or json (default text)",
    "config": "file of key = value defaults, keys are flag names",
}

# flags meaningful per family kind; anything else given is a mistake
_KIND_FLAGS = {
    "geometric": ("s", "t", "s-coef", "t-coef"),
    "power-geometric": ("s", "theta"),
    "explicit-pair": ("pairs",),
}


@dataclass(frozen=True)
class RunConfig:
    """Fully validated invocation: one command plus converted parameters."""

    command: str
    output: str
    x: Fraction | None = None
    depth: int | None = None
    word: tuple[int, ...] | None = None
    family: SequenceFamily | None = None
    n_max: int | None = None
    tail_window: int | None = None
    limit: int | None = None
    depths: tuple[int, ...] | None = None
    sample: int | None = None
    seed: int = 0


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; status 2 is reserved for
    # violated conditions here, so surface parse problems as usage errors
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="engeldim", allow_abbrev=False,
                     description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    for command, options in _COMMAND_OPTIONS.items():
        sub = subparsers.add_parser(
            command, help=_COMMAND_HELP[command], allow_abbrev=False
        )
        for name in options:
            sub.add_argument(f"--{name}", default=None, help=_OPTION_HELP[name])
    return parser


# -- config file and conversions ---------------------------------------


def _read_config_file(path: str, command: str) -> dict[str, str]:
    """Flat key = value lines; blank lines and # comments are skipped."""
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    allowed = set(_COMMAND_OPTIONS[command]) - {"config"}
    values: dict[str, str] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key = key.strip()
        value = value.strip()
        if key not in allowed:
            raise UsageError(
                f"{path}:{lineno}: unknown config key {key!r} for {command}"
            )
        if key in values:
            raise UsageError(f"{path}:{lineno}: duplicate config key {key!r}")
        values[key] = value
    return values


def _to_int(value: str, flag: str, minimum: int | None = None) -> int:
    try:
        number = int(str(value).strip())
    except ValueError:
        raise UsageError(f"--{flag} expects an integer, got {value!r}") from None
    if minimum is not None and number < minimum:
        raise UsageError(f"--{flag} must be >= {minimum}, got {number}")
    return number


def _to_rational(value: str, flag: str) -> Fraction:
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise UsageError(f"--{flag}: {exc}") from None


def _to_int_list(value: str, flag: str, minimum: int) -> tuple[int, ...]:
    parts = [p.strip() for p in str(value).split(",") if p.strip()]
    if not parts:
        raise UsageError(f"--{flag} expects comma-separated integers")
    return tuple(_to_int(part, flag, minimum) for part in parts)


def _to_pairs(value: str, flag: str) -> tuple[tuple[Fraction, Fraction], ...]:
    pairs = []
    for chunk in str(value).split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        left, sep, right = chunk.partition(":")
        if not sep:
            raise UsageError(
                f"--{flag} expects s:t pairs separated by commas, got {chunk!r}"
            )
        pairs.append((_to_rational(left, flag), _to_rational(right, flag)))
    if not pairs:
        raise UsageError(f"--{flag} supplied no pairs")
    return tuple(pairs)


def _require(opts: dict, key: str, command: str) -> str:
    value = opts.get(key)
    if value is None:
        raise UsageError(f"{command} requires --{key}")
    return value


def _build_family(opts: dict, command: str) -> SequenceFamily:
    kind = _require(opts, "family", command)
    if kind not in _KIND_FLAGS:
        raise UsageError(
            f"unknown family {kind!r}; choose from "
            + ", ".join(sorted(_KIND_FLAGS))
        )
    for flag in _FAMILY_OPTIONS[1:]:
        if opts.get(flag) is not None and flag not in _KIND_FLAGS[kind]:
            raise UsageError(f"--{flag} does not apply to a {kind} family")
    try:
        if kind == "geometric":
            family = SequenceFamily.geometric(
                _to_rational(_require(opts, "s", command), "s"),
                _to_rational(_require(opts, "t", command), "t"),
                _to_rational(opts.get("s-coef") or "1", "s-coef"),
                _to_rational(opts.get("t-coef") or "1", "t-coef"),
            )
        elif kind == "power-geometric":
            family = SequenceFamily.power_geometric(
                _to_rational(_require(opts, "s", command), "s"),
                _to_rational(_require(opts, "theta", command), "theta"),
            )
        else:
            family = SequenceFamily.from_pairs(
                _to_pairs(_require(opts, "pairs", command), "pairs")
            )
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    # the first window needs s_1 >= 2; cheaper to reject here than to fail
    # deep inside every command
    try:
        s_1 = family.s(1)
    except EvaluationError as exc:
        raise UsageError(str(exc)) from exc
    if s_1 < 2:
        raise UsageError(f"s_1 = {s_1} violates the window conditions (s_1 >= 2)")
    return family


def parse_config(argv: Sequence[str]) -> RunConfig:
    """Parse flags, merge the optional config file, convert and validate."""
    ns = build_parser().parse_args(list(argv))
    command = ns.command
    if command is None:
        raise UsageError(
            "missing command; choose from " + ", ".join(_COMMAND_OPTIONS)
        )
    opts = {
        name: getattr(ns, name.replace("-", "_"))
        for name in _COMMAND_OPTIONS[command]
    }
    if opts.get("config") is not None:
        for key, value in _read_config_file(opts["config"], command).items():
            if opts.get(key) is None:
                opts[key] = value

    output = opts.get("output") or "text"
    if output not in _OUTPUTS:
        raise UsageError(f"--output must be one of {', '.join(_OUTPUTS)}")

    if command == "digits":
        depth = opts.get("depth")
        return RunConfig(
            command=command,
            output=output,
            x=_to_rational(_require(opts, "x", command), "x"),
            depth=None if depth is None else _to_int(depth, "depth", 1),
        )
    if command == "cylinder":
        return RunConfig(
            command=command,
            output=output,
            word=_to_int_list(_require(opts, "word", command), "word", 2),
        )

    family = _build_family(opts, command)
    if command == "check":
        depth = opts.get("depth")
        return RunConfig(
            command=command,
            output=output,
            family=family,
            depth=50 if depth is None else _to_int(depth, "depth", 1),
        )
    if command == "level":
        sample = opts.get("sample")
        return RunConfig(
            command=command,
            output=output,
            family=family,
            depth=_to_int(_require(opts, "depth", command), "depth", 0),
            limit=_to_int(opts.get("limit") or str(DEFAULT_LEVEL_LIMIT), "limit", 1),
            sample=None if sample is None else _to_int(sample, "sample", 1),
            seed=_to_int(opts.get("seed") or "0", "seed"),
        )
    if command == "quantities":
        return RunConfig(
            command=command,
            output=output,
            family=family,
            depth=_to_int(_require(opts, "depth", command), "depth", 1),
        )
    if command == "dim":
        tail = opts.get("tail-window")
        return RunConfig(
            command=command,
            output=output,
            family=family,
            n_max=_to_int(_require(opts, "n-max", command), "n-max", 1),
            tail_window=None if tail is None else _to_int(tail, "tail-window", 1),
        )
    if command == "cover-fit":
        return RunConfig(
            command=command,
            output=output,
            family=family,
            depths=_to_int_list(opts.get("depths") or "2,3,4,5,6", "depths", 1),
            limit=_to_int(opts.get("limit") or str(DEFAULT_FIT_LIMIT), "limit", 1),
        )
    raise UsageError(f"unhandled command {command!r}")


# -- rendering helpers ---------------------------------------------------


def _fmt_bool(flag: bool) -> str:
    return "true" if flag else "false"


def _fmt_quot(value: float | None) -> str:
    return "" if value is None else repr(value)


def _json_doc(doc: dict) -> str:
    return json.dumps(doc, indent=2)


def _csv_rows(rows: list[list[str]]) -> str:
    return "\n".join(",".join(row) for row in rows)


def _family_header(family: SequenceFamily) -> list[str]:
    return [f"family: {family.description} ({family.kind})"]


def _family_doc(family: SequenceFamily) -> dict:
    return {"kind": family.kind, "description": family.description}


# -- command runners -----------------------------------------------------


def _run_digits(cfg: RunConfig) -> tuple[int, str]:
    result = engel_digits(cfg.x, cfg.depth)
    digits = list(result.digits)
    if cfg.output == "json":
        doc = {
            "command": "digits",
            "x": str(cfg.x),
            "depth": cfg.depth,
            "digits": digits,
            "terminated": result.terminated,
            "remainder": str(result.remainder),
        }
        return 0, _json_doc(doc)
    if cfg.output == "csv":
        rows = [["k", "digit"]]
        rows += [[str(k), str(d)] for k, d in enumerate(digits, start=1)]
        return 0, _csv_rows(rows)
    lines = [
        f"x: {cfg.x}",
        f"digits: {digits}",
        f"count: {len(digits)}",
        f"terminated: {_fmt_bool(result.terminated)}",
        f"remainder: {result.remainder}",
    ]
    return 0, "\n".join(lines)


def _run_cylinder(cfg: RunConfig) -> tuple[int, str]:
    word = DigitWord(cfg.word)
    interval = cylinder_interval(word)
    length = cylinder_length(word)
    value = reconstruct(word)
    if cfg.output == "json":
        doc = {
            "command": "cylinder",
            "word": list(word),
            "lo": str(interval.lo),
            "hi": str(interval.hi),
            "lo_closed": interval.lo_closed,
            "hi_closed": interval.hi_closed,
            "length": str(length),
            "reconstruction": str(value),
        }
        return 0, _json_doc(doc)
    if cfg.output == "csv":
        rows = [
            ["word", "lo", "hi", "length", "reconstruction"],
            [
                " ".join(str(d) for d in word),
                str(interval.lo),
                str(interval.hi),
                str(length),
                str(value),
            ],
        ]
        return 0, _csv_rows(rows)
    lines = [
        f"word: {list(word)}",
        f"interval: {interval}",
        f"length: {length}",
        f"reconstruction: {value}",
    ]
    return 0, "\n".join(lines)


def _run_check(cfg: RunConfig) -> tuple[int, str]:
    report = cfg.family.check_conditions(cfg.depth)
    code = 0 if report.all_ok else 2
    if cfg.output == "json":
        doc = {
            "command": "check",
            "family": _family_doc(cfg.family),
            "depth": report.depth,
            "bounds_ok": report.bounds_ok,
            "bounds_violation": report.bounds_violation,
            "growth_ok": report.growth_ok,
            "growth_violation": report.growth_violation,
            "divergence": report.divergence,
            "all_ok": report.all_ok,
        }
        return code, _json_doc(doc)
    if cfg.output == "csv":
        rows = [
            [
                "depth",
                "bounds_ok",
                "bounds_violation",
                "growth_ok",
                "growth_violation",
                "divergence",
            ],
            [
                str(report.depth),
                _fmt_bool(report.bounds_ok),
                "" if report.bounds_violation is None else str(report.bounds_violation),
                _fmt_bool(report.growth_ok),
                "" if report.growth_violation is None else str(report.growth_violation),
                report.divergence,
            ],
        ]
        return code, _csv_rows(rows)

    def verdict(ok: bool, index: int | None) -> str:
        return "ok" if ok else f"FAIL at n = {index}"

    lines = _family_header(cfg.family) + [
        f"depth checked: {report.depth}",
        f"bounds s_n >= t_n >= 2: {verdict(report.bounds_ok, report.bounds_violation)}",
        "growth s_{n+1} >= s_n + t_n: "
        + verdict(report.growth_ok, report.growth_violation),
        f"divergence of s_n: {report.divergence}",
        f"all conditions: {'ok' if report.all_ok else 'FAIL'}",
    ]
    return code, "\n".join(lines)


def _run_level(cfg: RunConfig) -> tuple[int, str]:
    family = cfg.family
    n = cfg.depth
    if cfg.sample is not None:
        rng = random.Random(cfg.seed)
        words = family.sample_words(n, cfg.sample, rng)
        intervals = [family.basic_interval(w) for w in words]
        count = family.word_count(n)
        if cfg.output == "json":
            doc = {
                "command": "level",
                "family": _family_doc(family),
                "n": n,
                "count": str(count),
                "sample": cfg.sample,
                "seed": cfg.seed,
                "words": [list(w) for w in words],
                "intervals": [
                    {"lo": str(iv.lo), "hi": str(iv.hi)} for iv in intervals
                ],
            }
            return 0, _json_doc(doc)
        if cfg.output == "csv":
            rows = [["index", "word", "lo", "hi", "length"]]
            for idx, (w, iv) in enumerate(zip(words, intervals), start=1):
                rows.append(
                    [
                        str(idx),
                        " ".join(str(d) for d in w),
                        str(iv.lo),
                        str(iv.hi),
                        str(iv.length),
                    ]
                )
            return 0, _csv_rows(rows)
        lines = _family_header(family) + [
            f"level: {n}",
            f"count: {count}",
            f"sample: {cfg.sample} (seed {cfg.seed})",
        ]
        for w, iv in zip(words, intervals):
            lines.append(f"  {','.join(str(d) for d in w)} -> {iv}")
        return 0, "\n".join(lines)

    intervals = family.level_intervals(n, cfg.limit)
    gap = family.min_gap(n, cfg.limit) if n >= 1 else None
    max_length = max(iv.length for iv in intervals)
    if cfg.output == "json":
        doc = {
            "command": "level",
            "family": _family_doc(family),
            "n": n,
            "count": len(intervals),
            "min_gap": None if gap is None else str(gap),
            "max_length": str(max_length),
            "intervals": [{"lo": str(iv.lo), "hi": str(iv.hi)} for iv in intervals],
        }
        return 0, _json_doc(doc)
    if cfg.output == "csv":
        rows = [["index", "lo", "hi", "length"]]
        for idx, iv in enumerate(intervals, start=1):
            rows.append([str(idx), str(iv.lo), str(iv.hi), str(iv.length)])
        return 0, _csv_rows(rows)
    lines = _family_header(family) + [
        f"level: {n}",
        f"count: {len(intervals)}",
        f"min gap: {'none' if gap is None else gap}",
        f"max length: {max_length}",
        "intervals:",
    ]
    lines += [f"  {iv}" for iv in intervals]
    return 0, "\n".join(lines)


def _run_quantities(cfg: RunConfig) -> tuple[int, str]:
    levels = list(cfg.family.iter_level_quantities(cfg.depth))
    if cfg.output == "json":
        doc = {
            "command": "quantities",
            "family": _family_doc(cfg.family),
            "depth": cfg.depth,
            "levels": [
                {
                    "n": lq.n,
                    "m_n": lq.branch_counts[-1],
                    "N_n": str(lq.count),
                    "delta_n": str(lq.diameter_bound),
                    "epsilon_n": str(lq.gap_bound),
                }
                for lq in levels
            ],
        }
        return 0, _json_doc(doc)
    rows = [["n", "m_n", "N_n", "delta_n", "epsilon_n"]]
    for lq in levels:
        rows.append(
            [
                str(lq.n),
                str(lq.branch_counts[-1]),
                str(lq.count),
                str(lq.diameter_bound),
                str(lq.gap_bound),
            ]
        )
    if cfg.output == "csv":
        return 0, _csv_rows(rows)
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = _family_header(cfg.family)
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return 0, "\n".join(lines)


def _run_dim(cfg: RunConfig) -> tuple[int, str]:
    report = estimate_dimension(cfg.family, cfg.n_max, cfg.tail_window)
    if cfg.output == "text":
        lines = _family_header(cfg.family) + [
            f"n_max: {report.n_max}",
            f"tail window: {report.tail_window}",
            f"estimated dim: {_fmt_quot(report.estimated_dim)}",
            f"tail min formula quotient: {_fmt_quot(report.tail_min_formula)}",
            f"monotone tail: {_fmt_bool(report.monotone_tail)}",
            f"note: {report.caveat}",
        ]
        shown = min(10, report.n_max)
        lines.append(f"last {shown} levels (n, formula, upper, lower):")
        for n in range(report.n_max - shown + 1, report.n_max + 1):
            lines.append(
                f"  {n}  {_fmt_quot(report.formula[n - 1])}"
                f"  {_fmt_quot(report.upper[n - 1])}"
                f"  {_fmt_quot(report.lower[n - 1]) or 'none'}"
            )
        return 0, "\n".join(lines)

    # machine formats carry the exact per-level quantities next to the
    # floating quotients; these strings grow quickly with n
    exact = cfg.family.iter_level_quantities(cfg.n_max)
    if cfg.output == "csv":
        rows = [["n", "F_n", "upper_n", "lower_n", "N_n", "delta_n", "epsilon_n"]]
        for lq in exact:
            i = lq.n - 1
            rows.append(
                [
                    str(lq.n),
                    _fmt_quot(report.formula[i]),
                    _fmt_quot(report.upper[i]),
                    _fmt_quot(report.lower[i]),
                    str(lq.count),
                    str(lq.diameter_bound),
                    str(lq.gap_bound),
                ]
            )
        return 0, _csv_rows(rows)
    doc = {
        "command": "dim",
        "family": _family_doc(cfg.family),
        "n_max": report.n_max,
        "tail_window": report.tail_window,
        "estimated_dim": _fmt_quot(report.estimated_dim),
        "tail_min_formula": _fmt_quot(report.tail_min_formula),
        "monotone_tail": report.monotone_tail,
        "caveat": report.caveat,
        "levels": [
            {
                "n": lq.n,
                "F_n": _fmt_quot(report.formula[lq.n - 1]),
                "upper_n": _fmt_quot(report.upper[lq.n - 1]),
                "lower_n": (
                    None
                    if report.lower[lq.n - 1] is None
                    else _fmt_quot(report.lower[lq.n - 1])
                ),
                "N_n": str(lq.count),
                "delta_n": str(lq.diameter_bound),
                "epsilon_n": str(lq.gap_bound),
            }
            for lq in exact
        ],
    }
    return 0, _json_doc(doc)


def _run_cover_fit(cfg: RunConfig) -> tuple[int, str]:
    result = empirical_cover_fit(cfg.family, cfg.depths, cfg.limit)
    if cfg.output == "json":
        doc = {
            "command": "cover-fit",
            "family": _family_doc(cfg.family),
            "depths": list(result.depths),
            "slope": _fmt_quot(result.slope),
            "points": [
                {
                    "depth": d,
                    "log_count": _fmt_quot(y),
                    "log_inv_diameter": _fmt_quot(x),
                }
                for d, y, x in zip(
                    result.depths, result.log_counts, result.log_inv_diameters
                )
            ],
        }
        return 0, _json_doc(doc)
    if cfg.output == "csv":
        rows = [["depth", "log_count", "log_inv_diameter", "slope"]]
        for d, y, x in zip(
            result.depths, result.log_counts, result.log_inv_diameters
        ):
            rows.append([str(d), _fmt_quot(y), _fmt_quot(x), _fmt_quot(result.slope)])
        return 0, _csv_rows(rows)
    lines = _family_header(cfg.family) + [
        f"depths: {', '.join(str(d) for d in result.depths)}",
        f"slope: {_fmt_quot(result.slope)}",
        "points (depth, log count, log 1/diameter):",
    ]
    for d, y, x in zip(result.depths, result.log_counts, result.log_inv_diameters):
        lines.append(f"  {d}  {_fmt_quot(y)}  {_fmt_quot(x)}")
    return 0, "\n".join(lines)


_RUNNERS = {
    "digits": _run_digits,
    "cylinder": _run_cylinder,
    "check": _run_check,
    "level": _run_level,
    "quantities": _run_quantities,
    "dim": _run_dim,
    "cover-fit": _run_cover_fit,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a validated config; returns (exit code, rendered report)."""
    return _RUNNERS[cfg.command](cfg)


def main(argv: Sequence[str] | None = None) -> int:
    # exact counts and bounds overflow the interpreter's default cap on
    # int-to-string conversion; lift it before any rendering
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        cfg = parse_config(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        code, text = run(cfg)
    except ConditionError as exc:
        print(f"condition violation: {exc}", file=sys.stderr)
        return 2
    except (DomainError, InvalidWordError, SizeLimitError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if text:
        print(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
