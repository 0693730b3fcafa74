"""``hawking-qfi`` command line: eval, sweep, verify and figure recipes.

Exit codes: 0 success, 1 configuration error, 2 verification FAIL,
3 numeric failure.
"""
from __future__ import annotations

import argparse
import math
import re
import sys

from .closed_forms import REGROUPED, VARIANTS
from .errors import QfiError
from .families import DEFAULT_ASSIGNMENT
from .qfi import DEFAULT_EPS, DEFAULT_STEP
from .state import ASSIGNMENTS
from .sweep import (
    CHANNELS,
    HEADER,
    METHODS,
    OK,
    PARAMETERS,
    ConfigError,
    Grid,
    SweepConfig,
    evaluate_point,
    fmt,
    rows_to_csv,
    run_sweep,
)
from .verify import DEFAULT_POINTS, DEFAULT_SEED, run_verify

EXIT_OK, EXIT_CONFIG, EXIT_FAIL, EXIT_NUMERIC = 0, 1, 2, 3

# figure recipes fix omega, gamma0 and Q at values where every grid point is physical
FIGURE_BATH = {"Q": 0.5, "gamma0": 0.5, "omega": 5.0}
TEMPS = "0.5:5:50"
FIGURES = {
    3: ("sgad", {"r": 1.0, "theta": 0.0}, (("T_C", TEMPS), ("T_H", TEMPS))),
    4: ("sgad", {"r": 0.0}, (("theta", "0:pi/2:7"), ("T_C", "0.5:5:20"), ("T_H", "0.5:5:20"))),
    5: ("sgad", {"r": 0.0, "theta": math.pi / 4}, (("T_C", TEMPS), ("T_H", TEMPS))),
    6: ("sgad", {"r": 0.0, "theta": math.pi / 4}, (("T_H", "0.5:5:10"), ("T_C", TEMPS))),
    7: ("gad", {"theta": math.pi / 4}, (("T_C", TEMPS), ("T_H", TEMPS))),
    8: ("gad", {"theta": math.pi / 4}, (("T_H", "0.5:5:10"), ("T_C", TEMPS))),
    9: ("ad", {"theta": math.pi / 4}, (("T_H", "0.5:5:5"), ("lambda", "0:1:101"))),
}
# recipes whose phase column is scanned for interior peaks along T_C
PEAK_SCAN = (6, 8)

_PI = re.compile(r"^([+-])?\s*((?:\d+\.?\d*|\.\d+)(?:e[+-]?\d+)?)?\s*\*?\s*pi(?:\s*/\s*(\d+\.?\d*))?$", re.I)


def parse_number(text: str, name: str = "value") -> float:
    """A float, or a multiple of pi such as ``pi/4`` or ``3*pi/4``."""
    s = text.strip()
    try:
        return float(s)
    except ValueError:
        pass
    m = _PI.match(s)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        coef = float(m.group(2)) if m.group(2) else 1.0
        div = float(m.group(3)) if m.group(3) else 1.0
        return sign * coef * math.pi / div
    raise ConfigError(f"{name}: cannot parse number {text!r}")


def parse_grid(name: str, spec: str) -> Grid:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ConfigError(f"{name}: grid must be start:stop:count, got {spec!r}")
    try:
        count = int(parts[2])
    except ValueError:
        raise ConfigError(f"{name}: grid count must be an integer, got {parts[2]!r}") from None
    return Grid(name, parse_number(parts[0], name), parse_number(parts[1], name), count)


def _split_assignment(text: str, flag: str) -> tuple[str, str]:
    if "=" not in text:
        raise ConfigError(f"{flag} expects name=value, got {text!r}")
    name, value = (t.strip() for t in text.split("=", 1))
    if name not in PARAMETERS:
        raise ConfigError(f"{flag}: unknown parameter {name!r}; expected one of {', '.join(PARAMETERS)}")
    return name, value


_OPTION_KEYS = {
    "channel": "channel", "fd-step": "fd_step", "fd_step": "fd_step",
    "support-eps": "support_eps", "support_eps": "support_eps", "out": "out",
    "expression-variant": "expression_variant", "expression_variant": "expression_variant",
    "assignment": "assignment", "method": "method", "workers": "workers",
    "points": "points", "seed": "seed",
}


def read_config(path: str) -> tuple[dict, dict]:
    """``key = value`` lines. Parameter keys take a number or a grid.

    Returns (options, parameters); parameters map a name to a number
    string or a ``start:stop:count`` string, in file order.
    """
    options, params = {}, {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (t.strip() for t in line.split("=", 1))
        if key in PARAMETERS:
            params[key] = value
        elif key in _OPTION_KEYS:
            options[_OPTION_KEYS[key]] = value
        else:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    return options, params


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


W_OVER_T_NOTE = (
    "The Hawking factor in the closed forms uses w/T = omega / T_H; the channel "
    "temperature T_C enters only through lambda, mu and v."
)


def _common(p: argparse.ArgumentParser, grids: bool = True) -> None:
    p.add_argument("--config", help="file of 'key = value' lines; flags override it")
    p.add_argument("--channel", choices=CHANNELS)
    p.add_argument("--set", action="append", default=[], metavar="NAME=VALUE",
                   help=f"fix a parameter ({', '.join(PARAMETERS)}); repeatable")
    if grids:
        p.add_argument("--vary", action="append", default=[], metavar="NAME=START:STOP:COUNT",
                       help="scan a parameter on a linear grid; repeatable")
    p.add_argument("--fd-step", type=float, help=f"finite-difference step (default {DEFAULT_STEP})")
    p.add_argument("--support-eps", type=float, help=f"eigenvalue support cutoff (default {DEFAULT_EPS})")
    p.add_argument("--out", help="write CSV here instead of standard output")
    p.add_argument("--expression-variant", choices=VARIANTS,
                   help="grouping of the SGAD weight expression (default regrouped)")
    p.add_argument("--assignment", choices=ASSIGNMENTS,
                   help=f"amplitude assignment of the numeric state (default {DEFAULT_ASSIGNMENT})")
    p.add_argument("--method", choices=METHODS, help="numeric QFI route (default sld)")
    p.add_argument("--workers", type=int, help="worker processes for grid points (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hawking-qfi", description="Evaluate, sweep and verify QFI closed forms.",
                     epilog=W_OVER_T_NOTE)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one fully fixed point", epilog=W_OVER_T_NOTE)
    _common(p, grids=False)
    p = sub.add_parser("sweep", help="evaluate a parameter grid to CSV", epilog=W_OVER_T_NOTE)
    _common(p)
    p = sub.add_parser("verify", help="compare closed forms with the numeric engine")
    p.add_argument("--config")
    p.add_argument("--fd-step", type=float)
    p.add_argument("--support-eps", type=float)
    p.add_argument("--assignment", choices=ASSIGNMENTS)
    p.add_argument("--points", type=int, help=f"random grid size (default {DEFAULT_POINTS})")
    p.add_argument("--seed", type=int, help=f"random grid seed (default {DEFAULT_SEED})")
    p.add_argument("--out", help="also write the report as CSV")
    p.add_argument("--expression-variant", choices=VARIANTS,
                   help="accepted for symmetry; both groupings are always reported")
    p = sub.add_parser("figure", help="canned sweep recipe, numbered 3 to 9", epilog=W_OVER_T_NOTE)
    p.add_argument("number", type=int, choices=sorted(FIGURES))
    _common(p)
    return parser


def _merge(args, base_params: dict | None = None) -> tuple[dict, dict]:
    """Options and parameters from config file, recipe and flags, in that precedence."""
    options, params = {}, dict(base_params or {})
    if getattr(args, "config", None):
        file_opts, file_params = read_config(args.config)
        options.update(file_opts)
        params.update(file_params)
    for key in _OPTION_KEYS.values():
        value = getattr(args, key, None)
        if value is not None:
            options[key] = value
    cli = {}
    for text in getattr(args, "set", []):
        name, value = _split_assignment(text, "--set")
        if name in cli:
            raise ConfigError(f"parameter {name} given twice on the command line")
        cli[name] = value
    for text in getattr(args, "vary", []):
        name, value = _split_assignment(text, "--vary")
        if name in cli:
            raise ConfigError(f"parameter {name} given twice on the command line")
        if value.count(":") != 2:
            raise ConfigError(f"--vary {name}: expected start:stop:count, got {value!r}")
        cli[name] = value
    params.update(cli)
    return options, params


def _option(options: dict, key: str, cast, default):
    if key not in options:
        return default
    try:
        return cast(options[key])
    except (TypeError, ValueError):
        raise ConfigError(f"{key}: invalid value {options[key]!r}") from None


def make_config(options: dict, params: dict, channel_default: str = "sgad") -> SweepConfig:
    fixed, vary = {}, []
    for name, value in params.items():
        if isinstance(value, str) and ":" in value:
            vary.append(parse_grid(name, value))
        elif isinstance(value, str):
            fixed[name] = parse_number(value, name)
        else:
            fixed[name] = float(value)
    cfg = SweepConfig(
        channel=options.get("channel", channel_default),
        vary=tuple(vary),
        fixed=fixed,
        fd_step=_option(options, "fd_step", float, DEFAULT_STEP),
        support_eps=_option(options, "support_eps", float, DEFAULT_EPS),
        output_path=options.get("out"),
        method=options.get("method", "sld"),
        assignment=options.get("assignment", DEFAULT_ASSIGNMENT),
        workers=_option(options, "workers", int, 1),
    )
    return cfg.validate()


def _variant(options: dict) -> str:
    v = options.get("expression_variant", REGROUPED)
    if v not in VARIANTS:
        raise ConfigError(f"expression-variant must be one of {', '.join(VARIANTS)}, got {v!r}")
    return v


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc.strerror}") from None


def cmd_eval(args) -> int:
    options, params = _merge(args)
    cfg = make_config(options, params)
    if cfg.vary:
        raise ConfigError("eval takes fixed parameters only; use sweep for grids")
    point = next(cfg.grid())
    row = evaluate_point(cfg, point, _variant(options))
    cells = row.cells()
    width = max(len(h) for h in HEADER)
    text = "".join(f"{h:<{width}}  {c}\n" for h, c in zip(HEADER, cells))
    csv_text = rows_to_csv([row])
    sys.stdout.write(text + "\n" + csv_text.splitlines()[1] + "\n")
    if cfg.output_path:
        _emit(csv_text, cfg.output_path)
    return EXIT_OK


def cmd_sweep(args, base_params=None, channel_default="sgad", summary=None) -> int:
    options, params = _merge(args, base_params)
    cfg = make_config(options, params, channel_default)
    if not cfg.vary:
        raise ConfigError("sweep needs at least one --vary grid")
    rows = run_sweep(cfg, _variant(options))
    _emit(rows_to_csv(rows), cfg.output_path)
    info = sys.stdout if cfg.output_path else sys.stderr
    counts = {}
    for r in rows:
        counts[r.status] = counts.get(r.status, 0) + 1
    info.write(f"{len(rows)} rows: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())) + "\n")
    if summary is not None:
        summary(cfg, rows, info)
    return EXIT_OK


def interior_peaks(xs, ys) -> list[int]:
    """Indices of strict interior local maxima."""
    return [i for i in range(1, len(ys) - 1) if ys[i] > ys[i - 1] and ys[i] > ys[i + 1]]


def _peak_summary(cfg: SweepConfig, rows, out) -> None:
    by_th = {}
    for r in rows:
        if r.status == OK:
            by_th.setdefault(r.params["T_H"], []).append((r.params["T_C"], r.qfi_phi_numeric))
    for th, series in by_th.items():
        xs, ys = zip(*series)
        peaks = interior_peaks(xs, ys)
        where = ", ".join(f"T_C={fmt(xs[i])} (value {fmt(ys[i])})" for i in peaks) or "none"
        out.write(f"T_H={fmt(th)}: interior maxima of qfi_phi_numeric along T_C: {where}\n")


def cmd_figure(args) -> int:
    channel, fixed, grids = FIGURES[args.number]
    base = {**FIGURE_BATH, **fixed}
    base.update({name: spec for name, spec in grids})
    # stdout carries the CSV when no --out is given
    info = sys.stdout if args.out else sys.stderr
    shown = ", ".join(f"{k}={fmt(v)}" if not isinstance(v, str) else f"{k}={v}" for k, v in base.items())
    info.write(f"figure {args.number} recipe: channel={channel}, {shown}\n")
    summary = _peak_summary if args.number in PEAK_SCAN else None
    if args.channel is None:
        args.channel = channel
    return cmd_sweep(args, base, channel, summary)


def cmd_verify(args) -> int:
    options, _ = _merge(args)
    points = _option(options, "points", int, DEFAULT_POINTS)
    if points < 1:
        raise ConfigError(f"points must be >= 1, got {points}")
    assignment = options.get("assignment", DEFAULT_ASSIGNMENT)
    if assignment not in ASSIGNMENTS:
        raise ConfigError(f"assignment must be one of {', '.join(ASSIGNMENTS)}, got {assignment!r}")
    report = run_verify(
        points=points,
        seed=_option(options, "seed", int, DEFAULT_SEED),
        h=_option(options, "fd_step", float, DEFAULT_STEP),
        eps=_option(options, "support_eps", float, DEFAULT_EPS),
        assignment=assignment,
    )
    sys.stdout.write(report.text())
    if options.get("out"):
        _emit(report.csv(), options["out"])
    return EXIT_FAIL if report.failed else EXIT_OK


COMMANDS = {"eval": cmd_eval, "sweep": cmd_sweep, "verify": cmd_verify, "figure": cmd_figure}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"hawking-qfi: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except QfiError as exc:
        print(f"hawking-qfi: numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
