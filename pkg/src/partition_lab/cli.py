"""Command-line adapter over the counting, series, bijection and verify modules.

Subcommands: ``count``, ``map``, ``table29``, ``gf``, ``verify``.  Settings
come from flags, then ``PIL_*`` environment variables, then defaults.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from . import bijection, counting, qseries, verify
from .counting import d_index, o_index
from .partition_core import ParseError, format_partition, parse_partition

ENV_PREFIX = "PIL_"
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    trunc: int = 40
    cache: Optional[str] = None
    format: Optional[str] = None
    nmax: Optional[int] = None
    jmax: Optional[int] = None
    kset: Optional[tuple[int, ...]] = None
    bset: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise UsageError("truncation order must be >= 0")
        if self.format is not None and self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        for name in ("nmax", "jmax"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise UsageError(f"--{name} must be nonnegative")


def _int_set(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None
    if not values:
        raise UsageError("empty integer list")
    return values


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected n0..n1") from None


def resolve_config(args: argparse.Namespace, environ=os.environ) -> Config:
    def pick(flag, env: str, convert):
        if flag is not None:
            return flag
        raw = environ.get(ENV_PREFIX + env)
        if raw is None or raw == "":
            return None
        try:
            return convert(raw)
        except ValueError:
            raise UsageError(f"bad value {raw!r} for {ENV_PREFIX}{env}") from None

    values = dict(
        trunc=pick(args.trunc, "TRUNC", int),
        cache=pick(args.cache, "CACHE", str),
        format=pick(args.format, "FORMAT", str),
        nmax=pick(args.nmax, "NMAX", int),
        jmax=pick(args.jmax, "JMAX", int),
        kset=pick(args.kset, "KSET", _int_set),
        bset=pick(args.bset, "BSET", _int_set),
    )
    return Config(**{k: v for k, v in values.items() if v is not None})


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- count -------------------------------------------------------------------

def cmd_count(args: argparse.Namespace, cfg: Config) -> int:
    if args.range is not None:
        ns = _int_range(args.range)
    elif args.n is not None:
        ns = range(args.n, args.n + 1)
    else:
        raise UsageError("count needs N or --range n0..n1")

    cache = None
    if cfg.cache and os.path.exists(cfg.cache):
        try:
            cache = counting.CountTable.from_csv(cfg.cache)
        except ValueError as exc:
            raise UsageError(f"unreadable cache {cfg.cache}: {exc}") from None
    rows = []
    for n in ns:
        key = (args.family, args.j, args.k, args.b, args.t, args.m, n)
        value = cache.lookup(*key) if cache else None
        if value is None:
            try:
                value = counting.count_family(args.family, args.j, args.k, args.b, n,
                                              t=args.t, m=args.m, u=args.u)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        rows.append(counting.CountRow(*key, value))

    if cfg.cache:
        table = cache or counting.CountTable()
        table.merge(rows)
        table.to_csv(cfg.cache)

    fmt = cfg.format or "text"
    if fmt == "json":
        payload = [{"family": r.family, "j": r.j, "k": r.k, "b": r.b, "t": r.t,
                    "m": r.m, "u": args.u, "n": r.n, "value": r.value} for r in rows]
        _emit(json.dumps(payload[0] if args.range is None else payload))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(counting.CSV_HEADER)
        for r in rows:
            writer.writerow(["" if v is None else v for v in
                             (r.family, r.j, r.k, r.b, r.t, r.m, r.n, r.value)])
        _emit(buf.getvalue())
    elif args.range is None:
        _emit(str(rows[0].value))
    else:
        width = max(len(str(r.n)) for r in rows)
        _emit("\n".join(f"{r.n:>{width}}  {r.value}" for r in rows))
    return 0


# -- map ---------------------------------------------------------------------

def _classify(pi, k: int, b: int) -> dict:
    return {"partition": format_partition(pi), "n": pi.weight,
            "j_O": o_index(pi, k, b), "j_D": d_index(pi, k, b)}


def cmd_map(args: argparse.Namespace, cfg: Config) -> int:
    try:
        pi = parse_partition(args.partition)
    except ParseError as exc:
        raise UsageError(f"parse error: {exc}") from None
    if args.k < 1 or args.b < 1:
        raise UsageError("k and b must be >= 1")
    fn = bijection.phi if args.direction == "phi" else bijection.psi
    image = fn(pi, args.k, args.b)
    src, dst = _classify(pi, args.k, args.b), _classify(image, args.k, args.b)
    fmt = cfg.format or "text"
    if fmt == "json":
        _emit(json.dumps({"direction": args.direction, "k": args.k, "b": args.b,
                          "input": src, "image": dst}))
        return 0
    src_side, dst_side = ("O", "D") if args.direction == "phi" else ("D", "O")
    _emit(dst["partition"])
    _emit(f"input: {src_side}_{{{src['j_' + src_side]},{args.k},{args.b}}}({src['n']})  "
          f"[j_O={src['j_O']} j_D={src['j_D']}]")
    _emit(f"image: {dst_side}_{{{dst['j_' + dst_side]},{args.k},{args.b}}}({dst['n']})  "
          f"[j_O={dst['j_O']} j_D={dst['j_D']}]")
    return 0


# -- table29 -----------------------------------------------------------------

def cmd_table29(args: argparse.Namespace, cfg: Config) -> int:
    rows = bijection.correspondence_table(3, 2, 2, 29)
    if (cfg.format or "text") == "json":
        _emit(json.dumps([[format_partition(a, True), format_partition(b, True)]
                          for a, b in rows]))
    else:
        sys.stdout.write(bijection.format_table(rows))
    return 0


# -- gf ----------------------------------------------------------------------

def cmd_gf(args: argparse.Namespace, cfg: Config) -> int:
    N = args.N if args.N is not None else cfg.trunc
    try:
        series = qseries.build_gf(args.name, args.k, args.b, N, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = cfg.format or "text"
    if args.coeff is not None:
        j_text, m_text, n_text = args.coeff
        try:
            j, n = int(j_text), int(n_text)
            m = None if m_text == "-" else int(m_text)
            value = series.coefficient(n, j, m)
        except (ValueError, IndexError) as exc:
            raise UsageError(f"bad --coeff: {exc}") from None
        if fmt == "json":
            _emit(json.dumps({"series": args.name, "k": args.k, "b": args.b, "t": args.t,
                              "N": N, "j": j, "m": m, "n": n, "value": value}))
        else:
            _emit(str(value))
        return 0
    if fmt == "json":
        _emit(json.dumps({str(n): c.sorted_terms() for n, c in enumerate(series.coeffs)}))
    else:
        sys.stdout.write(series.dump())
    return 0


# -- verify ------------------------------------------------------------------

def _grid_for(name: str, cfg: Config) -> verify.Grid:
    grid = verify.DEFAULT_GRIDS[name]
    changes = {key: getattr(cfg, key) for key in ("nmax", "jmax", "kset", "bset")
               if getattr(cfg, key) is not None}
    if name == "series" and "nmax" not in changes and cfg.trunc != Config.trunc:
        changes["nmax"] = cfg.trunc
    try:
        return replace(grid, **changes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    names = list(verify.CHECKS) if args.check == "all" else [args.check]
    if args.check != "all" and args.check not in verify.CHECKS:
        raise UsageError(f"unknown check {args.check!r}; expected one of "
                         f"{', '.join(verify.CHECKS)}, all")
    reports = []
    for name in names:
        try:
            reports.append(verify.run_check(name, _grid_for(name, cfg)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    fmt = cfg.format or "json"
    if fmt == "text":
        _emit("\n".join(r.summary() for r in reports))
    else:
        dicts = [r.to_dict(timing=not args.no_timing) for r in reports]
        _emit(json.dumps(dicts[0] if args.check != "all" else dicts, sort_keys=True))
    return 0 if all(r.passed for r in reports) else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nmax", type=int)
    common.add_argument("--jmax", type=int)
    common.add_argument("--kset", "--k", dest="kset", type=_int_set_arg)
    common.add_argument("--bset", "--b", dest="bset", type=_int_set_arg)
    common.add_argument("--trunc", type=int)
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--cache")

    parser = argparse.ArgumentParser(prog="partition-lab",
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="evaluate a counting family")
    p.add_argument("family", choices=counting.FAMILIES)
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("b", type=int)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--range", help="n0..n1")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("map", parents=[common], help="apply phi or psi to a partition")
    p.add_argument("direction", choices=("phi", "psi"))
    p.add_argument("partition")
    p.add_argument("k", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("table29", parents=[common], help="the n=29 correspondence table")
    p.set_defaults(func=cmd_table29)

    p = sub.add_parser("gf", parents=[common], help="dump a generating function")
    p.add_argument("name", choices=qseries.GF_NAMES)
    p.add_argument("k", type=int)
    p.add_argument("b", type=int)
    p.add_argument("N", type=int, nargs="?")
    p.add_argument("--t", type=int)
    p.add_argument("--coeff", nargs=3, metavar=("J", "M", "N"),
                   help="single coefficient; M may be '-' to sum over w")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", parents=[common], help="run a named check or all")
    p.add_argument("check")
    p.add_argument("--no-timing", action="store_true",
                   help="omit elapsed_ms so output is byte-stable")
    p.set_defaults(func=cmd_verify)
    return parser


def _int_set_arg(text: str) -> tuple[int, ...]:
    try:
        return _int_set(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
