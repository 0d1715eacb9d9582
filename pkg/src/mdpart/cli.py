"""Command-line front end.

    mdpart count --r 3 --n 4
    mdpart series partition --r 2 --order 6
    mdpart boxed pi --k 2 --l 2 --n 1 --format csv
    mdpart check pwp --r 3 --order 20
    mdpart oracle-diff --r 3 --n-max 10

Output never depends on --threads. Exit codes: 0 success, 1 a finding
(mismatch, disagreement, failed identity), 2 bad arguments.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from functools import partial

from . import boxed, moduli, partitions, staircase
from .cache import TableCache, default_cache_dir
from .errors import MdPartError
from .series import TruncatedSeries

SERIES_KINDS = ("partition", "punctual", "hilbert", "moduli", "reduced", "h", "c")
FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    command: str
    subcommand: str | None = None
    r: int | None = None
    n: int | None = None
    n_max: int | None = None
    order: int = 12
    punctual: bool = False
    genus: int = 1
    chi_X: int = 0
    chi_S: int = 1
    ky_zero: bool = False
    num_deg: int | None = None
    den_deg: int | None = None
    k: int | None = None
    l: int | None = None
    table: bool = False
    brute: bool = False
    emit_ideals: bool = False
    format: str = "text"
    threads: int = 1
    cache_dir: str | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        fields = cls.__dataclass_fields__
        return cls(**{k: v for k, v in vars(ns).items() if k in fields})


class UsageError(MdPartError):
    pass


# ---------------------------------------------------------------------------
# counting with optional cache

def _dp_table(cfg: RunConfig, r: int, n_max: int, punctual: bool) -> list[int]:
    compute = partial(_dp_compute, r, punctual, cfg.threads)
    if cfg.cache_dir:
        return TableCache(cfg.cache_dir).table("dp", r, n_max, punctual,
                                               partitions.ALGORITHM_VERSION, compute)
    return compute(n_max)


def _dp_compute(r, punctual, threads, n_max):
    return partitions.count_table(r, n_max, punctual, threads)


def _oracle_table(cfg: RunConfig, r: int, n_max: int, punctual: bool) -> list[int]:
    compute = lambda m: staircase.oracle_counts(r, m, punctual, cfg.threads)
    if cfg.cache_dir:
        return TableCache(cfg.cache_dir).table("oracle", r, n_max, punctual,
                                               staircase.ALGORITHM_VERSION, compute)
    return compute(n_max)


def _counter(cfg: RunConfig):
    def counter(r, order, punctual):
        return TruncatedSeries(order, tuple(_dp_table(cfg, r, order, punctual)))
    return counter


def _require(cfg: RunConfig, *names):
    for name in names:
        if getattr(cfg, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _check_r(r: int):
    if r < 2:
        raise UsageError(f"need r >= 2, got r = {r}")


def _emit_series(cfg: RunConfig, s: TruncatedSeries, extra: dict, out) -> None:
    if cfg.format == "json":
        print(json.dumps(extra | s.to_dict()), file=out)
    elif cfg.format == "csv":
        print("n,coefficient", file=out)
        for n, c in enumerate(s.coeffs):
            print(f"{n},{c}", file=out)
    else:
        print(str(s), file=out)


# ---------------------------------------------------------------------------
# commands

def cmd_count(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    _require(cfg, "r", "n")
    _check_r(cfg.r)
    if cfg.n < 0:
        raise UsageError("need n >= 0")
    plain = _dp_table(cfg, cfg.r, cfg.n, False)
    punct = _dp_table(cfg, cfg.r, cfg.n, True)
    chosen = punct if cfg.punctual else plain
    ideals = []
    if cfg.emit_ideals:
        ideals = [{"diagram": I.to_json_obj(),
                   "generators": [list(g) for g in I.minimal_generators()]}
                  for I in staircase.enumerate_ideals(cfg.r, cfg.n, cfg.punctual)]
    if cfg.format == "csv":
        print("r,n,P,P_punctual", file=out)
        for n in range(cfg.n + 1):
            print(f"{cfg.r},{n},{plain[n]},{punct[n]}", file=out)
    elif cfg.format == "json":
        doc = {"r": cfg.r, "n": cfg.n, "punctual": cfg.punctual, "count": str(chosen[-1])}
        if cfg.table:
            doc["table"] = [str(v) for v in chosen]
        if cfg.emit_ideals:
            doc["ideals"] = ideals
        print(json.dumps(doc), file=out)
    else:
        if cfg.table:
            for n, v in enumerate(chosen):
                print(f"{n}\t{v}", file=out)
        else:
            print(chosen[-1], file=out)
        for item in ideals:
            print(json.dumps(item["generators"]), file=out)
    return 0


def _fibration(cfg: RunConfig) -> moduli.FibrationData:
    try:
        return moduli.FibrationData(cfg.r, cfg.genus, cfg.chi_X, cfg.chi_S, cfg.ky_zero)
    except MdPartError as exc:
        raise UsageError(str(exc)) from exc


def cmd_series(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    _require(cfg, "r")
    _check_r(cfg.r)
    if cfg.order < 0:
        raise UsageError("need order >= 0")
    kind, counter, order = cfg.subcommand, _counter(cfg), cfg.order
    if kind == "partition":
        s = counter(cfg.r, order, False)
    elif kind == "punctual":
        s = counter(cfg.r, order, True)
    elif kind == "h":
        s = moduli.h_series(cfg.r, order, counter)
    elif kind == "c":
        s = moduli.c_series(cfg.r, order, counter)
    elif kind == "hilbert":
        s = moduli.hilbert_euler_series(cfg.r, cfg.chi_X, order, counter)
    elif kind == "moduli":
        s = moduli.moduli_euler_series(_fibration(cfg), order, counter)
    elif kind == "reduced":
        s = moduli.reduced_partition_function(_fibration(cfg), order, counter)
    else:
        raise UsageError(f"unknown series kind {kind!r}")
    _emit_series(cfg, s, {"kind": kind, "r": cfg.r}, out)
    return 0


def cmd_boxed(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    _require(cfg, "k", "l", "n")
    if cfg.k < 1 or cfg.l < 1 or cfg.n < 0:
        raise UsageError("need k >= 1, l >= 1, n >= 0")
    k, l, n = cfg.k, cfg.l, cfg.n
    if cfg.subcommand == "verify":
        checks = {
            "closed_equals_brute": boxed.pi_closed(k, l, n) == boxed.pi_brute(k, l, n),
            "tilde_equals_brute": boxed.tilde_pi(k, l, n) == boxed.tilde_pi_brute(k, l, n),
            "constant_profile": boxed.verify_constant_profile(k, l, n),
        }
        if cfg.format == "json":
            print(json.dumps({"k": k, "l": l, "n": n, "checks": checks}), file=out)
        else:
            for name, ok in checks.items():
                print(f"{name}: {'true' if ok else 'false'}", file=out)
        return 0 if all(checks.values()) else 1
    if cfg.subcommand == "pi":
        s = (boxed.pi_brute if cfg.brute else boxed.pi_closed)(k, l, n)
    else:
        s = (boxed.tilde_pi_brute if cfg.brute else boxed.tilde_pi)(k, l, n)
    if cfg.format == "csv":
        print("k,l,n,m,count", file=out)
        for m, c in enumerate(s.coeffs):
            print(f"{k},{l},{n},{m},{c}", file=out)
    else:
        _emit_series(cfg, s, {"kind": cfg.subcommand, "k": k, "l": l, "n": n}, out)
    return 0


def cmd_check(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    _require(cfg, "r")
    _check_r(cfg.r)
    if cfg.order < 0:
        raise UsageError("need order >= 0")
    counter = _counter(cfg)
    if cfg.subcommand == "pwp":
        report = moduli.check_PWP(cfg.r, cfg.order, counter)
    else:
        report = moduli.check_conj_euler(_fibration(cfg), cfg.order,
                                         cfg.num_deg, cfg.den_deg, counter)
    print(json.dumps(report.to_dict(), indent=2), file=out)
    return 0 if report.ok else 1


def cmd_oracle_diff(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    _require(cfg, "r", "n_max")
    _check_r(cfg.r)
    if cfg.n_max < 0:
        raise UsageError("need n-max >= 0")
    diffs = []
    for punctual in (False, True):
        dp = _dp_table(cfg, cfg.r, cfg.n_max, punctual)
        oracle = _oracle_table(cfg, cfg.r, cfg.n_max, punctual)
        for n, (a, b) in enumerate(zip(dp, oracle)):
            if a != b:
                diffs.append((cfg.r, n, punctual, a, b))
    if cfg.format == "csv":
        print("r,n,punctual,dp,oracle", file=out)
        for d in diffs:
            print(",".join(str(x).lower() if isinstance(x, bool) else str(x) for x in d), file=out)
    elif cfg.format == "json":
        print(json.dumps({"r": cfg.r, "n_max": cfg.n_max,
                          "diffs": [dict(zip(("r", "n", "punctual", "dp", "oracle"),
                                             (r, n, p, str(a), str(b))))
                                    for r, n, p, a, b in diffs]}), file=out)
    else:
        if not diffs:
            print(f"no differences for r={cfg.r}, n<={cfg.n_max}", file=out)
        for r, n, p, a, b in diffs:
            print(f"r={r} n={n} punctual={p}: dp={a} oracle={b}", file=out)
    return 1 if diffs else 0


COMMANDS = {"count": cmd_count, "series": cmd_series, "boxed": cmd_boxed,
            "check": cmd_check, "oracle-diff": cmd_oracle_diff}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--cache-dir", default=default_cache_dir(),
                        help="table cache (default: $MDPART_CACHE_DIR)")

    fib = argparse.ArgumentParser(add_help=False)
    fib.add_argument("--genus", type=int, default=1)
    fib.add_argument("--chi-x", dest="chi_X", type=int, default=0)
    fib.add_argument("--chi-s", dest="chi_S", type=int, default=1)
    fib.add_argument("--ky-zero", action="store_true", help="K_X = 0 (forces genus 1)")

    p = argparse.ArgumentParser(prog="mdpart", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="P_r(n) or the punctual count")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--punctual", action="store_true")
    c.add_argument("--table", action="store_true", help="print the whole table 0..n")
    c.add_argument("--emit-ideals", action="store_true",
                   help="also dump minimal generators of every monomial ideal")

    s = sub.add_parser("series", parents=[common, fib], help="generating series")
    s.add_argument("subcommand", choices=SERIES_KINDS)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--order", type=int, default=12)

    b = sub.add_parser("boxed", parents=[common], help="boxed plane partitions")
    b.add_argument("subcommand", choices=("pi", "tilde-pi", "verify"))
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--l", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--brute", action="store_true", help="direct enumeration instead of the closed form")

    ch = sub.add_parser("check", parents=[common, fib], help="conjecture checkers")
    ch.add_argument("subcommand", choices=("pwp", "euler"))
    ch.add_argument("--r", type=int, required=True)
    ch.add_argument("--order", type=int, default=12)
    ch.add_argument("--num-deg", type=int)
    ch.add_argument("--den-deg", type=int)

    o = sub.add_parser("oracle-diff", parents=[common], help="layered DP vs staircase DFS")
    o.add_argument("--r", type=int, required=True)
    o.add_argument("--n-max", type=int, required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig.from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg, sys.stdout)
    except (UsageError, MdPartError) as exc:
        print(f"mdpart {cfg.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
