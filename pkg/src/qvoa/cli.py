"""Command-line front end.

Subcommands ``verify``, ``lhs``, ``rhs``, ``qp``, ``deform`` and ``wdim``
each produce a :class:`ResultRecord`.  Stdout carries a plain summary that
excludes timing so it is byte-stable; ``--json`` writes the full record
and ``--csv`` the coefficient table.

Exit codes: 0 verified, 1 mismatch, 2 usage error, 3 invariant violation.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import hashlib
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .errors import InvalidParameterError, InvariantViolation

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


@dataclass
class ResultRecord:
    command: str
    params: dict
    coeffs: list[str]
    status: str
    first_mismatch: int | None = None
    ms: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        d = asdict(self)
        extra = d.pop("extra")
        d.update(extra)
        return json.dumps(d, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ResultRecord:
        d = json.loads(text)
        core = {k: d.pop(k) for k in ("command", "params", "coeffs", "status", "first_mismatch", "ms")}
        return cls(**core, extra=d)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        for i, c in enumerate(self.coeffs):
            w.writerow([i, c])
        return buf.getvalue()

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [f"command: {self.command}", f"params: {params}", f"status: {self.status}"]
        if self.first_mismatch is not None:
            lines.append(f"first_mismatch: {self.first_mismatch}")
        lines.append("coeffs: " + " ".join(self.coeffs))
        for k in sorted(self.extra):
            v = self.extra[k]
            lines.append(f"{k}: " + (" ".join(v) if isinstance(v, list) else str(v)))
        return "\n".join(lines) + "\n"


def _int_strings(series) -> list[str]:
    out = []
    for c in series.coeffs:
        if c.denominator != 1:
            raise InvariantViolation(f"non-integral coefficient {c}")
        out.append(str(c.numerator))
    return out


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _weight(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a weight: {text!r}") from exc


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameterError(msg)


# commands ---------------------------------------------------------------------

def cmd_verify(a) -> ResultRecord:
    from .lhs import lhs_series
    from .nahm import rhs_series

    _require(a.n >= 1 and a.k >= 0 and a.order >= 0, "need n >= 1, k >= 0, order >= 0")
    left = lhs_series(a.n, a.k, a.order)
    right = rhs_series(a.n, a.k, a.order, workers=a.threads)
    mismatch = left.first_mismatch(right)
    status = "verified" if mismatch is None else "mismatch"
    extra = {} if mismatch is None else {"coeffs_rhs": _int_strings(right)}
    return ResultRecord("verify", {"n": a.n, "k": a.k, "order": a.order}, _int_strings(left), status, mismatch,
                        extra=extra)


def cmd_lhs(a) -> ResultRecord:
    from .lhs import lhs_series

    _require(a.n >= 1 and a.k >= 0 and a.order >= 0, "need n >= 1, k >= 0, order >= 0")
    s = lhs_series(a.n, a.k, a.order)
    return ResultRecord("lhs", {"n": a.n, "k": a.k, "order": a.order}, _int_strings(s), "verified")


def cmd_rhs(a) -> ResultRecord:
    from .nahm import nahm_form_for_colors, nahm_series

    _require(a.k >= 0 and a.order >= 0, "need k >= 0, order >= 0")
    if a.colors is not None:
        _require(a.colors >= 1, "need colors >= 1")
        N, params = a.colors, {"colors": a.colors, "k": a.k, "order": a.order}
    else:
        _require(a.n >= 1, "need n >= 1")
        N, params = 2 * a.n - 1, {"n": a.n, "k": a.k, "order": a.order}
    s = nahm_series(nahm_form_for_colors(N, a.k), a.order, workers=a.threads)
    return ResultRecord("rhs", params, _int_strings(s), "verified")


def cmd_qp(a) -> ResultRecord:
    from .quasiparticle import qp_character

    _require(a.colors >= 1 and a.k >= 1 and a.order >= 0, "need colors >= 1, k >= 1, order >= 0")
    s = qp_character(a.colors, a.k, a.order)
    return ResultRecord("qp", {"colors": a.colors, "k": a.k, "order": a.order}, _int_strings(s), "verified")


def cmd_deform(a) -> ResultRecord:
    from .deform import build_family, check_closure, is_strictly_upper, kernel_at_epsilon

    fam = build_family(a.family, n=a.n or 0, m=a.m or 0)
    fib = kernel_at_epsilon(fam, a.epsilon)
    closed = check_closure(fib)
    upper = all(is_strictly_upper(A) for A in fib.basis) if a.epsilon == 0 else None
    ok = closed and upper is not False
    params = {"family": a.family, "n": fam.n, "m": fam.m, "epsilon": str(a.epsilon)}
    extra = {"closure": "ok" if closed else "failed"}
    if upper is not None:
        extra["strictly_upper"] = "ok" if upper else "failed"
    return ResultRecord("deform", params, [str(len(fib.even)), str(len(fib.odd))],
                        "verified" if ok else "mismatch", extra=extra)


def cmd_wdim(a) -> ResultRecord:
    from .osp import Weight, build_root_system, weyl_dim, weyl_sdim

    _require(a.n >= 1, "need n >= 1")
    w = a.weight if a.weight is not None else (Fraction(0),) * a.n
    _require(len(w) == a.n, f"weight needs {a.n} components")
    rs = build_root_system(a.n)
    lam = Weight(w)
    vals = [weyl_dim(rs, lam), weyl_sdim(rs, lam)]
    params = {"n": a.n, "weight": ",".join(str(c) for c in lam.coefficients)}
    return ResultRecord("wdim", params, [str(v) for v in vals], "verified")


COMMANDS: dict[str, Callable] = {
    "verify": cmd_verify, "lhs": cmd_lhs, "rhs": cmd_rhs,
    "qp": cmd_qp, "deform": cmd_deform, "wdim": cmd_wdim,
}


# cache --------------------------------------------------------------------------

def _cache_key(record_params: dict, command: str) -> str:
    blob = json.dumps({"command": command, "params": record_params, "version": __version__}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_params(command: str, a) -> dict:
    keys = {
        "verify": ("n", "k", "order"), "lhs": ("n", "k", "order"), "rhs": ("n", "k", "order", "colors"),
        "qp": ("colors", "k", "order"), "deform": ("family", "n", "m", "epsilon"), "wdim": ("n", "weight"),
    }[command]
    out = {}
    for key in keys:
        v = getattr(a, key, None)
        out[key] = None if v is None else str(v) if isinstance(v, (Fraction, tuple)) else v
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qvoa", description="Exact checks of a q-series identity and its ingredients.")
    p.add_argument("--version", action="version", version=f"qvoa {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--json", metavar="PATH", help="write the full record as JSON")
        sp.add_argument("--csv", metavar="PATH", help="write the coefficient table as CSV")
        sp.add_argument("--no-cache", action="store_true", help="ignore QVOA_CACHE")
        sp.add_argument("--threads", type=int, default=1, help="worker processes for lattice sums")

    for name in ("verify", "lhs"):
        sp = sub.add_parser(name)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--order", type=int, required=True)
        common(sp)
    sp = sub.add_parser("rhs")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--colors", type=int, default=None, help="use A_N instead of A_{2n-1}")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    common(sp)
    sp = sub.add_parser("qp")
    sp.add_argument("--colors", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    common(sp)
    sp = sub.add_parser("deform")
    sp.add_argument("--family", choices=("sp", "so", "osp"), required=True)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--epsilon", type=_rational, default=Fraction(1))
    common(sp)
    sp = sub.add_parser("wdim")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--weight", type=_weight, default=None, help="comma-separated eps coefficients")
    common(sp)
    return p


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if a.command == "rhs" and a.n is None and a.colors is None:
        print("qvoa rhs: one of --n or --colors is required", file=stderr)
        return EXIT_USAGE
    if a.threads < 1:
        print("qvoa: --threads must be >= 1", file=stderr)
        return EXIT_USAGE

    cache_dir = os.environ.get("QVOA_CACHE")
    cache_path = None
    if cache_dir and not a.no_cache:
        cache_path = Path(cache_dir) / f"{_cache_key(_cache_params(a.command, a), a.command)}.json"

    record = None
    if cache_path is not None and cache_path.is_file():
        record = ResultRecord.from_json(cache_path.read_text())
    if record is None:
        t0 = time.perf_counter()
        try:
            record = COMMANDS[a.command](a)
        except InvalidParameterError as exc:
            print(f"qvoa {a.command}: {exc}", file=stderr)
            return EXIT_USAGE
        except InvariantViolation as exc:
            print(f"qvoa {a.command}: internal invariant violated: {exc}", file=stderr)
            return EXIT_INVARIANT
        record.ms = int((time.perf_counter() - t0) * 1000)
        if cache_path is not None:
            cache_path.parent.mkdir(parents=True, exist_ok=True)
            tmp = cache_path.with_suffix(".tmp")
            tmp.write_text(record.to_json())
            tmp.replace(cache_path)

    stdout.write(record.summary())
    if a.json:
        Path(a.json).write_text(record.to_json())
    if a.csv:
        Path(a.csv).write_text(record.to_csv())
    return EXIT_OK if record.status == "verified" else EXIT_MISMATCH


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
