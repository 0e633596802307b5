"""Command-line entry point: ``ucradius <subcommand> [options]``.

Results go to stdout as a JSON envelope (or CSV with ``--format csv``), or to
``--out``. Exit status: 0 success, 2 invalid input, 1 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import enum
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .bessel import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, InvariantViolation, NumericalFailure, UCRadiusError
from .oracle import DEFAULT_ANGULAR_SAMPLES, certify_radius
from .radius import FunctionKind, branch_for, domain_hi, profile, radius_c_f, radius_uc
from .thresholds import Threshold, threshold
from .zero_finder import ZeroFamily, imag_alpha, imag_beta, zeros

SCHEMA_VERSION = "1"
MAX_TERMS_ENV = "UCR_MAX_TERMS"

DEFAULT_GRIDS = {
    FunctionKind.F: (0.5, 1.0, 1.5, 2.5),
    FunctionKind.G: (-1.8, -1.5, -1.4, -1.2, -0.5, 0.0, 0.5, 1.5),
    FunctionKind.H: (-1.8, -1.5, -1.4, -1.2, -0.5, 0.0, 0.5, 1.5),
}


class UsageError(Exception):
    """Bad command line; reported with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# serialization


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def to_jsonable(obj):
    """Dataclasses, enums, tuples and numpy scalars to plain JSON types."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return {"re": to_jsonable(obj.real), "im": to_jsonable(obj.imag)}
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else None
    return obj


class Float17Encoder(json.JSONEncoder):
    """JSON encoder writing every float with 17 significant digits."""

    def iterencode(self, o, _one_shot=False):
        def floatstr(x):
            s = fmt_float(x)
            return s if any(c in s for c in ".en") else s + ".0"

        enc = json.encoder.encode_basestring_ascii if self.ensure_ascii else json.encoder.encode_basestring
        it = json.encoder._make_iterencode(
            {} if self.check_circular else None, self.default, enc, self.indent, floatstr,
            self.key_separator, self.item_separator, self.sort_keys, self.skipkeys, _one_shot,
        )
        return it(o, 0)


def dumps(envelope) -> str:
    return json.dumps(envelope, cls=Float17Encoder, indent=2, sort_keys=False) + "\n"


def rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt_float(v) if isinstance(v, float) else ("" if v is None else v) for v in row])
    return buf.getvalue()


def load_schema() -> dict:
    from importlib.resources import files

    return json.loads(files("ucradius").joinpath("data/envelope.schema.json").read_text())


# ---------------------------------------------------------------------------
# commands; each returns (result payload, csv header, csv rows)


def _radius_row(rep):
    return [rep.kind.value, rep.nu, rep.radius_kind.value, rep.branch.value, rep.radius,
            rep.domain_hi, rep.residual, rep.iterations]


_RADIUS_HEADER = ["kind", "nu", "radius_kind", "branch", "radius", "domain_hi", "residual", "iterations"]


def cmd_radius(args, cfg):
    kind = FunctionKind(args.kind)
    if args.convexity:
        if kind is not FunctionKind.F:
            raise DomainError("--convexity is available for kind f only")
        rep = radius_c_f(args.nu, cfg, args.tol)
    else:
        rep = radius_uc(kind, args.nu, cfg, args.tol)
    return rep, _RADIUS_HEADER, [_radius_row(rep)]


def cmd_threshold(args, cfg):
    rep = threshold(args.which, cfg, args.tol)
    return rep, ["which", "value", "residual", "bracket_lo", "bracket_hi"], [
        [rep.which.value, rep.value, rep.residual, rep.bracket[0], rep.bracket[1]]
    ]


def cmd_zeros(args, cfg):
    family = ZeroFamily(args.family)
    if args.nu < -1 and family in (ZeroFamily.DINI_ALPHA, ZeroFamily.DINI_BETA):
        iz = (imag_alpha if family is ZeroFamily.DINI_ALPHA else imag_beta)(args.nu, cfg)
        return iz, ["which", "nu", "magnitude", "residual", "bracket_lo", "bracket_hi"], [
            [iz.which, iz.nu, iz.magnitude, iz.residual, iz.bracket[0], iz.bracket[1]]
        ]
    table = zeros(family, args.nu, args.count, cfg)
    rows = [[z.n, z.value, z.bracket_lo, z.bracket_hi] for z in table.zeros]
    return table, ["n", "value", "bracket_lo", "bracket_hi"], rows


def _verify(kind, nu, radius, epsilon, samples, seed, cfg):
    c = certify_radius(kind, nu, radius, epsilon, cfg, samples, seed)
    return {
        "verdict": c.verdict.value,
        "kind": c.kind.value,
        "nu": c.nu,
        "radius": c.radius,
        "epsilon": c.epsilon,
        "inner_min_margin": c.inner.min_margin if c.inner else None,
        "inner_argmin_angle": c.inner.argmin_angle if c.inner else None,
        "interior_min_margin": c.interior_min,
        "outer_point": c.outer_point,
        "outer_margin": c.outer_margin,
        "notes": list(c.notes),
    }


_VERIFY_HEADER = ["verdict", "kind", "nu", "radius", "epsilon", "inner_min_margin",
                  "interior_min_margin", "outer_margin"]


def _verify_row(v):
    return [v[k] for k in _VERIFY_HEADER]


def cmd_verify(args, cfg):
    kind = FunctionKind(args.kind)
    radius = args.radius
    if radius is None:
        radius = radius_uc(kind, args.nu, cfg, args.tol).radius
    v = _verify(kind, args.nu, radius, args.epsilon, args.angular_samples, args.seed, cfg)
    return v, _VERIFY_HEADER, [_verify_row(v)]


def cmd_table(args, cfg):
    kind = FunctionKind(args.kind)
    grid = tuple(args.nus) if args.nus else DEFAULT_GRIDS[kind]

    def one(nu):
        rep = radius_uc(kind, nu, cfg, args.tol)
        v = _verify(kind, nu, rep.radius, args.epsilon, args.angular_samples, args.seed, cfg)
        return rep, v["verdict"]

    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        out = list(pool.map(one, grid))
    payload = {"rows": [{"report": rep, "verify": verdict} for rep, verdict in out]}
    return payload, _RADIUS_HEADER + ["verify"], [_radius_row(rep) + [verdict] for rep, verdict in out]


def emit_profile(kind, nu, r_lo, r_hi, steps, cfg: EvalConfig = DEFAULT_CONFIG):
    """Rows (r, profile(r)) on ``steps`` equispaced points of [r_lo, r_hi].

    r = 0 is allowed and takes the limiting value 1.
    """
    kind = FunctionKind(kind)
    if int(steps) != steps or steps < 2:
        raise DomainError(f"steps must be an integer >= 2, got {steps}")
    hi = domain_hi(kind, nu, cfg)
    r_lo, r_hi = float(r_lo), float(r_hi)
    if not 0.0 <= r_lo < r_hi < hi:
        raise DomainError(f"need 0 <= r_lo < r_hi < {hi:.15g} for kind {kind.value}, nu={nu}")
    return [(float(r), 1.0 if r == 0.0 else profile(kind, nu, float(r), cfg))
            for r in np.linspace(r_lo, r_hi, int(steps))]


def cmd_profile(args, cfg):
    rows = emit_profile(args.kind, args.nu, args.r_lo, args.r_hi, args.steps, cfg)
    payload = {
        "kind": args.kind, "nu": args.nu,
        "branch": branch_for(args.kind, args.nu).value,
        "r": [r for r, _ in rows], "value": [v for _, v in rows],
    }
    return payload, ["r", "profile"], [list(r) for r in rows]


COMMANDS = {
    "radius": cmd_radius,
    "threshold": cmd_threshold,
    "zeros": cmd_zeros,
    "verify": cmd_verify,
    "table": cmd_table,
    "profile": cmd_profile,
}


# ---------------------------------------------------------------------------
# parser


def _common(p, kind=False, nu=False):
    if kind:
        p.add_argument("--kind", choices=[k.value for k in FunctionKind], required=True)
    if nu:
        p.add_argument("--nu", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12, help="relative root bracket width")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None, help="write output here instead of stdout")
    p.add_argument("--timings", action="store_true", help="add wall-clock timings to diagnostics")


def _oracle_opts(p):
    p.add_argument("--angular-samples", type=int, default=DEFAULT_ANGULAR_SAMPLES)
    p.add_argument("--epsilon", type=float, default=1e-3)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ucradius", description="Radii of uniform convexity of normalized Bessel functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("radius", help="solve a uniform-convexity (or convexity) radius")
    _common(p, kind=True, nu=True)
    p.add_argument("--convexity", action="store_true", help="convexity radius of f instead")

    p = sub.add_parser("threshold", help="critical order for the unit disk")
    p.add_argument("--which", choices=[t.value for t in Threshold], required=True)
    _common(p)

    p = sub.add_parser("zeros", help="zeros of J, J' or the Dini functions")
    p.add_argument("--family", choices=[f.value for f in ZeroFamily], required=True)
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--count", type=int, default=5)
    _common(p)

    p = sub.add_parser("verify", help="certify a radius by disk sampling")
    _common(p, kind=True, nu=True)
    p.add_argument("--radius", type=float, default=None, help="defaults to the solved radius")
    _oracle_opts(p)

    p = sub.add_parser("table", help="radius and verification over a grid of orders")
    p.add_argument("--kind", choices=[k.value for k in FunctionKind], required=True)
    p.add_argument("--nu", dest="nus", type=float, nargs="+", default=None)
    p.add_argument("--workers", type=int, default=4)
    _common(p)
    _oracle_opts(p)

    p = sub.add_parser("profile", help="profile curve as data")
    _common(p, kind=True, nu=True)
    p.add_argument("--r-lo", type=float, default=0.0)
    p.add_argument("--r-hi", type=float, required=True)
    p.add_argument("--steps", type=int, default=100)
    return parser


def _config_from_env(environ) -> EvalConfig:
    raw = environ.get(MAX_TERMS_ENV)
    if raw is None or raw == "":
        return DEFAULT_CONFIG
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{MAX_TERMS_ENV} must be an integer, got {raw!r}") from None
    try:
        return EvalConfig(max_terms=n, abs_tol=DEFAULT_CONFIG.abs_tol, rel_tol=DEFAULT_CONFIG.rel_tol)
    except DomainError as exc:
        raise UsageError(f"{MAX_TERMS_ENV}: {exc}") from None


def _inputs(args) -> dict:
    skip = {"command", "format", "out", "timings"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def _write(text, out, stream):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        stream.write(text)


def run(argv=None, stdout=None, stderr=None, environ=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    environ = os.environ if environ is None else environ
    argv = list(sys.argv[1:] if argv is None else argv)
    command = argv[0] if argv else None
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        cfg = _config_from_env(environ)
        t0 = time.perf_counter()
        result, header, rows = COMMANDS[command](args, cfg)
        elapsed = time.perf_counter() - t0
    except (UsageError, DomainError, InvariantViolation) as exc:
        return _fail(command, exc, 2, stdout, stderr)
    except NumericalFailure as exc:
        return _fail(command, exc, 1, stdout, stderr)
    except UCRadiusError as exc:
        return _fail(command, exc, 1, stdout, stderr)

    if args.format == "csv":
        _write(rows_to_csv(header, rows), args.out, stdout)
        return 0
    diagnostics = {"max_terms": cfg.max_terms}
    for key in ("residual", "iterations"):
        if hasattr(result, key):
            diagnostics[key] = getattr(result, key)
    if args.timings:
        diagnostics["elapsed_s"] = elapsed
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": to_jsonable(_inputs(args)),
        "result": to_jsonable(result),
        "diagnostics": to_jsonable(diagnostics),
    }
    _write(dumps(envelope), args.out, stdout)
    return 0


def _fail(command, exc, code, stdout, stderr) -> int:
    kind = "validation" if code == 2 else "numerical"
    stderr.write(f"ucradius: {exc}\n")
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": {"type": type(exc).__name__, "category": kind, "message": str(exc)},
    }
    stdout.write(dumps(envelope))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
