"""Command-line front end.

Every command prints one JSON object ``{"status", "payload", "diagnostics"}``
and exits 0 (ok), 1 (error) or 2 (unknown: a comparison stayed undecided).
The one exception is ``dessins enumerate`` without ``--out``, which streams
one JSON line per dessin.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import __version__
from .bounds import (
    CaseDiscriminator,
    HeightBound,
    affine_arithmetic_height_bound,
    arithmetic_affine_cover_bounds,
    arithmetic_projective_isogeny_bounds,
    belyi_height_bound,
    belyi_pullback_bound,
    dfs_height_bound,
    dfs_height_bound_sharp,
    isogeny_degree_bound_nonarithmetic,
    main_theorem_bound,
    replay_theorem_certificate,
    verify_proof_inequalities,
)
from .certificate import VerificationReport, verify_certificate_json
from .dessins.census import census_lines, enumerate_dessins, write_census
from .dessins.census import DEFAULT_DEGREE_CAP
from .errors import HyperboundError
from .exact import RealEnclosure, as_precision, decimal_approx, format_rational, parse_rational
from .orbifold import OrbifoldSignature, min_abs_euler_hyperbolic, orbifold_euler
from .shimizu import (
    Consistency,
    ShimizuConsistencyInput,
    covolume,
    load_field,
    odlyzko_constant_check,
    shimizu_consistency,
)

APPROX_DIGITS = 9
EXIT = {"ok": 0, "error": 1, "unknown": 2}


@dataclass
class CommandResult:
    status: str
    payload: dict | None = None
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]

    def to_json(self) -> dict:
        return {"status": self.status, "payload": self.payload, "diagnostics": self.diagnostics}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _cones(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cone orders must be comma-separated integers: {text!r}") from exc


def _exact(q: Fraction) -> dict:
    return {"value": format_rational(q), "approx": decimal_approx(q, APPROX_DIGITS)}


def _enclosure(e: RealEnclosure) -> dict:
    return {**e.to_json(), "approx_lo": decimal_approx(e.lo, APPROX_DIGITS),
            "approx_hi": decimal_approx(e.hi, APPROX_DIGITS)}


def _report_result(report: VerificationReport, detail: bool) -> CommandResult:
    payload = report.to_json(detail)
    if report.count("refuted"):
        return CommandResult("error", payload, ["some inequalities are certifiably false"])
    if report.count("unknown"):
        return CommandResult("unknown", payload, ["some inequalities stayed undecided at the precision cap"])
    return CommandResult("ok", payload)


# -- handlers ---------------------------------------------------------------

def _bound_main(a) -> CommandResult:
    b = main_theorem_bound(a.ex, a.ey, a.belyi)
    return CommandResult("ok", {"bound": format_rational(b), "approx": decimal_approx(b, APPROX_DIGITS),
                                "digits": APPROX_DIGITS})


def _bound_affine(a) -> CommandResult:
    b = affine_arithmetic_height_bound(a.ex)
    return CommandResult("ok", {"bound": format_rational(b), "approx": decimal_approx(b, APPROX_DIGITS),
                                "digits": APPROX_DIGITS})


def _bound_isogeny(a) -> CommandResult:
    case = CaseDiscriminator.parse(a.case)
    if case is CaseDiscriminator.NON_ARITHMETIC:
        if a.ex is None or a.ey is None:
            raise UsageError("non-arithmetic case needs --ex and --ey")
        d = isogeny_degree_bound_nonarithmetic(a.ex, a.ey)
    elif case is CaseDiscriminator.ARITHMETIC_PROJECTIVE:
        if a.gx is None or a.gy is None:
            raise UsageError("arithmetic-projective case needs --gx and --gy")
        d = arithmetic_projective_isogeny_bounds(a.gx, a.gy)
    else:
        if a.gx is None or a.ex is None:
            raise UsageError("arithmetic-affine case needs --gx and --ex")
        belyi, cover = arithmetic_affine_cover_bounds(a.gx, a.ex)
        return CommandResult("ok", {"case": case.value, "belyi_map_degree": _exact(belyi),
                                    "cover_degree": _exact(cover)})
    return CommandResult("ok", {"case": case.value, "deg_pi_X": _exact(d.bound_pi_X),
                                "deg_pi_Y": _exact(d.bound_pi_Y)})


def _bound_dfs(a) -> CommandResult:
    h = HeightBound(RealEnclosure.point(a.h), ("caller-supplied height bound",))
    if a.sharp:
        if a.gy is None:
            raise UsageError("--sharp needs --gy")
        out = dfs_height_bound_sharp(h, a.g, a.gy, a.deg, a.precision)
    else:
        out = dfs_height_bound(h, a.g, a.deg, a.precision)
    return CommandResult("ok", {"height_bound": _enclosure(out.value), "provenance": list(out.provenance)})


def _bound_belyi_height(a) -> CommandResult:
    return CommandResult("ok", {"bound": format_rational(belyi_height_bound(a.deg))})


def _bound_pullback(a) -> CommandResult:
    return CommandResult("ok", {"bound": format_rational(belyi_pullback_bound(a.belyi, a.deg_pi))})


def _certificate_replay(a) -> CommandResult:
    cert = replay_theorem_certificate(a.case, a.gx, a.gy, a.ex, a.ey, a.belyi, a.precision)
    payload = cert.to_json()
    if cert.verified:
        return CommandResult("ok", payload)
    failing = cert.failing_step
    msg = f"step not certified: {failing.label}" if failing else "final bound does not match the last step"
    status = "unknown" if failing is not None and failing.status is None else "error"
    return CommandResult(status, payload, [msg])


def _certificate_check(a) -> CommandResult:
    with open(a.file, encoding="utf-8") as fh:
        data = json.load(fh)
    ok = verify_certificate_json(data)
    return CommandResult("ok" if ok else "error", {"reverified": ok},
                         [] if ok else ["serialized certificate does not re-verify"])


def _verify_hurwitz(a) -> CommandResult:
    data = min_abs_euler_hyperbolic().to_json()
    if a.brief:
        data.pop("trace", None)
    return CommandResult("ok", data)


def _verify_proof_steps(a) -> CommandResult:
    report = verify_proof_inequalities(range(a.gmin, a.gmax + 1), a.precision)
    return _report_result(report, not a.summary)


def _verify_odlyzko(a) -> CommandResult:
    return _report_result(odlyzko_constant_check(a.nmax, a.precision), not a.summary)


def _dessins_enumerate(a) -> CommandResult | None:
    entries = enumerate_dessins(a.degree, cap=a.cap, jobs=a.jobs, backend=a.backend)
    if a.out:
        write_census(a.out, a.degree, entries, a.cap)
        return CommandResult("ok", {"degree": a.degree, "count": len(entries), "out": a.out})
    for line in census_lines(a.degree, entries, a.cap)[1:]:
        print(line)
    return None


def _orbifold_euler(a) -> CommandResult:
    sig = OrbifoldSignature(a.genus, a.punctures, a.cones)
    e = orbifold_euler(sig)
    return CommandResult("ok", {"signature": str(sig), "euler": format_rational(e),
                                "hyperbolic": sig.is_hyperbolic})


def _shimizu_covolume(a) -> CommandResult:
    f = load_field(a.field).with_zeta2(a.precision)
    return CommandResult("ok", {"covolume": _enclosure(covolume(f, a.precision)), "field": f.to_json()})


def _shimizu_consistency(a) -> CommandResult:
    f = load_field(a.field).with_zeta2(a.precision)
    verdict = shimizu_consistency(f, ShimizuConsistencyInput(a.d1, a.d2, a.e), a.precision)
    payload = {"verdict": verdict.value, "lhs": _enclosure(a.d2 * covolume(f, a.precision)),
               "rhs": format_rational(a.d1 * a.e)}
    if verdict is Consistency.UNKNOWN:
        return CommandResult("unknown", payload, ["enclosure too wide to decide; tighten zeta_F(2)"])
    return CommandResult("ok", payload)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision", type=int, default=None,
                        help="starting precision in bits (default: $HYPERBOUND_PRECISION or 128)")

    parser = _Parser(prog="hyperbound", description="Certified bounds for isogenous hyperbolic curves.")
    parser.add_argument("--version", action="version", version=f"hyperbound {__version__}")
    top = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, handler, help_text):
        p = group.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    bound = top.add_parser("bound", help="closed-form bounds").add_subparsers(dest="cmd", required=True)
    p = sub(bound, "main", _bound_main, "height bound for a curve isogenous to X")
    p.add_argument("--ex", type=_rational, required=True)
    p.add_argument("--ey", type=_rational, required=True)
    p.add_argument("--belyi", type=int, required=True)
    p = sub(bound, "affine-arithmetic", _bound_affine, "height bound for an affine arithmetic curve")
    p.add_argument("--ex", type=_rational, required=True)
    p = sub(bound, "isogeny", _bound_isogeny, "cover degree bounds")
    p.add_argument("--case", required=True, choices=[c.value for c in CaseDiscriminator])
    p.add_argument("--ex", type=_rational)
    p.add_argument("--ey", type=_rational)
    p.add_argument("--gx", type=int)
    p.add_argument("--gy", type=int)
    p = sub(bound, "dfs", _bound_dfs, "de Franchis-Severi height bound")
    p.add_argument("--h", type=_rational, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--sharp", action="store_true")
    p.add_argument("--gy", type=int)
    p = sub(bound, "belyi-height", _bound_belyi_height, "10^9 deg_B^6")
    p.add_argument("--deg", type=int, required=True)
    p = sub(bound, "pullback", _bound_pullback, "Belyi degree of an etale cover")
    p.add_argument("--belyi", type=int, required=True)
    p.add_argument("--deg-pi", type=int, required=True)

    cert = top.add_parser("certificate", help="proof-chain certificates").add_subparsers(dest="cmd", required=True)
    p = sub(cert, "replay", _certificate_replay, "replay a proof chain")
    p.add_argument("--case", required=True, choices=[c.value for c in CaseDiscriminator])
    p.add_argument("--gx", type=int, required=True)
    p.add_argument("--gy", type=int)
    p.add_argument("--ex", type=_rational, required=True)
    p.add_argument("--ey", type=_rational)
    p.add_argument("--belyi", type=int)
    p = sub(cert, "check", _certificate_check, "re-verify a serialized certificate")
    p.add_argument("--file", required=True)

    ver = top.add_parser("verify", help="standalone verifications").add_subparsers(dest="cmd", required=True)
    p = sub(ver, "hurwitz42", _verify_hurwitz, "certified minimum of |e| over hyperbolic orbifolds")
    p.add_argument("--brief", action="store_true", help="omit the per-stratum search trace")
    p = sub(ver, "proof-steps", _verify_proof_steps,
            "numeric side conditions of the proofs")
    p.add_argument("--gmin", type=int, default=0)
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--summary", action="store_true", help="counts only")
    p = sub(ver, "odlyzko", _verify_odlyzko, "discriminant floor constant")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--summary", action="store_true", help="counts only")

    des = top.add_parser("dessins", help="dessin census").add_subparsers(dest="cmd", required=True)
    p = sub(des, "enumerate", _dessins_enumerate, "all dessins of a degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP)
    p.add_argument("--backend", choices=["python", "cython"])

    orb = top.add_parser("orbifold", help="orbifold signatures").add_subparsers(dest="cmd", required=True)
    p = sub(orb, "euler", _orbifold_euler, "Euler characteristic of a signature")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--punctures", type=int, default=0)
    p.add_argument("--cones", type=_cones, default=())

    shi = top.add_parser("shimizu", help="covolumes from field data").add_subparsers(dest="cmd", required=True)
    p = sub(shi, "covolume", _shimizu_covolume, "covolume enclosure")
    p.add_argument("--field", required=True, help="JSON file, or a bundled field: Q, qsqrt5")
    p = sub(shi, "consistency", _shimizu_consistency, "compare covolume with d_1 |e|")
    p.add_argument("--field", required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--e", type=_rational, required=True, help="|e(X)| as p/q")
    return parser


def run(argv: Sequence[str] | None = None) -> CommandResult | None:
    """Parse and execute; returns None when the command streamed its own output."""
    try:
        args = build_parser().parse_args(argv)
        args.precision = as_precision(args.precision) if args.precision is not None else None
        return args.handler(args)
    except UsageError as exc:
        return CommandResult("error", None, [f"usage: {exc}"])
    except (HyperboundError, ValueError, OSError, json.JSONDecodeError) as exc:
        return CommandResult("error", None, [f"{type(exc).__name__}: {exc}"])


def main(argv: Sequence[str] | None = None) -> int:
    result = run(argv)
    if result is None:
        return 0
    print(json.dumps(result.to_json(), sort_keys=True))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
