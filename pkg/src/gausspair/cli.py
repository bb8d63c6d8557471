"""Command-line surface: classify states, convert kernel files, run region scans,
emit wave-function / Wigner grids, and compare against the Fock oracle.

Exit codes: 0 ok, 2 not-a-state, 3 singular matrix, 4 not P-representable,
5 oracle disagreement, 6 cutoff too small, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import fock, onemode, phasespace, states, twomode
from .errors import (
    CutoffTooSmallError,
    NotAStateError,
    NotPRepresentableError,
    SingularMatrixError,
)
from .kernels import GaussianKernel, convert
from .linalg import SymMatrix

EXIT_OK = 0
EXIT_NOT_A_STATE = 2
EXIT_SINGULAR = 3
EXIT_NOT_P_REP = 4
EXIT_DISAGREEMENT = 5
EXIT_CUTOFF = 6
EXIT_USAGE = 64

DEAD_BAND = 1e-5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


@dataclass(frozen=True)
class ScanRequest:
    family: str  # mixed_epr | anti_epr | squeezed_epr
    ratio: float  # ms = ratio * mc (anti) or m = ratio * mc (squeezed)
    mc_lo: float
    mc_hi: float
    mc_steps: int
    n_lo: float
    n_hi: float
    n_steps: int

    def __post_init__(self):
        if self.mc_steps < 2 or self.n_steps < 2:
            raise ValueError("steps must be at least 2")


def _family_matrices(family: str, n: np.ndarray, mc: np.ndarray, ratio: float) -> np.ndarray:
    """Stacked real C matrices, one per grid point."""
    a = n + 0.5
    zero = np.zeros_like(n)
    if family == "mixed_epr":
        m1 = ms = zero
    elif family == "anti_epr":
        m1, ms = zero, ratio * mc
    elif family == "squeezed_epr":
        m1, ms = ratio * mc, zero
    else:
        raise ValueError(f"unknown family {family!r}")
    rows = [
        [a, m1, ms, mc],
        [m1, a, mc, ms],
        [ms, mc, a, m1],
        [mc, ms, m1, a],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def run_scan(req: ScanRequest) -> list[str]:
    """CSV lines (header included) for a family region scan.

    The whole grid is evaluated with stacked linear algebra; the flags are the
    same closed criteria as classify2 applies point by point.
    """
    mcs = np.linspace(req.mc_lo, req.mc_hi, req.mc_steps)
    ns = np.linspace(req.n_lo, req.n_hi, req.n_steps)
    mc_g, n_g = np.meshgrid(mcs, ns, indexing="ij")
    c = _family_matrices(req.family, n_g.ravel(), mc_g.ravel(), req.ratio)

    eig_lo = np.linalg.eigvalsh(c)[:, 0]
    exists = eig_lo >= -1e-12
    eye = np.eye(4)
    e = np.diag([1.0, -1.0, 1.0, -1.0])
    # C + I/2 is singular only at grid points that are not states; invert the rest
    safe = eig_lo > -0.499
    nu1 = np.full(len(c), -1.0)
    nu2, mus, muc = nu1.copy(), np.zeros(len(c)), np.zeros(len(c))
    q = e @ np.linalg.inv(c[safe] + 0.5 * eye) @ e
    nu1[safe], nu2[safe] = 1.0 - q[:, 0, 0], 1.0 - q[:, 2, 2]
    mus[safe], muc[safe] = q[:, 0, 2], q[:, 0, 3]
    tol = twomode.POS_TOL
    positive = exists & (nu1 + nu2 >= -tol) & (nu1 * nu2 - mus**2 >= -tol)
    separable = positive & (nu1 * nu2 - muc**2 >= -tol)
    pure = positive & (np.abs(np.linalg.det(c) - 1.0 / 16.0) <= twomode.PURE_TOL)
    p_rep = exists & (np.linalg.eigvalsh(c - 0.5 * eye)[:, 0] > twomode.PREP_TOL)

    lines = ["mc,n,positive,pure,separable,p_representable"]
    flags = np.column_stack([positive, pure, separable, p_rep]).astype(int)
    for (mc, n), (po, pu, se, pr) in zip(
        zip(mc_g.ravel(), n_g.ravel()), flags, strict=True
    ):
        lines.append(f"{mc:.10g},{n:.10g},{po},{pu},{se},{pr}")
    return lines


def _one_mode_report(p: onemode.OneModeMoments) -> dict:
    v = onemode.classify(p)
    w = convert(onemode.build_C(p), "W")
    return {
        "exists": True,
        "modes": 1,
        "positive": v.positive,
        "pure": v.pure,
        "p_representable": v.p_representable,
        "separable": None,
        "g": v.g,
        "trace_g2": onemode.purity_from_wigner(w),
    }


def _two_mode_report(k: GaussianKernel) -> dict:
    v = twomode.classify2(k)
    tg2 = twomode.trace_g2(k)
    return {
        "exists": True,
        "modes": 2,
        "positive": v.positive,
        "pure": v.pure,
        "p_representable": v.p_representable,
        "separable": v.ppt_separable,
        "g": [v.thermal.g1, v.thermal.g2] if v.thermal is not None else None,
        "trace_g2": tg2 if np.isfinite(tg2) else None,
    }


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _moments_from_args(args) -> tuple[int, object]:
    """Returns (modes, OneModeMoments | GaussianKernel)."""
    if args.modes == 1:
        if args.n is None or args.m is None:
            raise SystemExit(_usage_error("one-mode input needs --n and --m"))
        return 1, onemode.OneModeMoments(n=args.n, m=args.m)
    family = getattr(args, "family", None)
    if family is not None:
        fam = family.replace("-", "_")
        if fam == "mixed_epr":
            return 2, states.mixed_epr(args.n, args.mc)
        if fam == "anti_epr":
            return 2, states.anti_epr(args.n, args.mc, args.ms or 0.0)
        if fam == "squeezed_epr":
            return 2, states.squeezed_epr(args.n, args.mc, args.m.real if args.m else 0.0)
        raise SystemExit(_usage_error(f"unknown family {family!r}"))
    p = twomode.TwoModeMoments(
        n1=args.n1 if args.n1 is not None else args.n,
        n2=args.n2 if args.n2 is not None else args.n,
        m1=args.m1 or 0.0,
        m2=args.m2 or 0.0,
        ms=args.ms or 0.0,
        mc=args.mc or 0.0,
    )
    return 2, twomode.build_C2(p)


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _add_moment_flags(p: _Parser):
    p.add_argument("--modes", type=int, choices=(1, 2), required=True)
    p.add_argument("--n", type=float)
    p.add_argument("--m", type=_parse_complex)
    p.add_argument("--family", choices=("mixed-epr", "anti-epr", "squeezed-epr"))
    p.add_argument("--n1", type=float)
    p.add_argument("--n2", type=float)
    p.add_argument("--m1", type=_parse_complex)
    p.add_argument("--m2", type=_parse_complex)
    p.add_argument("--ms", type=_parse_complex)
    p.add_argument("--mc", type=_parse_complex)


def kernel_to_json(k: GaussianKernel) -> dict:
    flat = [[float(x.real), float(x.imag)] for x in k.matrix.ravel()]
    return {"modes": k.modes, "kind": k.kind, "matrix": flat}


def kernel_from_json(obj: dict) -> GaussianKernel:
    modes = int(obj["modes"])
    kind = str(obj["kind"])
    dim = 2 * modes
    entries = np.array([complex(re, im) for re, im in obj["matrix"]]).reshape(dim, dim)
    return GaussianKernel(kind, SymMatrix(entries))


def _cmd_classify(args) -> int:
    try:
        modes, obj = _moments_from_args(args)
        report = _one_mode_report(obj) if modes == 1 else _two_mode_report(obj)
    except NotAStateError as exc:
        print(json.dumps({"exists": False, "reason": str(exc)}))
        return EXIT_NOT_A_STATE
    print(json.dumps(report))
    return EXIT_OK


def _cmd_scan(args) -> int:
    req = ScanRequest(
        family=args.family.replace("-", "_"),
        ratio=args.ratio,
        mc_lo=args.mc_min,
        mc_hi=args.mc_max,
        mc_steps=args.mc_steps,
        n_lo=args.n_min,
        n_hi=args.n_max,
        n_steps=args.n_steps,
    )
    text = "\n".join(run_scan(req)) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_convert(args) -> int:
    with open(args.infile) as fh:
        k = kernel_from_json(json.load(fh))
    try:
        out = convert(k, args.to)
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except NotPRepresentableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_P_REP
    text = json.dumps(kernel_to_json(out))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    try:
        modes, obj = _moments_from_args(args)
    except NotAStateError as exc:
        print(json.dumps({"exists": False, "reason": str(exc)}))
        return EXIT_NOT_A_STATE
    if modes == 1:
        analytic = _one_mode_report(obj)
        kernel = onemode.build_C(obj)
    else:
        analytic = _two_mode_report(obj)
        kernel = obj
    try:
        op = fock.from_kernel(kernel, cutoff=args.cutoff)
    except CutoffTooSmallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CUTOFF
    spec = fock.spectrum(op)
    min_eig = float(spec[-1])
    oracle_report = {
        "min_eig": min_eig,
        "trace": fock.trace_power(op, 1),
        "trace_g2": fock.trace_power(op, 2),
    }
    indeterminate = abs(min_eig) <= DEAD_BAND
    agree = indeterminate or (min_eig > 0) == analytic["positive"]
    if modes == 2:
        ppt_spec = fock.spectrum(fock.partial_transpose_fock(op))
        min_ppt = float(ppt_spec[-1])
        oracle_report["min_ppt_eig"] = min_ppt
        if analytic["positive"]:
            ppt_indet = abs(min_ppt) <= DEAD_BAND
            indeterminate = indeterminate or ppt_indet
            agree = agree and (ppt_indet or (min_ppt > -DEAD_BAND) == analytic["separable"])
    report = {
        "analytic": analytic,
        "oracle": oracle_report,
        "agree": bool(agree),
        "indeterminate": bool(indeterminate),
        "truncation_loss": op.truncation_loss,
    }
    print(json.dumps(report))
    return EXIT_OK if agree else EXIT_DISAGREEMENT


def _cmd_wavefun(args) -> int:
    grid = phasespace.GridSpec(lo=args.lo, hi=args.hi, samples=args.samples)
    table = phasespace.scan_wavefunction(states.SmoothedEprParam(args.nbar), grid)
    lines = ["q1,q2,psi"]
    for q1, q2, psi in table:
        lines.append(f"{q1:.10g},{q2:.10g},{psi:.12g}")
    _write_lines(lines, args.out)
    return EXIT_OK


def _cmd_wigner(args) -> int:
    try:
        p = onemode.OneModeMoments(n=args.n, m=args.m)
    except NotAStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_STATE
    w = convert(onemode.build_C(p), "W")
    grid = phasespace.GridSpec(lo=args.lo, hi=args.hi, samples=args.samples)
    lines = ["q,p,w"]
    for q, pp, val in phasespace.wigner_grid(w, grid):
        lines.append(f"{q:.10g},{pp:.10g},{val:.12g}")
    _write_lines(lines, args.out)
    return EXIT_OK


def _write_lines(lines: list[str], out: str | None):
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> _Parser:
    parser = _Parser(prog="gausspair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="closed-form verdict bundle as JSON")
    _add_moment_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("scan", help="region scan over (mc, n) as CSV")
    p.add_argument("--family", required=True, choices=("mixed-epr", "anti-epr", "squeezed-epr"))
    p.add_argument("--ratio", type=float, default=0.0, help="ms (anti) or m (squeezed) as ratio * mc")
    p.add_argument("--mc-min", type=float, required=True)
    p.add_argument("--mc-max", type=float, required=True)
    p.add_argument("--mc-steps", type=int, required=True)
    p.add_argument("--n-min", type=float, required=True)
    p.add_argument("--n-max", type=float, required=True)
    p.add_argument("--n-steps", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("convert", help="convert a kernel JSON file between representations")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--to", required=True, choices=("C", "W", "Q", "P"))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("oracle", help="compare analytic verdicts with the Fock oracle")
    _add_moment_flags(p)
    p.add_argument("--cutoff", type=int, default=fock.DEFAULT_CUTOFF)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("wavefun", help="smoothed EPR wave function grid as CSV")
    p.add_argument("--nbar", type=float, required=True)
    p.add_argument("--lo", type=float, default=-4.0)
    p.add_argument("--hi", type=float, default=4.0)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_wavefun)

    p = sub.add_parser("wigner", help="one-mode Wigner function grid as CSV")
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--m", type=_parse_complex, default=0j)
    p.add_argument("--lo", type=float, default=-4.0)
    p.add_argument("--hi", type=float, default=4.0)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_wigner)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
