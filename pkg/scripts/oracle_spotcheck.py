#!/usr/bin/env python3
"""Cross-check closed-form verdicts against the truncated Fock-space oracle.

Runs a batch of random kernels plus a few hand-picked boundary cases through
both routes and prints one line per kernel:

    <label>  analytic: pos=… sep=…  oracle: min_eig=… min_ppt=…  <verdict>

Exits non-zero if any decisive oracle sign contradicts the analytic verdict.
"""

import argparse
import math
import sys

import numpy as np

from gausspair import fock, onemode, states, twomode
from gausspair.onemode import OneModeMoments

DEAD_BAND = 1e-5


def check(label: str, kernel, cutoff: int) -> bool:
    op = fock.from_kernel(kernel, cutoff=cutoff, strict=False)
    min_eig = fock.spectrum(op)[-1]
    if kernel.modes == 1:
        analytic_pos = onemode.classify(onemode.moments_from_c(kernel)).positive
        sep_txt, min_ppt = "n/a", None
    else:
        analytic_pos = twomode.positivity_by_q(kernel)
        if analytic_pos:
            sep = twomode.ppt_separable(kernel)
            min_ppt = fock.spectrum(fock.partial_transpose_fock(op))[-1]
            sep_txt = str(sep)
        else:
            sep_txt, min_ppt = "n/a", None

    ok = True
    if abs(min_eig) > DEAD_BAND and (min_eig > 0) != analytic_pos:
        ok = False
    if min_ppt is not None and abs(min_ppt) > DEAD_BAND and (min_ppt > 0) != (sep_txt == "True"):
        ok = False
    ppt_txt = "n/a" if min_ppt is None else f"{min_ppt:+.2e}"
    verdict = "ok" if ok else "DISAGREE"
    print(
        f"{label:<28s} analytic: pos={analytic_pos!s:<5} sep={sep_txt:<5} "
        f"oracle: min_eig={min_eig:+.2e} min_ppt={ppt_txt:<9} {verdict}"
    )
    return ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20, help="random kernels to draw")
    ap.add_argument("--cutoff", type=int, default=16, help="Fock-space cutoff")
    ap.add_argument("--seed", type=int, default=0, help="RNG seed")
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    all_ok = True
    fixed = [
        ("thermal n=0.5", onemode.build_C(OneModeMoments(0.5, 0.0))),
        ("pure squeezed n=1", onemode.build_C(OneModeMoments(1.0, math.sqrt(2.0)))),
        ("mixed EPR entangled", states.mixed_epr(0.8, 1.0)),
        ("mixed EPR separable", states.mixed_epr(1.2, 1.0)),
        ("footnote counterexample", twomode.product_thermal_kernel(1.0 / 3.0, -1.0 / 3.0)),
    ]
    for label, k in fixed:
        all_ok &= check(label, k, args.cutoff)

    for i in range(args.count):
        n = rng.uniform(0.1, 1.2)
        r = rng.uniform(0.0, 1.3)  # past 1.0 crosses the positivity border
        mag = min(r * math.sqrt(n * (n + 1.0)), 0.98 * (n + 0.5))  # keep the state existent
        m = mag * np.exp(1j * rng.uniform(0, 2 * np.pi))
        k = onemode.build_C(OneModeMoments(n=n, m=m))
        all_ok &= check(f"random one-mode #{i}", k, args.cutoff)

    if not all_ok:
        print("oracle disagreement found", file=sys.stderr)
        return 1
    print("all verdicts agree")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
