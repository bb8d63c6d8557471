#!/usr/bin/env python3
"""Emit the region-scan CSVs behind the package's standard state-family plots.

Produces, under --out-dir:
  mixed_epr.csv           positivity/separability regions over (mc, n)
  anti_epr_half.csv       anti-EPR family at ms = mc/2
  anti_epr_unit.csv       anti-EPR family at ms = mc (entangled region vanishes)
  squeezed_epr_half.csv   squeezed family at m = mc/2
  squeezed_epr_unit.csv   squeezed family at m = mc
  epr_wavefunction.csv    |psi|^2 grid of the smoothed EPR state at nbar = 1
"""

import argparse
import pathlib

import numpy as np

from gausspair import states
from gausspair.cli import ScanRequest, run_scan


def write_scan(path: pathlib.Path, family: str, ratio: float, steps: int) -> None:
    req = ScanRequest(family, ratio, 0.0, 2.0, steps, 0.0, 2.0, steps)
    path.write_text("\n".join(run_scan(req)) + "\n")
    print(f"wrote {path} ({steps}x{steps})")


def write_wavefunction(path: pathlib.Path, nbar: float, steps: int) -> None:
    p = states.SmoothedEprParam(nbar)
    qs = np.linspace(-3.0, 3.0, steps)
    rows = ["q1,q2,density"]
    for q1 in qs:
        psi = states.epr_wavefunction(p, q1, qs)
        rows.extend(f"{q1:.10g},{q2:.10g},{d:.10g}" for q2, d in zip(qs, psi**2))
    path.write_text("\n".join(rows) + "\n")
    print(f"wrote {path} ({steps}x{steps})")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="figures", help="output directory")
    ap.add_argument("--steps", type=int, default=201, help="grid points per axis")
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_scan(out / "mixed_epr.csv", "mixed_epr", 0.0, args.steps)
    write_scan(out / "anti_epr_half.csv", "anti_epr", 0.5, args.steps)
    write_scan(out / "anti_epr_unit.csv", "anti_epr", 1.0, args.steps)
    write_scan(out / "squeezed_epr_half.csv", "squeezed_epr", 0.5, args.steps)
    write_scan(out / "squeezed_epr_unit.csv", "squeezed_epr", 1.0, args.steps)
    write_wavefunction(out / "epr_wavefunction.csv", nbar=1.0, steps=121)


if __name__ == "__main__":
    main()
