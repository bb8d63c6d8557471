"""Numeric evaluation of Gaussian phase-space functions on grids."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernels import GaussianKernel
from .states import SmoothedEprParam, epr_wavefunction


@dataclass(frozen=True)
class PhasePoint:
    """Phase-space point, one (q, p) pair per mode."""

    coords: tuple[tuple[float, float], ...]

    @classmethod
    def one_mode(cls, q: float, p: float) -> "PhasePoint":
        return cls(coords=((q, p),))

    @classmethod
    def two_mode(cls, q1: float, p1: float, q2: float, p2: float) -> "PhasePoint":
        return cls(coords=((q1, p1), (q2, p2)))

    @property
    def zvector(self) -> np.ndarray:
        """Column (z, z*) per mode with z = (q + i p) / sqrt(2)."""
        out = []
        for q, p in self.coords:
            z = (q + 1j * p) / math.sqrt(2.0)
            out.extend([z, np.conj(z)])
        return np.array(out)


@dataclass(frozen=True)
class GridSpec:
    """Uniform per-axis sampling [lo, hi] with ``samples`` points."""

    lo: float
    hi: float
    samples: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("grid requires lo < hi")
        if self.samples < 2:
            raise ValueError("grid requires at least 2 samples")

    @property
    def axis(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.samples)

    @property
    def step(self) -> float:
        return (self.hi - self.lo) / (self.samples - 1)


def wigner_value(k: GaussianKernel, pt: PhasePoint) -> float:
    """W(z) = sqrt(det W) exp(-z^dag W z / 2); real and positive for valid kernels."""
    if k.kind != "W":
        raise ValueError("expected a W kernel")
    z = pt.zvector
    if z.size != k.dim:
        raise ValueError("phase point does not match kernel mode count")
    quad = np.real(np.conj(z) @ k.matrix @ z)
    return math.sqrt(k.sym.det()) * math.exp(-0.5 * quad)


def characteristic_value(k: GaussianKernel, pt: PhasePoint) -> complex:
    """C(z) = exp(-z^dag C z / 2); equals 1 at the origin (unit trace)."""
    if k.kind != "C":
        raise ValueError("expected a C kernel")
    z = pt.zvector
    if z.size != k.dim:
        raise ValueError("phase point does not match kernel mode count")
    return complex(np.exp(-0.5 * (np.conj(z) @ k.matrix @ z)))


def wigner_grid(k: GaussianKernel, grid: GridSpec) -> np.ndarray:
    """Rows (q, p, w) for a one-mode W kernel, row-major over q then p."""
    if k.modes != 1:
        raise ValueError("wigner_grid evaluates one-mode kernels")
    qs = grid.axis
    rows = []
    for q in qs:
        for p in qs:
            rows.append((q, p, wigner_value(k, PhasePoint.one_mode(q, p))))
    return np.array(rows)


def scan_wavefunction(p: SmoothedEprParam, grid: GridSpec) -> np.ndarray:
    """Rows (q1, q2, psi) of the smoothed EPR wave function, row-major."""
    axis = grid.axis
    q1, q2 = np.meshgrid(axis, axis, indexing="ij")
    psi = epr_wavefunction(p, q1, q2)
    return np.column_stack([q1.ravel(), q2.ravel(), psi.ravel()])
