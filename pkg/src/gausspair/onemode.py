"""One-mode Gaussian states: moments, verdicts, squeezing, and the pure-state wave function.

Parameters are the mean occupation n = <a^dag a> and the anomalous moment
m = -<a^2>; the covariance matrix is C = [[n+1/2, m], [m*, n+1/2]].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotAStateError, NotPositiveError, NotPureError, NotRealBranchError
from .kernels import GaussianKernel, convert
from .linalg import SymMatrix

POS_TOL = 1e-10
PURE_TOL = 1e-10
_DIAG_M_TOL = 1e-14


@dataclass(frozen=True)
class OneModeMoments:
    """Second moments (n, m) of a one-mode Gaussian kernel."""

    n: float
    m: complex

    def __post_init__(self):
        if self.n + 0.5 <= abs(self.m):
            raise NotAStateError(
                f"n + 1/2 = {self.n + 0.5} must exceed |m| = {abs(self.m)}"
            )


@dataclass(frozen=True)
class OneModeVerdict:
    positive: bool
    pure: bool
    p_representable: bool
    g: float | None


@dataclass(frozen=True)
class SqueezeMap:
    """Linear mode transformation a -> e^{i phi} cosh(theta) a + e^{i varphi} sinh(theta) a^dag."""

    theta: float
    phi: float = 0.0
    varphi: float = 0.0

    @property
    def matrix(self) -> np.ndarray:
        ch = math.cosh(self.theta)
        sh = math.sinh(self.theta)
        return np.array(
            [
                [np.exp(1j * self.phi) * ch, np.exp(1j * self.varphi) * sh],
                [np.exp(-1j * self.varphi) * sh, np.exp(-1j * self.phi) * ch],
            ]
        )


@dataclass(frozen=True)
class SqueezedWavefunction:
    """Position wave function (kappa/pi)^(1/4) exp(-kappa q^2 / 2) of a pure squeezed state."""

    mu: float
    kappa: float

    def __call__(self, q):
        q = np.asarray(q, dtype=float)
        return (self.kappa / math.pi) ** 0.25 * np.exp(-0.5 * self.kappa * q**2)


def build_C(p: OneModeMoments) -> GaussianKernel:
    mat = [[p.n + 0.5, p.m], [np.conj(p.m), p.n + 0.5]]
    return GaussianKernel("C", SymMatrix(mat))


def moments_from_c(k: GaussianKernel) -> OneModeMoments:
    if k.kind != "C" or k.modes != 1:
        raise ValueError("expected a one-mode C kernel")
    return OneModeMoments(n=float(k.matrix[0, 0].real) - 0.5, m=complex(k.matrix[0, 1]))


def classify(p: OneModeMoments) -> OneModeVerdict:
    """Positivity, purity, and P-representability in closed form."""
    mm = abs(p.m) ** 2
    det_c = (p.n + 0.5) ** 2 - mm
    positive = p.n * (p.n + 1.0) - mm >= -POS_TOL
    pure = abs(det_c - 0.25) <= PURE_TOL
    p_rep = p.n > abs(p.m)  # strict: the delta-function limit is excluded
    g = None
    if positive:
        s = math.sqrt(max(det_c, 0.25))
        g = (s - 0.5) / (s + 0.5)
    return OneModeVerdict(positive=positive, pure=pure, p_representable=p_rep, g=g)


def purity_from_wigner(k: GaussianKernel) -> float:
    """Tr G^2 evaluated from the Wigner matrix: half the square root of det W."""
    if k.kind != "W":
        raise ValueError("expected a W kernel")
    return 0.5 * math.sqrt(k.sym.det())


def normal_order_nu(p: OneModeMoments) -> float:
    """The nu entry of the Q matrix, 1 - Q[0,0]."""
    q = convert(build_C(p), "Q")
    return 1.0 - float(q.matrix[0, 0].real)


def apply_squeeze(k: GaussianKernel, u: SqueezeMap, direction: str = "forward") -> GaussianKernel:
    """Conjugate a C kernel by a squeeze map.

    forward:  C -> U^dag C U        (basic Gaussian to squeezed one)
    inverse:  C -> E U E C E U^dag E  (undoes the forward map)
    """
    if k.kind != "C":
        raise ValueError("expected a C kernel")
    um = u.matrix
    if um.shape[0] != k.dim:
        from .errors import DimensionMismatchError

        raise DimensionMismatchError("squeeze map dimension does not match kernel")
    if direction == "forward":
        mat = um.conj().T @ k.matrix @ um
    elif direction == "inverse":
        e = linalg.structure_e(k.dim)
        mat = e @ um @ e @ k.matrix @ e @ um.conj().T @ e
    else:
        raise ValueError("direction must be 'forward' or 'inverse'")
    return GaussianKernel("C", SymMatrix(mat))


def theta_window(p: OneModeMoments) -> tuple[float, float, float]:
    """Range of squeeze angles mapping a positive state onto a P-representable one.

    Returns (lo, hi, theta0) where theta0 marks the transformation that lands
    on the thermal diagonal form.
    """
    if not classify(p).positive:
        raise NotPositiveError("theta window is only defined for positive states")
    am = abs(p.m)
    lo = -0.5 * math.log(2.0 * p.n + 1.0 - 2.0 * am)
    hi = 0.5 * math.log(2.0 * p.n + 1.0 + 2.0 * am)
    theta0 = 0.25 * math.log((p.n + 0.5 + am) / (p.n + 0.5 - am))
    return lo, hi, theta0


def moments_after_squeeze(p: OneModeMoments, theta: float) -> tuple[float, float]:
    """(N, |M|) of the kernel after the real-phase squeeze by theta."""
    am = abs(p.m)
    big_n = (p.n + 0.5) * math.cosh(2 * theta) - am * math.sinh(2 * theta) - 0.5
    big_m = abs(am * math.cosh(2 * theta) - (p.n + 0.5) * math.sinh(2 * theta))
    return big_n, big_m


def diagonalizing_squeeze(p: OneModeMoments) -> SqueezeMap:
    """Squeeze map whose inverse action brings C to its thermal diagonal form c*I.

    The relative phase is fixed by phi = -arg(m), varphi = 0; for m -> 0 the
    identity map is returned.
    """
    if not classify(p).positive:
        raise NotPositiveError("diagonalizing squeeze requires a positive state")
    if abs(p.m) <= _DIAG_M_TOL:
        return SqueezeMap(0.0)
    _, _, theta0 = theta_window(p)
    return SqueezeMap(theta=theta0, phi=-np.angle(p.m), varphi=0.0)


def squeezed_wavefunction(p: OneModeMoments) -> SqueezedWavefunction:
    """Position wave function of a pure state with real, non-negative m."""
    if abs(p.m.imag) > 1e-12:
        raise NotRealBranchError("wave function is given for real m only")
    m = p.m.real
    if m < 0:
        raise NotRealBranchError("wave function is given for m >= 0 only")
    if abs(abs(p.m) - math.sqrt(p.n * (p.n + 1.0))) > 1e-10:
        raise NotPureError("|m| must equal sqrt(n(n+1)) for a pure state")
    mu = math.sqrt(p.n / (p.n + 1.0))
    kappa = (1.0 + mu) / (1.0 - mu)
    return SqueezedWavefunction(mu=mu, kappa=kappa)
