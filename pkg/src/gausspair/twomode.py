"""Two-mode Gaussian states: positivity, partial transpose, PPT separability,
P-representability, and thermal-pair extraction.

The covariance matrix is parameterized as

    C = [[n1+1/2, m1,     ms,     mc    ],
         [m1*,    n1+1/2, mc*,    ms*   ],
         [ms*,    mc,     n2+1/2, m2    ],
         [mc*,    ms,     m2*,    n2+1/2]]

in the (z1, z1*, z2, z2*) ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NoRealSolutionError, NotPositiveError, NotPureError
from .kernels import GaussianKernel, convert
from .linalg import StructureMatrix, SymMatrix

POS_TOL = 1e-10
PURE_TOL = 1e-10
PREP_TOL = 1e-12


@dataclass(frozen=True)
class TwoModeMoments:
    n1: float
    n2: float
    m1: complex = 0.0
    m2: complex = 0.0
    ms: complex = 0.0
    mc: complex = 0.0


@dataclass(frozen=True)
class NormalOrderParams2:
    """The (nu, mu) entries of a two-mode Q matrix."""

    nu1: float
    nu2: float
    mu1: complex
    mu2: complex
    mus: complex
    muc: complex


@dataclass(frozen=True)
class ThermalPair:
    """Geometric-decay parameters of the two thermal factors, g1 >= g2."""

    g1: float
    g2: float


@dataclass(frozen=True)
class TwoModeVerdict:
    positive: bool
    pure: bool
    p_representable: bool
    ppt_separable: bool | None
    thermal: ThermalPair | None


def assemble_c(p: TwoModeMoments) -> np.ndarray:
    n1, n2 = p.n1 + 0.5, p.n2 + 0.5
    m1, m2, ms, mc = (complex(x) for x in (p.m1, p.m2, p.ms, p.mc))
    return np.array(
        [
            [n1, m1, ms, mc],
            [np.conj(m1), n1, np.conj(mc), np.conj(ms)],
            [np.conj(ms), mc, n2, m2],
            [np.conj(mc), ms, np.conj(m2), n2],
        ]
    )


def build_C2(p: TwoModeMoments) -> GaussianKernel:
    return GaussianKernel("C", SymMatrix(assemble_c(p)))


def moments_from_c(k: GaussianKernel) -> TwoModeMoments:
    if k.kind != "C" or k.modes != 2:
        raise ValueError("expected a two-mode C kernel")
    m = k.matrix
    return TwoModeMoments(
        n1=float(m[0, 0].real) - 0.5,
        n2=float(m[2, 2].real) - 0.5,
        m1=complex(m[0, 1]),
        m2=complex(m[2, 3]),
        ms=complex(m[0, 2]),
        mc=complex(m[0, 3]),
    )


def trace_g2(k: GaussianKernel) -> float:
    """Tr G^2 = 1 / (4 sqrt(det C))."""
    _require_c(k)
    det_c = k.sym.det()
    if det_c <= 0.0:
        return math.inf
    return 1.0 / (4.0 * math.sqrt(det_c))


def squared_kernel(k: GaussianKernel) -> GaussianKernel:
    """C matrix of the normalized square G^2 / Tr G^2: Cbar = C/2 + E C^-1 E / 8."""
    _require_c(k)
    e = linalg.structure_e(k.dim)
    cinv = linalg.invert(k.sym).mat
    return GaussianKernel("C", SymMatrix(0.5 * k.matrix + 0.125 * (e @ cinv @ e)))


def positivity_by_dets(k: GaussianKernel) -> bool:
    left, right = positivity_det_margins(k)
    return left >= -POS_TOL and right >= -POS_TOL


def positivity_det_margins(k: GaussianKernel) -> tuple[float, float]:
    """Margins of the two determinant inequalities; both non-negative iff G >= 0.

    The right inequality encodes g1*g2 >= 0, the left one
    (g1+g2)(1+g1)(1+g2) >= (g1-g2)^2.
    """
    _require_c(k)
    det_c = k.sym.det()
    det_cbar = squared_kernel(k).sym.det()
    cross = 4.0 * math.sqrt(det_c) * math.sqrt(det_cbar)
    left = (1.0 / 16.0 + 3.0 * det_c) - cross
    right = (1.0 / 8.0 + 2.0 * det_c) - cross
    return left, right


def normal_order_params(k: GaussianKernel) -> NormalOrderParams2:
    _require_c(k)
    q = convert(k, "Q").matrix
    return NormalOrderParams2(
        nu1=1.0 - float(q[0, 0].real),
        nu2=1.0 - float(q[2, 2].real),
        mu1=complex(q[0, 1]),
        mu2=complex(q[2, 3]),
        mus=complex(q[0, 2]),
        muc=complex(q[0, 3]),
    )


def positivity_by_q(k: GaussianKernel) -> bool:
    """G >= 0 iff nu1 + nu2 >= 0 and nu1*nu2 >= |mus|^2."""
    p = normal_order_params(k)
    return (p.nu1 + p.nu2 >= -POS_TOL) and (p.nu1 * p.nu2 - abs(p.mus) ** 2 >= -POS_TOL)


def partial_transpose(k: GaussianKernel) -> GaussianKernel:
    """Transpose the first mode only; on moments m1 -> m1*, ms -> mc*, mc -> ms*."""
    if k.modes != 2:
        from .errors import WrongModeCountError

        raise WrongModeCountError("partial transpose needs a two-mode kernel")
    t1 = StructureMatrix("T1", 4)
    return GaussianKernel(k.kind, linalg.conj_by_structure(k.sym, t1))


def separability_inequality(k: GaussianKernel) -> bool:
    """Direct separability test nu1*nu2 >= |muc|^2 on the untransposed kernel."""
    p = normal_order_params(k)
    return p.nu1 * p.nu2 - abs(p.muc) ** 2 >= -POS_TOL


def ppt_separable(k: GaussianKernel) -> bool:
    """Peres criterion: positivity of the partial transpose (sufficient for Gaussians)."""
    if not positivity_by_q(k):
        raise NotPositiveError("separability is only defined for positive states")
    return positivity_by_q(partial_transpose(k))


def p_representable(k: GaussianKernel) -> bool:
    """True iff all four eigenvalues of C - I/2 are strictly positive."""
    _require_c(k)
    shifted = k.matrix - 0.5 * np.eye(k.dim)
    return bool(np.linalg.eigvalsh(shifted)[0] > PREP_TOL)


def thermal_pair(k: GaussianKernel, diagnostics: bool = False) -> ThermalPair:
    """Recover (g1, g2) from det C and det Cbar.

    With x_i = (1+g_i)/(1-g_i) the two determinants fix x1*x2 and
    x1/x2 + x2/x1, which is a closed-form solve.  ``diagnostics`` allows
    extraction for non-positive kernels (one g may then be negative).
    """
    if not diagnostics and not positivity_by_dets(k):
        raise NotPositiveError("kernel is not positive; pass diagnostics=True to force")
    s = 4.0 * math.sqrt(k.sym.det())
    sbar = 4.0 * math.sqrt(squared_kernel(k).sym.det())
    b = 4.0 * sbar - s - 1.0 / s
    if b < 2.0 - 1e-8:
        raise NoRealSolutionError(f"x1/x2 + x2/x1 = {b} < 2 has no real solution")
    b = max(b, 2.0)
    r = 0.5 * (b + math.sqrt(b * b - 4.0))
    x1 = math.sqrt(s * r)
    x2 = math.sqrt(s / r)
    return ThermalPair(g1=(x1 - 1.0) / (x1 + 1.0), g2=(x2 - 1.0) / (x2 + 1.0))


def purity2(k: GaussianKernel) -> bool:
    """det C = 1/16 marks a pure state (given positivity)."""
    _require_c(k)
    return abs(k.sym.det() - 1.0 / 16.0) <= PURE_TOL


def pure_marginal_separability(k: GaussianKernel, which: int = 1) -> bool:
    """For a pure state: separable iff the chosen 2x2 diagonal block has det 1/4."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    if not purity2(k):
        raise NotPureError("marginal criterion only applies to pure states")
    sl = slice(0, 2) if which == 1 else slice(2, 4)
    block = k.matrix[sl, sl]
    return abs(float(np.linalg.det(block).real) - 0.25) <= PURE_TOL


def local_squeeze_map(theta1: float, theta2: float) -> np.ndarray:
    """Block matrix of two real-phase one-mode squeezes."""
    u = np.eye(4, dtype=complex)
    for i, th in enumerate((theta1, theta2)):
        ch, sh = math.cosh(th), math.sinh(th)
        u[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = [[ch, sh], [sh, ch]]
    return u


def local_squeeze_to_p_rep(k: GaussianKernel, theta: float) -> GaussianKernel:
    """Apply the local map C -> E U E C E U^dag E with equal real squeezes on both modes."""
    if not positivity_by_q(k):
        raise NotPositiveError("local squeeze to P form requires a positive state")
    u = local_squeeze_map(theta, theta)
    e = linalg.structure_e(4)
    mat = e @ u @ e @ k.matrix @ e @ u.conj().T @ e
    return GaussianKernel("C", SymMatrix(mat))


def classify2(k: GaussianKernel) -> TwoModeVerdict:
    positive = positivity_by_q(k)
    return TwoModeVerdict(
        positive=positive,
        pure=positive and purity2(k),
        p_representable=p_representable(k),
        ppt_separable=ppt_separable(k) if positive else None,
        thermal=thermal_pair(k) if positive else None,
    )


def bohr_variances(n: float, mc: float) -> tuple[float, float]:
    """<P1^2>+<Q2^2> and <P2^2>+<Q1^2> for the EPR-correlated family (ms=m1=m2=0).

    Both must be at least 1 for separability; this diagnostic applies to that
    family only.
    """
    return 1.0 + 2.0 * n - 2.0 * mc, 1.0 + 2.0 * n + 2.0 * mc


def product_thermal_kernel(g1: float, g2: float) -> GaussianKernel:
    """Diagonal C kernel of a product of two basic Gaussians with parameters g1, g2.

    Valid for -1 < g < 1; negative g gives a non-positive (diagnostic) kernel.
    """
    c1 = 0.5 * (1.0 + g1) / (1.0 - g1)
    c2 = 0.5 * (1.0 + g2) / (1.0 - g2)
    return GaussianKernel("C", SymMatrix(np.diag([c1, c1, c2, c2])))


def _require_c(k: GaussianKernel):
    if k.kind != "C" or k.modes != 2:
        raise ValueError("expected a two-mode C kernel")
