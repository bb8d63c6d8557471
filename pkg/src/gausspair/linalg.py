"""Complex 2x2 / 4x4 matrix substrate with the symplectic structure used everywhere else.

All covariance-style matrices in this package are Hermitian and obey the
swap symmetry M = T M^T T, where T exchanges the (z, z*) pair of every mode.
``SymMatrix`` enforces that normal form on construction; the free functions
below preserve it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatchError, SingularMatrixError

HERM_TOL = 1e-12
DET_TOL = 1e-12

_SWAP2 = np.array([[0.0, 1.0], [1.0, 0.0]])


@lru_cache(maxsize=None)
def _structure(kind: str, dim: int) -> np.ndarray:
    if dim not in (2, 4):
        raise DimensionMismatchError(f"dim must be 2 or 4, got {dim}")
    modes = dim // 2
    if kind == "E":
        m = np.diag([1.0, -1.0] * modes)
    elif kind == "T":
        blocks = [_SWAP2] * modes
        m = np.zeros((dim, dim))
        for i, b in enumerate(blocks):
            m[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = b
    elif kind == "T1":
        if dim != 4:
            raise DimensionMismatchError("T1 is only defined for two modes")
        m = np.eye(4)
        m[0:2, 0:2] = _SWAP2
    elif kind == "E_T1":
        t1 = _structure("T1", dim)
        m = t1 @ _structure("E", dim) @ t1
    else:
        raise ValueError(f"unknown structure kind {kind!r}")
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class StructureMatrix:
    """One of the fixed involutions E, T, T1, E_T1 at dimension 2 or 4."""

    kind: str
    dim: int

    def __post_init__(self):
        _structure(self.kind, self.dim)  # validates kind/dim

    @property
    def mat(self) -> np.ndarray:
        return _structure(self.kind, self.dim)


class SymMatrix:
    """Hermitian matrix in the T-symmetric normal form M = T M^T T.

    The constructor rejects non-Hermitian input (beyond ``HERM_TOL``) and
    symmetrizes by averaging M with T M^T T, which leaves the associated
    Gaussian characteristic function unchanged.
    """

    __slots__ = ("mat",)

    def __init__(self, entries):
        m = np.array(entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4):
            raise DimensionMismatchError(f"expected a 2x2 or 4x4 matrix, got shape {m.shape}")
        if not np.allclose(m, m.conj().T, atol=HERM_TOL, rtol=0.0):
            raise ValueError("matrix is not Hermitian within tolerance")
        t = _structure("T", m.shape[0])
        m = 0.5 * (m + t @ m.T @ t)
        m = 0.5 * (m + m.conj().T)
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    def __setattr__(self, name, value):
        raise AttributeError("SymMatrix is immutable")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def modes(self) -> int:
        return self.dim // 2

    def det(self) -> float:
        return float(np.linalg.det(self.mat).real)

    def __getitem__(self, idx):
        return self.mat[idx]

    def __repr__(self):
        return f"SymMatrix({self.mat.tolist()!r})"

    def allclose(self, other: "SymMatrix", atol: float = 1e-10) -> bool:
        return self.dim == other.dim and np.allclose(self.mat, other.mat, atol=atol, rtol=0.0)


def identity(dim: int) -> SymMatrix:
    return SymMatrix(np.eye(dim))


def invert(m: SymMatrix) -> SymMatrix:
    """Inverse of ``m``; Hermiticity and T-symmetry carry over."""
    det = np.linalg.det(m.mat)
    if abs(det) <= DET_TOL:
        raise SingularMatrixError(f"|det| = {abs(det):.3e} <= {DET_TOL}")
    inv = np.linalg.inv(m.mat)
    # the exact inverse is Hermitian; drop the round-off asymmetry so that
    # ill-conditioned inputs still pass the constructor's strict check
    return SymMatrix(0.5 * (inv + inv.conj().T))


def eigenvalues_hermitian(m: SymMatrix) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    return np.linalg.eigvalsh(m.mat)


def conj_by_structure(m: SymMatrix, s: StructureMatrix) -> SymMatrix:
    """Return s.m.s for one of the structure involutions."""
    if s.dim != m.dim:
        raise DimensionMismatchError(f"structure dim {s.dim} != matrix dim {m.dim}")
    sm = s.mat
    return SymMatrix(sm @ m.mat @ sm)


def structure_e(dim: int) -> np.ndarray:
    return _structure("E", dim)
