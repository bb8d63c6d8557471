"""Shared strategies and helpers for the test suite."""

import numpy as np
import pytest
from hypothesis import strategies as st

from gausspair import onemode, twomode
from gausspair.errors import NotAStateError
from gausspair.kernels import GaussianKernel


def _finite(lo, hi):
    return st.floats(min_value=lo, max_value=hi, allow_nan=False, allow_infinity=False)


@st.composite
def one_mode_moments(draw, positive_only=False):
    """Random valid one-mode moments; optionally restricted to positive states."""
    n = draw(_finite(0.0, 3.0))
    bound = n if positive_only else n + 0.5
    r = draw(_finite(0.0, 0.95)) * bound
    phase = draw(_finite(0.0, 2 * np.pi))
    return onemode.OneModeMoments(n=n, m=r * np.exp(1j * phase))


@st.composite
def two_mode_moments(draw):
    """Random two-mode moments whose C matrix is safely positive definite."""
    n1 = draw(_finite(0.1, 2.5))
    n2 = draw(_finite(0.1, 2.5))
    coups = [
        draw(_finite(0.0, 0.4)) * np.exp(1j * draw(_finite(0.0, 2 * np.pi)))
        for _ in range(4)
    ]
    p = twomode.TwoModeMoments(n1=n1, n2=n2, m1=coups[0], m2=coups[1], ms=coups[2], mc=coups[3])
    eigs = np.linalg.eigvalsh(twomode.assemble_c(p))
    if eigs[0] < 1e-6:
        # couplings too strong for these occupations; shrink them
        p = twomode.TwoModeMoments(n1=n1, n2=n2)
    return p


@st.composite
def two_mode_kernels(draw):
    return twomode.build_C2(draw(two_mode_moments()))


def random_one_mode(rng: np.random.Generator, positive_only=False) -> onemode.OneModeMoments:
    """Plain-RNG sampler for bulk loops where hypothesis would be too slow."""
    n = rng.uniform(0.0, 3.0)
    bound = n if positive_only else n + 0.5
    r = rng.uniform(0.0, 0.95) * bound
    return onemode.OneModeMoments(n=n, m=r * np.exp(1j * rng.uniform(0, 2 * np.pi)))


def random_two_mode(rng: np.random.Generator, coupling=0.4, n_hi=2.5) -> twomode.TwoModeMoments:
    while True:
        p = twomode.TwoModeMoments(
            n1=rng.uniform(0.1, n_hi),
            n2=rng.uniform(0.1, n_hi),
            m1=rng.uniform(0, coupling) * np.exp(1j * rng.uniform(0, 2 * np.pi)),
            m2=rng.uniform(0, coupling) * np.exp(1j * rng.uniform(0, 2 * np.pi)),
            ms=rng.uniform(0, coupling) * np.exp(1j * rng.uniform(0, 2 * np.pi)),
            mc=rng.uniform(0, coupling) * np.exp(1j * rng.uniform(0, 2 * np.pi)),
        )
        if np.linalg.eigvalsh(twomode.assemble_c(p))[0] > 1e-6:
            return p


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def assert_close(a, b, tol=1e-10):
    assert np.allclose(a, b, atol=tol, rtol=0.0), f"\n{a}\n!=\n{b}"
