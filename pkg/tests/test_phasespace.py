import math

import numpy as np
import pytest

from conftest import assert_close
from gausspair import onemode, phasespace, states
from gausspair.kernels import convert
from gausspair.onemode import OneModeMoments
from gausspair.phasespace import GridSpec, PhasePoint


def wigner_kernel(n, m=0.0):
    return convert(onemode.build_C(OneModeMoments(n, m)), "W")


class TestPhasePoint:
    def test_zvector_convention(self):
        z = PhasePoint.one_mode(1.0, 1.0).zvector
        want = (1.0 + 1.0j) / math.sqrt(2.0)
        assert z[0] == pytest.approx(want)
        assert z[1] == pytest.approx(np.conj(want))

    def test_two_mode_layout(self):
        z = PhasePoint.two_mode(1.0, 0.0, 0.0, 2.0).zvector
        assert z.shape == (4,)
        assert z[2] == pytest.approx(2.0j / math.sqrt(2.0))


class TestGridSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            GridSpec(1.0, 0.0, 10)
        with pytest.raises(ValueError):
            GridSpec(0.0, 1.0, 1)

    def test_axis_and_step(self):
        g = GridSpec(-1.0, 1.0, 5)
        assert_close(g.axis, [-1.0, -0.5, 0.0, 0.5, 1.0])
        assert g.step == pytest.approx(0.5)


class TestWignerValue:
    def test_vacuum_origin(self):
        assert phasespace.wigner_value(
            wigner_kernel(0.0), PhasePoint.one_mode(0.0, 0.0)
        ) == pytest.approx(2.0)

    def test_thermal_origin(self):
        assert phasespace.wigner_value(
            wigner_kernel(1.0), PhasePoint.one_mode(0.0, 0.0)
        ) == pytest.approx(2.0 / 3.0)

    def test_peak_at_origin(self):
        k = wigner_kernel(0.5, 0.3)
        origin = phasespace.wigner_value(k, PhasePoint.one_mode(0.0, 0.0))
        rng = np.random.default_rng(7)
        for _ in range(50):
            q, p = rng.uniform(-3, 3, size=2)
            assert phasespace.wigner_value(k, PhasePoint.one_mode(q, p)) <= origin

    def test_normalization_on_grid(self):
        for n in (0.0, 1.0):
            k = wigner_kernel(n)
            sigma = math.sqrt(n + 0.5)
            grid = GridSpec(-6 * sigma, 6 * sigma, 201)
            table = phasespace.wigner_grid(k, grid)
            total = np.sum(table[:, 2]) * grid.step**2 / (2 * math.pi)
            assert 0.999 <= total <= 1.001

    def test_requires_w_kernel(self):
        c = onemode.build_C(OneModeMoments(0.0, 0.0))
        with pytest.raises(ValueError):
            phasespace.wigner_value(c, PhasePoint.one_mode(0.0, 0.0))


class TestCharacteristicValue:
    def test_unit_trace_at_origin(self):
        c = onemode.build_C(OneModeMoments(1.3, 0.4j))
        assert phasespace.characteristic_value(
            c, PhasePoint.one_mode(0.0, 0.0)
        ) == pytest.approx(1.0)

    def test_vacuum_at_unit_q(self):
        c = onemode.build_C(OneModeMoments(0.0, 0.0))
        # q' = sqrt(2), p' = 0 gives z = 1 and z^dag C z = 1
        got = phasespace.characteristic_value(c, PhasePoint.one_mode(math.sqrt(2.0), 0.0))
        assert got == pytest.approx(math.exp(-0.5))

    def test_reflection_symmetry(self):
        c = onemode.build_C(OneModeMoments(0.7, 0.2 + 0.1j))
        for q, p in [(0.3, -1.2), (1.1, 0.4)]:
            plus = phasespace.characteristic_value(c, PhasePoint.one_mode(q, p))
            minus = phasespace.characteristic_value(c, PhasePoint.one_mode(-q, -p))
            assert minus == pytest.approx(np.conj(plus))


class TestScanWavefunction:
    def test_ground_state_rotationally_symmetric(self):
        table = phasespace.scan_wavefunction(
            states.SmoothedEprParam(0.0), GridSpec(-2.0, 2.0, 21)
        )
        psi = dict(((round(r[0], 6), round(r[1], 6)), r[2]) for r in table)
        for q in np.linspace(-2, 2, 21):
            q = round(float(q), 6)
            assert psi[(q, q)] == pytest.approx(psi[(q, -q)], abs=1e-12)

    def test_entangled_ridge_ratio(self):
        p = states.SmoothedEprParam(1.0)
        table = phasespace.scan_wavefunction(p, GridSpec(-1.0, 1.0, 3))
        psi = dict(((round(r[0], 6), round(r[1], 6)), r[2]) for r in table)
        assert psi[(1.0, 1.0)] / psi[(1.0, -1.0)] == pytest.approx(
            math.exp(4.0 * math.sqrt(2.0)), rel=1e-9
        )

    def test_maximum_at_origin(self):
        table = phasespace.scan_wavefunction(
            states.SmoothedEprParam(1.0), GridSpec(-3.0, 3.0, 31)
        )
        best = table[np.argmax(table[:, 2])]
        assert best[0] == pytest.approx(0.0) and best[1] == pytest.approx(0.0)

    def test_row_major_order(self):
        table = phasespace.scan_wavefunction(
            states.SmoothedEprParam(0.0), GridSpec(0.0, 1.0, 2)
        )
        assert_close(table[:, :2], [[0, 0], [0, 1], [1, 0], [1, 1]])
