import math

import numpy as np
import pytest

import patomo


def test_vacuum_gaussian():
    xs = np.linspace(-3, 3, 13)
    w = patomo.tomogram(patomo.PhotonAddedCoherent(0.0, 0), xs, 0.4)
    np.testing.assert_allclose(w, np.exp(-xs**2) / math.sqrt(math.pi), atol=1e-14)


def test_closed_form_matches_oracle():
    state = patomo.PhotonAddedCoherent(1 + 0.5j, 2)
    env = patomo.cosine_envelope(0.7)
    for th in (0.3, 1.9):
        closed = float(patomo.tomogram(state, 0.5, th, env))
        assert abs(closed - patomo.oracle_tomogram(state, 0.5, th, env)) < 1e-8


def test_grid_shape_and_symmetry():
    g = patomo.tomogram_grid(patomo.EvenOddPAC(1.0, 1, patomo.Parity.ODD), "-3:3:13:0:6.283185307179586:9")
    assert g.shape == (9, 13)
    assert (g >= 0).all()
    # rows 0 and 4 are theta = 0 and pi
    np.testing.assert_allclose(g[4], g[0][::-1], atol=1e-9)


def test_moments_and_sampling():
    m = patomo.moments(patomo.Thermal(1.0))
    assert abs(m["mean_photon_number"] - 1 / (math.e - 1)) < 1e-9
    a = patomo.sample(patomo.Thermal(1.0), 0.0, 1000, seed=5)
    b = patomo.sample(patomo.Thermal(1.0), 0.0, 1000, seed=5)
    assert a.shape == (1000,)
    assert np.array_equal(a, b)


def test_reconstruct_vacuum():
    rho, info = patomo.reconstruct(patomo.PhotonAddedCoherent(0.0, 0), n_max=6)
    assert rho.shape == (7, 7)
    assert rho[0, 0].real > 0.999
    assert abs(info["trace_before_normalization"] - 1) < 1e-2


def test_envelope_wronskian():
    env = patomo.solve_epsilon(0.2, 2.0, 3.0)[-1]
    assert abs(env.wronskian() + 2j) < 1e-9
    assert abs(patomo.stationary_envelope(1.0).epsilon - complex(math.cos(1), math.sin(1))) < 1e-15


def test_errors():
    with pytest.raises(ValueError):
        patomo.tomogram(patomo.EvenOddPAC(0.0, 1, patomo.Parity.ODD), 0.0, 0.0)
    with pytest.raises(ValueError):
        patomo.hermite(65, 1.0)
    with pytest.raises(ValueError):
        patomo.tomogram(patomo.Thermal(-1.0), 0.0, 0.0)
