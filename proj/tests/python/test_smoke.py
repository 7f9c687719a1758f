"""End-to-end checks of the Python bindings."""

import math

import numpy as np

import pytest

import magspec as m


def harper_setup(L=64.0, decay=m.DecayType.exponential, rate=1.0):
    grid = m.Grid(1, L, 1.0)
    spec = m.ModelSpec(
        m.ModelKind.harper,
        grid,
        decay_type=decay,
        decay_rate=rate,
        potential_lambda=1.0,
    )
    return grid, spec


def test_sh_norm_diagonal():
    grid = m.Grid(1, 8.0, 1.0)
    entries = np.diag([3.0 + 0j] * 8)
    op = m.KernelOperator(grid, entries, hermitian=True)
    assert m.sh_norm(op, 1.0).value == pytest.approx(3.0)


def test_eigvalsh_and_hausdorff():
    _, spec = harper_setup()
    model = m.build_harper(spec, m.PhaseFunction.zero())
    sig0 = m.eigvalsh(model.H)
    Hb = m.twist(model.H, m.PhaseFunction.sine(1.0), 0.05)
    sigb = m.eigvalsh(Hb)
    d = m.hausdorff(sig0, sigb)
    assert d >= 0.0
    # Weyl: Hausdorff distance bounded by the operator-norm distance.
    diff = m.KernelOperator(Hb.grid, Hb.entries - model.H.entries, hermitian=True)
    assert d <= m.op_norm(diff) + 1e-9


def test_defect_and_certificate():
    grid, spec = harper_setup()
    phi = m.PhaseFunction.quadratic(0.5)
    model = m.build_harper(spec, phi)
    sig = m.eigvalsh(model.H)
    z = complex(min(sig.values) - 1.0, 0.0)
    b = 0.05
    P = m.build_partition(grid, b)
    rep = m.defect(model.H, phi, b, z, P)
    assert rep.norm_S > 0.0
    cert = m.certify_resolvent_point(model.H, phi, b, z, P)
    assert cert.in_resolvent
    sigb = m.eigvalsh(m.twist(model.H, phi, b))
    assert m.spectral_distance(z, sigb) > 0.0


def test_sweep_and_fit():
    grid, spec = harper_setup()
    phi = m.PhaseFunction.quadratic(0.5)
    model = m.build_harper(spec, phi)
    sig = m.eigvalsh(model.H)
    z = complex(min(sig.values) - 1.0, 0.0)
    bs = m.default_b_grid(grid, 0.02, 0.2)
    table = m.sweep_defect(spec, phi, z, bs, 2)
    assert len(table.b) == len(table.value) == len(bs)
    fit = m.fit_holder(table, 0.5)
    assert fit.r_squared > 0.9
    assert math.isfinite(fit.slope)


def test_config_error_on_bad_power():
    grid = m.Grid(1, 32.0, 1.0)
    spec = m.ModelSpec(
        m.ModelKind.harper,
        grid,
        decay_type=m.DecayType.power,
        decay_rate=0.5,
        potential_lambda=1.0,
    )
    with pytest.raises(m.ConfigError):
        m.build_harper(spec, m.PhaseFunction.zero())


def test_numeric_error_on_spectral_z():
    _, spec = harper_setup()
    model = m.build_harper(spec, m.PhaseFunction.zero())
    sig = m.eigvalsh(model.H)
    with pytest.raises(m.NumericError):
        m.resolvent(model.H, complex(sig.values[0], 0.0))


def test_custom_phase_callable():
    # Pure gauge phase: antisymmetric and all fluxes telescope to zero.
    phi = m.PhaseFunction(lambda x, xp: x[0] - xp[0], 1.0)
    rep = m.validate_phase(phi, m.Grid(1, 16.0, 1.0), 200, seed=7)
    assert rep.ok
    assert rep.max_antisymmetry_violation == pytest.approx(0.0, abs=1e-12)
    assert rep.max_flux_ratio == pytest.approx(0.0, abs=1e-12)
