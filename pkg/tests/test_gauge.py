"""Deformed U(1) sector: strength, curvature, covariance, invariants,
field equations and the classical limit."""

import random
from fractions import Fraction

import pytest

from kmink import gauge
from kmink.fuzz import rand_polynomial
from kmink.minkowski import PlaneWave, PositionElement
from kmink.scalars import ScalarValue

X = [PositionElement.x(mu) for mu in range(4)]
Z = PositionElement.zero()
U1 = PositionElement.wave(PlaneWave.label(1))
U2 = PositionElement.wave(PlaneWave.label(2))
CFG_LINEAR = gauge.GaugeConfig((Z, X[0], Z, Z, Z))
CFG_FULL = gauge.GaugeConfig((X[1], X[0], Z, X[3], X[2]))
CFG_MIXED = gauge.GaugeConfig(
    (PositionElement.scalar(ScalarValue.number(1, 1)), X[2], X[1], Z, X[0])
)
ALL_CFGS = (CFG_LINEAR, CFG_FULL, CFG_MIXED)


def test_from_potentials_pads_with_zeros():
    cfg = gauge.GaugeConfig.from_potentials(Z, X[0])
    assert cfg.A == CFG_LINEAR.A
    assert cfg.g == ScalarValue.number(1)


def test_field_strength_examples():
    strength = gauge.field_strength(CFG_LINEAR)
    assert strength.get(0, 1) == PositionElement.one()
    assert strength.get(1, 0) == -PositionElement.one()
    for i in range(5):
        for j in range(i + 1, 5):
            if (i, j) != (0, 1):
                assert strength.get(i, j).is_zero()
    assert gauge.field_strength(gauge.GaugeConfig((Z,) * 5)).is_zero()
    const = gauge.GaugeConfig(tuple(PositionElement.scalar(n) for n in range(5)))
    assert gauge.field_strength(const).is_zero()


def test_curvature_two_routes():
    for cfg in ALL_CFGS:
        res_charged, res_literal = gauge.curvature_cross_check(cfg)
        assert not res_charged
        assert not res_literal  # g = 1: conventions coincide
    live = gauge.GaugeConfig((Z, X[1], Z, Z, Z), ScalarValue.number(2))
    res_charged, res_literal = gauge.curvature_cross_check(live)
    assert not res_charged  # Omega extraction matches the charged form always
    assert res_literal      # and differs from the literal form at g != 1


def test_curvature_zero_and_classical_components():
    assert gauge.curvature_form(gauge.GaugeConfig((Z,) * 5)).is_zero()
    omega = gauge.curvature_form(CFG_LINEAR)
    extracted = gauge.extract_strength(omega)
    assert extracted.get(0, 1) == PositionElement.one()


def test_gauge_transform_identity():
    assert gauge.gauge_transform(CFG_LINEAR, PositionElement.one()).A == CFG_LINEAR.A


def test_gauge_transform_rejects_non_unitary():
    with pytest.raises(ValueError):
        gauge.gauge_transform(CFG_LINEAR, X[1])
    with pytest.raises(ValueError):
        gauge.gauge_transform(CFG_LINEAR, U1 + U2)


def test_pure_gauge_flatness():
    zero_cfg = gauge.GaugeConfig((Z,) * 5)
    for u in (U1, U2, U1 * U2):
        pure = gauge.gauge_transform(zero_cfg, u)
        assert gauge.field_strength(pure).is_zero()


def test_strength_covariance():
    for cfg in ALL_CFGS:
        for u in (U1, U2):
            assert not gauge.check_f_covariance(cfg, u)


def test_divergence_covariance():
    for cfg in ALL_CFGS:
        for u in (U1, U2):
            assert not gauge.check_divergence_covariance(cfg, u)


def test_invariant_covariance_and_conjugation():
    for cfg in ALL_CFGS:
        for u in (U1, U2):
            assert not gauge.check_invariant_covariance(cfg, u)


def test_invariants_golden_value():
    c, c_plus, c_minus = gauge.invariants(CFG_LINEAR)
    assert c == PositionElement.scalar(-2)
    assert c_plus == PositionElement.scalar(-2)
    assert c_minus == c_plus.star()


def test_c_minus_is_star_of_c_plus():
    rng = random.Random(79)
    for _ in range(6):
        cfg = gauge.GaugeConfig(tuple(rand_polynomial(rng, 1, n_terms=1)
                                      for _ in range(5)))
        _c, c_plus, c_minus = gauge.invariants(cfg)
        assert c_minus == c_plus.star()


def test_commutator_identity_exact():
    live = gauge.GaugeConfig(CFG_FULL.A, ScalarValue.number(2))
    for i in range(5):
        for j in range(i + 1, 5):
            assert gauge.check_commutator_identity(live, i, j).is_zero()


def test_commutator_identity_on_elements():
    rng = random.Random(83)
    live = gauge.GaugeConfig(CFG_FULL.A, ScalarValue.number(2))
    op01 = gauge.check_commutator_identity(live, 0, 1)
    for _ in range(50):
        a = rand_polynomial(rng, 2, n_terms=2)
        assert op01.apply(a).is_zero()


def test_bianchi_identities():
    live = gauge.GaugeConfig(CFG_FULL.A, ScalarValue.number(2))
    for triple in ((0, 1, 2), (0, 1, 4), (1, 2, 3), (2, 3, 4), (0, 2, 4)):
        assert gauge.check_bianchi(live, *triple).is_zero()


def test_star_collapse():
    assert not gauge.check_star_collapse(U1)


def test_divergence_golden():
    div = gauge.divergence(CFG_LINEAR)
    want = (Z, Z, Z, Z, PositionElement.scalar(ScalarValue.kappa(-1)))
    assert all((a - b).is_zero() for a, b in zip(div, want))
    assert all(v.is_zero() for v in gauge.divergence(gauge.GaugeConfig((Z,) * 5)))


def test_covariant_derivative_reduces_to_derivative():
    from kmink.action import act_derivative

    zero_cfg = gauge.GaugeConfig((Z,) * 5)
    a = X[0] * X[1]
    for k in range(5):
        assert gauge.apply_covariant_derivative(zero_cfg, k, a) == act_derivative(k, a)


def test_covariant_derivative_componentwise_on_spinors():
    psi = (X[0], Z, X[1] * X[2], PositionElement.one())
    got = gauge.apply_covariant_derivative(CFG_FULL, 1, psi)
    want = tuple(gauge.apply_covariant_derivative(CFG_FULL, 1, comp) for comp in psi)
    assert all((g - w).is_zero() for g, w in zip(got, want))


def test_operator_and_elementwise_covariant_derivative_agree():
    a = X[0] * X[1]
    for k in range(5):
        op = gauge.covariant_derivative_op(CFG_FULL, k)
        assert op.apply(a) == gauge.apply_covariant_derivative(CFG_FULL, k, a)


def test_classical_limit_fixtures():
    fixtures = [
        gauge.GaugeConfig((Z, Z, Z, Z, X[1])),
        gauge.GaugeConfig((Z, X[0], Z, Z, Z)),
        gauge.GaugeConfig((X[1], X[0] * X[0], Z, Z, X[1] * X[2])),
    ]
    for cfg in fixtures:
        assert gauge.classical_limit(cfg).is_zero()


def test_classical_lagrangian_values():
    half = ScalarValue.number(Fraction(1, 2))
    cfg = gauge.GaugeConfig((Z, Z, Z, Z, X[1]))
    assert gauge.classical_lagrangian(cfg) == PositionElement.scalar(-half)
    cfg = gauge.GaugeConfig((Z, X[0], Z, Z, Z))
    assert gauge.classical_lagrangian(cfg) == PositionElement.scalar(half)


def test_classical_limit_rejects_waves():
    with pytest.raises(ValueError):
        gauge.classical_limit(gauge.GaugeConfig((U1, Z, Z, Z, Z)))


def test_charge_must_be_invertible():
    bad = gauge.GaugeConfig((Z,) * 5, ScalarValue.k(1, 0))
    with pytest.raises(ValueError):
        gauge.gauge_transform(bad, U1)


def test_read_config_text():
    cfg = gauge.read_config_text(
        "# comment\n"
        "A1 = x0        # trailing comment\n"
        "A4 = x1 * x2\n"
        "g = 2\n"
    )
    assert cfg.A[1] == X[0]
    assert cfg.A[4] == X[1] * X[2]
    assert cfg.A[0].is_zero() and cfg.A[2].is_zero() and cfg.A[3].is_zero()
    assert cfg.g == ScalarValue.number(2)
    cfg = gauge.read_config_text("A0 = 1/2")
    assert cfg.A[0] == PositionElement.scalar(ScalarValue.number(Fraction(1, 2)))
    with pytest.raises(ValueError):
        gauge.read_config_text("A9 = x0")
    with pytest.raises(ValueError):
        gauge.read_config_text("just text")
    with pytest.raises(ValueError):
        gauge.read_config_text("g = x0")
    with pytest.raises(ValueError):
        gauge.read_config_text("A1 = P0")


def test_transform_at_g2_still_covariant_in_charged_convention():
    cfg = gauge.GaugeConfig(CFG_LINEAR.A, ScalarValue.number(2))
    assert not gauge.check_f_covariance(cfg, U1, charged=True)
    assert not gauge.check_divergence_covariance(cfg, U1, charged=True)
    assert not gauge.check_invariant_covariance(cfg, U1, charged=True)
