"""Gamma matrices, Dirac operators, the quantum Clifford bundle."""

import random

from kmink import dirac
from kmink import momentum as mom
from kmink.action import act_f
from kmink.fuzz import rand_position, rand_spinor
from kmink.minkowski import PositionElement
from kmink.scalars import ScalarValue

X = [PositionElement.x(mu) for mu in range(4)]
REP_ZERO = dirac.GammaRep(dirac.GAMMA4_ZERO)
REP_UNIT = dirac.GammaRep(dirac.Gamma4("unit", ScalarValue.number(2)))
REP_G5 = dirac.GammaRep(dirac.Gamma4("gamma5", ScalarValue.number(1)))
ALL_REPS = (REP_ZERO, REP_UNIT, REP_G5)


def test_clifford_relations():
    assert dirac.check_clifford_relations() == []


def test_dirac_square_zero_choice():
    residual, asserted = dirac.check_dirac_square(REP_ZERO)
    assert asserted
    assert dirac.op_is_zero(residual)


def test_dirac_square_unit_choice_residual():
    residual, asserted = dirac.check_dirac_square(REP_UNIT)
    assert not asserted
    # residual = lam^2 del4^2 Id + 2 lam gamma^mu del_mu del_4
    d = mom.derivatives()
    lam = ScalarValue.number(2)
    want = dirac.op_from_matrix(dirac.ID4, (d[4] * d[4]).scale(lam * lam))
    for mu in range(4):
        want = dirac.op_add(
            want,
            dirac.op_from_matrix(REP_ZERO.gammas[mu],
                                 (d[mu] * d[4]).scale(lam * ScalarValue.number(2))),
        )
    assert dirac.op_is_zero(dirac.op_sub(residual, want))


def test_dirac_square_gamma5_choice_residual():
    residual, asserted = dirac.check_dirac_square(REP_G5)
    assert not asserted
    d4 = mom.derivatives()[4]
    want = dirac.op_from_matrix(dirac.ID4, d4 * d4)
    assert dirac.op_is_zero(dirac.op_sub(residual, want))


def test_dirac_kills_constant_spinor():
    psi = (PositionElement.one(), PositionElement.zero(),
           PositionElement.zero(), PositionElement.one())
    for rep in ALL_REPS:
        out = dirac.op_apply(dirac.build_dirac(rep), psi)
        assert dirac.spinor_is_zero(out)


def test_clifford_image_counit_action():
    # on a constant spinor tau^mu_c acts as gamma^mu
    psi = (PositionElement.one(), PositionElement.zero(),
           PositionElement.zero(), PositionElement.zero())
    for mu in range(4):
        got = dirac.op_apply(dirac.clifford_image(mu, REP_ZERO), psi)
        gam = REP_ZERO.gammas[mu]
        want = tuple(PositionElement.scalar(gam[r][0]) for r in range(4))
        assert all((g - w).is_zero() for g, w in zip(got, want))


def test_clifford_image_no_gamma4_term_when_zero():
    img = dirac.clifford_image(4, REP_ZERO)
    f = mom.f_matrix()
    want = dirac.op_zero()
    for j in range(4):
        want = dirac.op_add(want, dirac.op_from_matrix(REP_ZERO.gammas[j], f[4][j]))
    assert dirac.op_is_zero(dirac.op_sub(img, want))


def test_diagram_commutes():
    rng = random.Random(71)
    for rep in ALL_REPS:
        for _ in range(50):
            a = rand_position(rng, 2, n_terms=2)
            psi = rand_spinor(rng, 2)
            residual = dirac.check_diagram(a, psi, rep)
            assert dirac.spinor_is_zero(residual)


def test_diagram_examples():
    psi_const = (PositionElement.one(),) + (PositionElement.zero(),) * 3
    assert dirac.spinor_is_zero(dirac.check_diagram(X[0], psi_const, REP_ZERO))
    assert dirac.spinor_is_zero(
        dirac.check_diagram(PositionElement.one(), psi_const, REP_ZERO)
    )
    psi = (PositionElement.zero(), X[2], PositionElement.zero(),
           PositionElement.zero())
    assert dirac.spinor_is_zero(dirac.check_diagram(X[1] * X[0], psi, REP_ZERO))


def test_clifford_bimodule_relation():
    rng = random.Random(73)
    for rep in ALL_REPS:
        for _ in range(10):
            a = rand_position(rng, 2, n_terms=2)
            psi = rand_spinor(rng, 2)
            for i in range(5):
                lhs = dirac.op_apply(dirac.clifford_image(i, rep),
                                     dirac.spinor_left_mul(a, psi))
                rhs = dirac.spinor_zero()
                for j in range(5):
                    fa = act_f(i, j, a)
                    if fa.is_zero():
                        continue
                    rhs = dirac.spinor_add(
                        rhs,
                        dirac.spinor_left_mul(
                            fa, dirac.op_apply(dirac.clifford_image(j, rep), psi)
                        ),
                    )
                assert dirac.spinor_is_zero(dirac.spinor_sub(lhs, rhs))


def test_published_clifford_variant_differs():
    # the metric-lowered contraction breaks the diagram; kept only as a report
    diff = dirac.op_sub(
        dirac.clifford_image(1, REP_ZERO),
        dirac.clifford_image_published(1, REP_ZERO),
    )
    assert not dirac.op_is_zero(diff)


def test_antihermiticity_report():
    assert dirac.check_antihermiticity() == [(i, "0") for i in range(5)]


def test_clifford_image_classical_limit():
    for mu in range(4):
        img = dirac.op_kappa_expand(dirac.clifford_image(mu, REP_ZERO), 0)
        gam = dirac.op_from_matrix(REP_ZERO.gammas[mu], mom.MomentumElement.one())
        assert dirac.op_is_zero(dirac.op_sub(img, gam))
