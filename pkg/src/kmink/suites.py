"""Verification suites: every published identity re-derived exactly.

Each check produces one record with a stable id, the equation tag it
certifies, a status (pass / fail / reported) and the rendered residual.
`reported` marks computed-but-not-asserted results: documented discrepancies
in the published formulas, convention reconciliations and limit expansions.

Suites are deterministic in (seed, max_degree, gamma4); records are
order-normalized so the machine-readable output is byte-identical across
runs.  Independent checks may execute concurrently (KMINK_THREADS).
Wall times in the human table are amortized per suite; the JSON ledger
carries no timings at all.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import dirac, fuzz, gauge, momentum as mom
from .action import HeisenbergElement, act, act_derivative, act_f, word
from .forms import OneForm, check_metric_centrality, check_tau4_definition, exterior_d
from .minkowski import PlaneWave, PositionElement, PositionTensor
from .scalars import I, ONE, ScalarValue

IMK = I * ScalarValue.kappa(-1)

SUITE_NAMES = ("hopf", "action", "calculus", "dirac", "gauge", "limit")


@dataclass
class CheckRecord:
    suite: str
    check_id: str
    equation: str
    status: str  # "pass" | "fail" | "reported"
    residual: str = "0"
    wall_ms: float = 0.0


@dataclass
class RunConfig:
    seed: int = 42
    max_degree: int = 2
    gamma4: dirac.Gamma4 = field(default_factory=lambda: dirac.GAMMA4_ZERO)


def _record(suite, check_id, equation, residual_zero, residual_text="0"):
    status = "pass" if residual_zero else "fail"
    return CheckRecord(suite, check_id, equation, status,
                       "0" if residual_zero else residual_text)


def _reported(suite, check_id, equation, text):
    return CheckRecord(suite, check_id, equation, "reported", text)


# -- hopf ---------------------------------------------------------------------


def suite_hopf(cfg):
    rng = random.Random(cfg.seed)
    out = []

    x = [PositionElement.x(mu) for mu in range(4)]
    one = PositionElement.one()

    for mu in range(4):
        delta = x[mu].coproduct()
        want = PositionTensor.outer(one, x[mu]) + PositionTensor.outer(x[mu], one)
        out.append(_record("hopf", f"coproduct-x{mu}-primitive", "1.4",
                           (delta - want).is_zero(), (delta - want).render()))
        out.append(_record("hopf", f"counit-x{mu}", "1.4", x[mu].counit().is_zero()))
        res = x[mu].antipode() + x[mu]
        out.append(_record("hopf", f"antipode-x{mu}", "1.4", res.is_zero(), res.render()))

    res = (x[0] * x[1]).antipode() - x[1] * x[0]
    out.append(_record("hopf", "antipode-antihom-x0x1", "1.4", res.is_zero(), res.render()))

    for n in range(6):
        a = fuzz.rand_polynomial(rng, cfg.max_degree)
        back = a.coproduct().left_counit()
        out.append(_record("hopf", f"counit-axiom-{n:02d}", "1.4", (back - a).is_zero(),
                           (back - a).render()))
        folded = a.coproduct().multiply_legs(lambda e: e.antipode())
        want = PositionElement.scalar(a.counit())
        out.append(_record("hopf", f"antipode-axiom-{n:02d}", "1.4",
                           (folded - want).is_zero(), (folded - want).render()))

    w1 = PositionElement.wave(PlaneWave.label(1))
    key = next(iter(w1.terms))
    delta = w1.coproduct()
    want = PositionTensor({(key, key): ONE})
    out.append(_record("hopf", "coproduct-wave-grouplike", "1.4",
                       (delta - want).is_zero()))
    res = _grouplike_series_residual(3)
    out.append(_record("hopf", "coproduct-wave-series-oracle", "derived-convention",
                       res, "truncated coproduct mismatch"))

    p = [mom.MomentumElement.P(mu) for mu in range(4)]
    e_minus = mom.MomentumElement.exp_weight(-1)
    mone = mom.MomentumElement.one()

    delta = p[0].coproduct()
    want = mom.MomentumTensor.outer(p[0], mone) + mom.MomentumTensor.outer(mone, p[0])
    out.append(_record("hopf", "coproduct-P0-primitive", "1.5", (delta - want).is_zero()))
    for m in (1, 2, 3):
        delta = p[m].coproduct()
        want = (mom.MomentumTensor.outer(p[m], mone)
                + mom.MomentumTensor.outer(e_minus, p[m]))
        out.append(_record("hopf", f"coproduct-P{m}", "1.5", (delta - want).is_zero()))
        res = p[m].antipode() + mom.MomentumElement.exp_weight(1) * p[m]
        out.append(_record("hopf", f"antipode-P{m}", "1.5", res.is_zero(), res.render()))
        res = p[m].antipode().antipode() - p[m]
        out.append(_record("hopf", f"antipode-squared-P{m}", "1.5", res.is_zero()))
    res = p[0].antipode() + p[0]
    out.append(_record("hopf", "antipode-P0", "1.5", res.is_zero()))
    out.append(_record("hopf", "counit-P0sq-plus-3", "1.5",
                       (p[0] * p[0] + mom.MomentumElement.scalar(3)).counit() == 3))

    f = mom.f_matrix()
    gens = [p[0], p[1], mom.MomentumElement.exp_weight(1)] + [f[i][j] for i in range(5) for j in range(5)]
    for idx, q in enumerate(gens):
        left = _mt_coassoc_left(q)
        right = _mt_coassoc_right(q)
        out.append(_record("hopf", f"coassociativity-{idx:02d}", "1.5",
                           left == right))
    for idx, q in enumerate([p[0], p[1], p[2], p[3]] + [f[i][j] for i in range(5) for j in range(5)]):
        folded = q.coproduct().multiply_legs(lambda e: e.antipode())
        want = mom.MomentumElement.scalar(q.counit())
        out.append(_record("hopf", f"antipode-axiom-mom-{idx:02d}", "1.5",
                           (folded - want).is_zero(), (folded - want).render()))

    for n in range(6):
        a = fuzz.rand_momentum(rng, cfg.max_degree)
        b = fuzz.rand_momentum(rng, cfg.max_degree)
        res = (a * b).star() - a.star() * b.star()
        out.append(_record("hopf", f"star-multiplicative-mom-{n:02d}", "1.5", res.is_zero()))

    for name, eq, residual in mom.verify_f_identities():
        if eq in ("1.23", "2.6"):
            out.append(_record("hopf", name.replace(" ", ""), eq, residual == "0", residual))
    return out


def _grouplike_series_residual(order):
    """Order-`order` oracle: the coproduct of the truncated exponential of
    a label-1 wave equals the truncated outer square, term by term."""
    series = _truncated_wave(PlaneWave.label(1), order)
    delta = series.coproduct()
    square = PositionTensor.outer(series, series)
    filtered = PositionTensor(
        {k: v.filter_k_degree(order) for k, v in square.terms.items()}
    )
    filtered = PositionTensor({k: v for k, v in filtered.terms.items() if not v.is_zero()})
    diff = delta - filtered
    return diff.is_zero()


def _truncated_wave(w, order):
    """Polynomial truncation of exp(i q.x) exp(i K x^0) to total momentum
    degree <= order; the independent series oracle for plane-wave laws."""
    from math import factorial

    spatial_lin = PositionElement.zero()
    for m in (1, 2, 3):
        spatial_lin = spatial_lin + PositionElement.x(m).scale(I * w.spatial[m - 1])
    time_lin = PositionElement.x(0).scale(I * w.time_scalar())
    acc = PositionElement.zero()
    spow = PositionElement.one()
    for a in range(order + 1):
        if a:
            spow = spow * spatial_lin
        tpow = PositionElement.one()
        for b in range(order + 1 - a):
            if b:
                tpow = tpow * time_lin
            coeff = ScalarValue.number(Fraction(1, factorial(a) * factorial(b)))
            acc = acc + (spow * tpow).scale(coeff)
    return acc


def wave_product_series_residual(order=4):
    """Engine plane-wave product vs the order-`order` truncated-series
    oracle, compared term by term after kappa expansion and k-degree cut."""
    w1, w2 = PlaneWave.label(1), PlaneWave.label(2)
    lhs = _truncated_wave(w1, order) * _truncated_wave(w2, order)
    product = PositionElement.wave(w1) * PositionElement.wave(w2)
    (_a, _d, w12), coeff = next(iter(product.terms.items()))
    rhs = _truncated_wave(w12, order).scale(coeff)
    lhs = lhs.map_coeffs(lambda s: s.kappa_expand(order).filter_k_degree(order))
    rhs = rhs.map_coeffs(lambda s: s.kappa_expand(order).filter_k_degree(order))
    return lhs - rhs


# -- action ---------------------------------------------------------------------


def suite_action(cfg):
    rng = random.Random(cfg.seed + 1)
    out = []

    x = [PositionElement.x(mu) for mu in range(4)]
    p = [mom.MomentumElement.P(mu) for mu in range(4)]

    for mu in range(4):
        for nu in range(4):
            lhs = word(x[mu], x[nu]) - word(x[nu], x[mu])
            rhs = HeisenbergElement.coerce(
                (x[nu].scale(IMK) if mu == 0 else PositionElement.zero())
                - (x[mu].scale(IMK) if nu == 0 else PositionElement.zero())
            )
            out.append(_record("action", f"xx-commutator-{mu}{nu}", "1.2",
                               (lhs - rhs).is_zero()))

    for mu in range(4):
        for nu in range(4):
            lhs = word(p[mu], x[nu]) - word(x[nu], p[mu])
            if mu == 0:
                want = HeisenbergElement.coerce(
                    PositionElement.scalar(-I) if nu == 0 else PositionElement.zero()
                )
            elif nu == 0:
                want = HeisenbergElement.from_momentum(p[mu]).scale(IMK)
            else:
                want = HeisenbergElement.coerce(
                    PositionElement.scalar(-I) if mu == nu else PositionElement.zero()
                )
            out.append(_record("action", f"cross-relation-P{mu}-x{nu}", "1.9",
                               (lhs - want).is_zero()))

    e_lam = mom.MomentumElement.exp_weight(1)
    lhs = word(e_lam, x[0]) - word(x[0], e_lam)
    want = HeisenbergElement.from_momentum(e_lam).scale(-IMK)
    out.append(_record("action", "cross-relation-Exp-x0", "1.9", (lhs - want).is_zero()))
    lhs = word(e_lam, x[1]) - word(x[1], e_lam)
    out.append(_record("action", "cross-relation-Exp-x1", "1.9", lhs.is_zero()))

    for mu in range(4):
        for nu in range(4):
            got = act(p[mu], x[nu])
            want = PositionElement.scalar(-I) if mu == nu else PositionElement.zero()
            out.append(_record("action", f"pairing-P{mu}-x{nu}", "1.6",
                               (got - want).is_zero()))

    w1 = PositionElement.wave(PlaneWave.label(1))
    for mu in range(4):
        got = act(p[mu], w1)
        want = w1.scale(ScalarValue.k(1, mu))
        out.append(_record("action", f"wave-eigenvalue-P{mu}", "1.5",
                           (got - want).is_zero()))
    res = w1 * w1.star() - PositionElement.one()
    out.append(_record("action", "wave-unitarity", "0.11", res.is_zero(), res.render()))
    res = wave_product_series_residual(4)
    out.append(_record("action", "wave-product-series-oracle", "1.5",
                       res.is_zero(), res.render()))

    f = mom.f_matrix()
    probes = [p[0], p[1], p[2], mom.derivatives()[0], mom.derivatives()[4],
              f[0][0], f[0][4], f[4][0], f[1][0]]
    for n in range(8):
        a = fuzz.rand_position(rng, min(cfg.max_degree, 2), waves=True)
        b = fuzz.rand_position(rng, min(cfg.max_degree, 2), waves=True)
        q = probes[rng.randrange(len(probes))]
        lhs = act(q, a * b)
        rhs = PositionElement.zero()
        for (kl, kr), c in q.coproduct().terms.items():
            left = act(mom.MomentumElement({kl: ONE}), a)
            right = act(mom.MomentumElement({kr: ONE}), b)
            rhs = rhs + (left * right).scale(c)
        out.append(_record("action", f"module-algebra-law-{n:02d}", "1.22",
                           (lhs - rhs).is_zero()))

    d = mom.derivatives()
    for i in range(5):
        a = fuzz.rand_position(rng, min(cfg.max_degree, 2), waves=False)
        lhs = word(d[i], a) - word(a, d[i])
        rhs = HeisenbergElement()
        for j in range(5):
            da = act_derivative(j, a)
            if da.is_zero():
                continue
            rhs = rhs + HeisenbergElement.from_position(da) * HeisenbergElement.from_momentum(f[j][i])
        out.append(_record("action", f"operator-identity-del{i}", "2.5",
                           (lhs - rhs).is_zero()))

    e = mom.vector_fields()
    for mu in range(4):
        for nu in range(4):
            lhs = word(e[mu], x[nu]) - word(x[nu], e[mu])
            term = mom.MomentumElement.zero()
            if mu == 0:
                term = term + e[nu]
            if mu == nu:
                term = term - (e[0] + e[4]).scale(mom.METRIC5[mu])
            rhs = HeisenbergElement.from_momentum(term.scale(IMK))
            out.append(_record("action", f"vector-field-relation-{mu}{nu}", "1.11",
                               (lhs - rhs).is_zero()))
    for mu in range(4):
        lhs = word(e[4], x[mu]) - word(x[mu], e[4])
        rhs = HeisenbergElement.from_momentum(e[mu].scale(-IMK))
        out.append(_record("action", f"vector-field-relation-4{mu}", "1.11",
                           (lhs - rhs).is_zero()))

    for name, eq, residual in mom.verify_f_identities():
        if eq in ("1.25", "1.26"):
            out.append(_record("action", name.replace(" ", ""), eq,
                               residual == "0", residual))
    for name, eq, residual in mom.verify_box_identities():
        if eq == "derived-convention":
            out.append(_reported("action", "box-kappa-order0", eq, residual))
        else:
            out.append(_record("action", name.replace(" ", ""), eq, residual == "0",
                               residual))

    flow = mom.f_lowered()
    for n in range(8):
        a = fuzz.rand_position(rng, min(cfg.max_degree, 2), waves=True)
        i, j = rng.randrange(5), rng.randrange(5)
        lhs = act_f(i, j, a.star()).star()
        rhs = act(flow[j][i], a)
        out.append(_record("action", f"hermiticity-relation-{n:02d}", "1.28",
                           (lhs - rhs).is_zero()))

    for n in range(4):
        q = fuzz.rand_momentum(rng, cfg.max_degree)
        got = act(q, PositionElement.one())
        want = PositionElement.scalar(q.counit())
        out.append(_record("action", f"vacuum-normalization-{n:02d}", "1.5",
                           (got - want).is_zero()))

    for n in range(5):
        a = fuzz.rand_position(rng, min(cfg.max_degree, 2), waves=True, n_terms=2)
        b = fuzz.rand_position(rng, min(cfg.max_degree, 2), waves=True, n_terms=2)
        c = fuzz.rand_position(rng, min(cfg.max_degree, 2), waves=True, n_terms=2)
        res = (a * b) * c - a * (b * c)
        out.append(_record("action", f"associativity-{n:02d}", "1.2", res.is_zero()))
        res = (a * b).star() - b.star() * a.star()
        out.append(_record("action", f"star-antihom-{n:02d}", "1.2", res.is_zero()))
        res = a.star().star() - a
        out.append(_record("action", f"star-involution-{n:02d}", "1.2", res.is_zero()))
    return out


def _mt_coassoc_left(q):
    return q.coproduct().coproduct_left()


def _mt_coassoc_right(q):
    return q.coproduct().coproduct_right()


# -- calculus ---------------------------------------------------------------------


def suite_calculus(cfg):
    rng = random.Random(cfg.seed + 2)
    out = []

    x = [PositionElement.x(mu) for mu in range(4)]

    for mu in range(4):
        res = exterior_d(x[mu]) - OneForm.basis(mu)
        out.append(_record("calculus", f"d-x{mu}-is-tau{mu}", "1.14", res.is_zero()))
    out.append(_record("calculus", "d-constant", "2.2",
                       exterior_d(PositionElement.one()).is_zero()))
    want = OneForm.basis(0).left_mul(x[0].scale(2)) + OneForm.basis(4).scale(-IMK)
    res = exterior_d(x[0] * x[0]) - want
    out.append(_record("calculus", "d-x0-squared", "2.2", res.is_zero(), res.render()))

    for i in range(5):
        tau_i = OneForm.basis(i)
        for nu in range(4):
            lhs = tau_i.right_mul(x[nu]) - tau_i.left_mul(x[nu])
            rhs = OneForm()
            if i < 4:
                if i == 0:
                    rhs = rhs + OneForm.basis(nu).scale(IMK)
                if i == nu:
                    rhs = rhs - (OneForm.basis(0) + OneForm.basis(4)).scale(
                        IMK * ScalarValue.number(mom.METRIC5[i])
                    )
            else:
                rhs = OneForm.basis(nu).scale(-IMK)
            out.append(_record("calculus", f"bimodule-tau{i}-x{nu}", "1.15",
                               (lhs - rhs).is_zero()))

    n_pairs = max(12, 100 if cfg.max_degree >= 3 else 20)
    for n in range(n_pairs):
        a = fuzz.rand_position(rng, cfg.max_degree, waves=True, n_terms=2)
        b = fuzz.rand_position(rng, cfg.max_degree, waves=True, n_terms=2)
        lhs = exterior_d(a * b)
        rhs = exterior_d(b).left_mul(a) + exterior_d(a).right_mul(b)
        out.append(_record("calculus", f"leibniz-{n:03d}", "2.3", (lhs - rhs).is_zero()))

    for n in range(10):
        w = fuzz.rand_oneform(rng, cfg.max_degree)
        a = fuzz.rand_position(rng, min(cfg.max_degree, 2), n_terms=2)
        b = fuzz.rand_position(rng, min(cfg.max_degree, 2), n_terms=2)
        res = w.right_mul(a).right_mul(b) - w.right_mul(a * b)
        out.append(_record("calculus", f"bimodule-assoc-{n:02d}", "1.22", res.is_zero()))

    for n in range(10):
        a = fuzz.rand_position(rng, cfg.max_degree, waves=True, n_terms=2)
        res = exterior_d(a).exterior_d()
        out.append(_record("calculus", f"d-squared-{n:02d}", "1.16", res.is_zero()))

    out.append(_record("calculus", "wedge-antisymmetry-diagonal", "1.16",
                       OneForm.basis(0).wedge(OneForm.basis(0)).is_zero()))
    w12 = OneForm.basis(2).left_mul(x[1]).exterior_d()
    want = OneForm.basis(1).wedge(OneForm.basis(2))
    out.append(_record("calculus", "d-of-x1-tau2", "1.16", (w12 - want).is_zero()))

    lit, corr = check_tau4_definition()
    out.append(_record("calculus", "tau4-corrected-coefficient", "1.14",
                       corr.is_zero(), corr.render()))
    out.append(_reported("calculus", "tau4-published-coefficient-residual", "1.14",
                         lit.render()))

    for n in range(8):
        a = fuzz.rand_position(rng, min(cfg.max_degree, 2), waves=False, n_terms=2)
        residual = check_metric_centrality(a)
        out.append(_record("calculus", f"metric-centrality-{n:02d}", "1.18",
                           not residual,
                           "; ".join(f"{k}: {v.render()}" for k, v in residual.items())))

    for i in range(5):
        res = OneForm.basis(i).star() - OneForm.basis(i)
        out.append(_record("calculus", f"star-tau{i}-hermitian", "1.27", res.is_zero()))
    for n in range(6):
        w = fuzz.rand_oneform(rng, min(cfg.max_degree, 2))
        res = w.star().star() - w
        out.append(_record("calculus", f"star-form-involution-{n:02d}", "1.27",
                           res.is_zero()))
    res = OneForm.basis(0).left_mul(x[0]).star() - (
        OneForm.basis(0).left_mul(x[0]) + OneForm.basis(4).scale(-IMK)
    )
    out.append(_record("calculus", "star-form-x0tau0", "1.27", res.is_zero(),
                       res.render()))
    return out


# -- dirac ---------------------------------------------------------------------


def suite_dirac(cfg):
    rng = random.Random(cfg.seed + 3)
    out = []

    failures = dirac.check_clifford_relations()
    out.append(_record("dirac", "clifford-relations", "2.8", not failures,
                       str(failures)))

    rep = dirac.GammaRep(cfg.gamma4)
    rep_zero = dirac.GammaRep(dirac.GAMMA4_ZERO)

    res, asserted = dirac.check_dirac_square(rep_zero)
    out.append(_record("dirac", "dirac-square-gamma4-zero", "2.9",
                       dirac.op_is_zero(res), dirac.op_render(res)))
    lam = ScalarValue.number(1)
    for kind in ("unit", "gamma5"):
        rep_k = dirac.GammaRep(dirac.Gamma4(kind, lam))
        res_k, _ = dirac.check_dirac_square(rep_k)
        out.append(_reported("dirac", f"dirac-square-residual-{kind}", "2.9",
                             dirac.op_render(res_k)))

    reps = [rep_zero,
            dirac.GammaRep(dirac.Gamma4("unit", ScalarValue.number(1))),
            dirac.GammaRep(dirac.Gamma4("gamma5", ScalarValue.number(1)))]
    n_pairs = 50 if cfg.max_degree >= 2 else 12
    for rep_i, rep_k in enumerate(reps):
        for n in range(n_pairs):
            a = fuzz.rand_position(rng, min(cfg.max_degree, 2), n_terms=2)
            psi = fuzz.rand_spinor(rng, min(cfg.max_degree, 2))
            res = dirac.check_diagram(a, psi, rep_k)
            out.append(_record("dirac", f"diagram-{rep_k.gamma4.kind}-{n:02d}", "0.8",
                               dirac.spinor_is_zero(res)))

    for n in range(6):
        a = fuzz.rand_position(rng, min(cfg.max_degree, 2), n_terms=2)
        psi = fuzz.rand_spinor(rng, min(cfg.max_degree, 2))
        i = rng.randrange(5)
        lhs = dirac.op_apply(dirac.clifford_image(i, rep), dirac.spinor_left_mul(a, psi))
        rhs = dirac.spinor_zero()
        for j in range(5):
            fa = act_f(i, j, a)
            if fa.is_zero():
                continue
            rhs = dirac.spinor_add(
                rhs,
                dirac.spinor_left_mul(fa, dirac.op_apply(dirac.clifford_image(j, rep), psi)),
            )
        res = dirac.spinor_sub(lhs, rhs)
        out.append(_record("dirac", f"clifford-bimodule-{n:02d}", "1.21",
                           dirac.spinor_is_zero(res)))

    for i, text in dirac.check_antihermiticity():
        out.append(_reported("dirac", f"antihermiticity-del{i}", "derived-convention",
                             f"star(del_{i}) + del_{i} = {text}"))

    for mu in range(4):
        img = dirac.op_kappa_expand(dirac.clifford_image(mu, rep_zero), 0)
        gam = dirac.op_from_matrix(rep_zero.gammas[mu], mom.MomentumElement.one())
        res = dirac.op_sub(img, gam)
        out.append(_record("dirac", f"clifford-image-limit-{mu}",
                           "derived-convention", dirac.op_is_zero(res),
                           dirac.op_render(res)))

    diff = dirac.op_sub(dirac.clifford_image(1, rep_zero),
                        dirac.clifford_image_published(1, rep_zero))
    out.append(_reported("dirac", "clifford-image-published-variant-difference", "2.10",
                         dirac.op_render(diff)))
    return out


# -- gauge ---------------------------------------------------------------------


def gauge_fixtures():
    x = [PositionElement.x(mu) for mu in range(4)]
    z = PositionElement.zero()
    cfg1 = gauge.GaugeConfig((z, x[0], z, z, z))
    cfg2 = gauge.GaugeConfig((x[1], x[0], z, x[3], x[2]))
    cfg3 = gauge.GaugeConfig(
        (PositionElement.scalar(ScalarValue.number(1, 1)), x[2], x[1], z, x[0])
    )
    u1 = PositionElement.wave(PlaneWave.label(1))
    u2 = PositionElement.wave(PlaneWave.label(2))
    return (cfg1, cfg2, cfg3), (u1, u2)


def suite_gauge(cfg):
    out = []
    x = [PositionElement.x(mu) for mu in range(4)]
    z = PositionElement.zero()
    configs, unitaries = gauge_fixtures()

    strength = gauge.field_strength(configs[0])
    ok = strength.get(0, 1) == PositionElement.one() and all(
        strength.get(i, j).is_zero()
        for i in range(5) for j in range(i + 1, 5) if (i, j) != (0, 1)
    )
    out.append(_record("gauge", "strength-linear-example", "3.8", ok,
                       strength.render()))
    out.append(_record("gauge", "strength-zero-config", "3.8",
                       gauge.field_strength(gauge.GaugeConfig((z,) * 5)).is_zero()))
    const_cfg = gauge.GaugeConfig(tuple(
        PositionElement.scalar(ScalarValue.number(n - 2)) for n in range(5)
    ))
    out.append(_record("gauge", "strength-constant-config", "3.8",
                       gauge.field_strength(const_cfg).is_zero()))

    for idx, c in enumerate(configs):
        res_charged, res_literal = gauge.curvature_cross_check(c)
        out.append(_record("gauge", f"curvature-two-route-g1-{idx}", "3.5/3.7",
                           not res_charged and not res_literal,
                           str({k: v.render() for k, v in res_literal.items()})))
    live = gauge.GaugeConfig((z, x[1], z, z, z), ScalarValue.number(2))
    res_charged, res_literal = gauge.curvature_cross_check(live)
    out.append(_record("gauge", "curvature-two-route-g2-charged", "3.5/3.7",
                       not res_charged))
    out.append(_reported(
        "gauge", "curvature-two-route-g2-literal", "3.5/3.7",
        "Omega extraction equals the charged convention for any g; literal-form "
        "residual at g=2: " + str({k: v.render() for k, v in res_literal.items()})))

    out.append(_record("gauge", "transform-identity-unitary", "3.4",
                       gauge.gauge_transform(configs[0], PositionElement.one()).A
                       == configs[0].A))
    for uidx, u in enumerate(unitaries):
        pure = gauge.gauge_transform(gauge.GaugeConfig((z,) * 5), u)
        out.append(_record("gauge", f"pure-gauge-flatness-{uidx}", "3.4",
                           gauge.field_strength(pure).is_zero()))

    for cidx, c in enumerate(configs):
        for uidx, u in enumerate(unitaries):
            res = gauge.check_f_covariance(c, u)
            out.append(_record("gauge", f"F-covariance-cfg{cidx}-U{uidx}", "3.9",
                               not res,
                               str({k: v.render() for k, v in res.items()})))
            res = gauge.check_divergence_covariance(c, u)
            out.append(_record("gauge", f"divergence-covariance-cfg{cidx}-U{uidx}",
                               "3.13", not res,
                               str({k: v.render() for k, v in res.items()})))
            res = gauge.check_invariant_covariance(c, u)
            out.append(_record("gauge", f"invariant-covariance-cfg{cidx}-U{uidx}",
                               "3.16", not res,
                               str({k: v.render() for k, v in res.items()})))

    live2 = gauge.GaugeConfig((x[1], x[0], z, x[3], x[2]), ScalarValue.number(2))
    for i in range(5):
        for j in range(i + 1, 5):
            res = gauge.check_commutator_identity(live2, i, j)
            out.append(_record("gauge", f"commutator-identity-{i}{j}", "3.10",
                               res.is_zero(), res.render()))
    for (i, j, k) in ((0, 1, 2), (0, 1, 4), (1, 2, 3), (2, 3, 4)):
        res = gauge.check_bianchi(live2, i, j, k)
        out.append(_record("gauge", f"bianchi-{i}{j}{k}", "3.11", res.is_zero()))

    for uidx, u in enumerate(unitaries[:1]):
        res = gauge.check_star_collapse(u)
        out.append(_record("gauge", f"star-collapse-{uidx}", "3.18", not res))

    c_val, cp, cm = gauge.invariants(configs[0])
    out.append(_record("gauge", "invariant-C-golden", "3.15",
                       c_val == PositionElement.scalar(-2), c_val.render()))
    div = gauge.divergence(configs[0])
    want = (z, z, z, z, PositionElement.scalar(ScalarValue.kappa(-1)))
    out.append(_record("gauge", "divergence-golden", "3.12",
                       all((a - b).is_zero() for a, b in zip(div, want)),
                       "; ".join(v.render() for v in div)))
    return out


# -- limit ---------------------------------------------------------------------


def suite_limit(cfg):
    out = []
    x = [PositionElement.x(mu) for mu in range(4)]
    z = PositionElement.zero()
    fixtures = [
        ("A4-x1", gauge.GaugeConfig((z, z, z, z, x[1]))),
        ("A1-x0", gauge.GaugeConfig((z, x[0], z, z, z))),
        ("mixed-deg2", gauge.GaugeConfig((x[1], x[0] * x[0], z, z, x[1] * x[2]))),
    ]
    for name, c in fixtures:
        res = gauge.classical_limit(c)
        out.append(_record("limit", f"classical-lagrangian-{name}", "3.25",
                           res.is_zero(), res.render()))
    out.append(_reported("limit", "box-kappa-order0", "1.12",
                         mom.box().kappa_expand(0).render()))
    e1 = ScalarValue.E(1)
    res = e1.kappa_expand(1) - (ScalarValue.number(1)
                                + ScalarValue.k(1, 0) * ScalarValue.kappa(-1))
    out.append(_record("limit", "kappa-expand-E-order1", "3.25", res.is_zero(),
                       res.render()))
    sh_scalar = (ScalarValue.E(1) - ScalarValue.E(1, -1)) * ScalarValue.number(
        Fraction(1, 2)
    )
    res = sh_scalar.kappa_expand(1) - ScalarValue.k(1, 0) * ScalarValue.kappa(-1)
    out.append(_record("limit", "kappa-expand-sh-order1", "3.25", res.is_zero(),
                       res.render()))
    rep = dirac.GammaRep(dirac.GAMMA4_ZERO)
    for mu in range(4):
        img = dirac.op_kappa_expand(dirac.clifford_image(mu, rep), 0)
        gam = dirac.op_from_matrix(rep.gammas[mu], mom.MomentumElement.one())
        out.append(_record("limit", f"clifford-image-limit-{mu}", "2.10",
                           dirac.op_is_zero(dirac.op_sub(img, gam))))
    return out


SUITES = {
    "hopf": suite_hopf,
    "action": suite_action,
    "calculus": suite_calculus,
    "dirac": suite_dirac,
    "gauge": suite_gauge,
    "limit": suite_limit,
}


def run_suite(name, cfg=None):
    """Run one suite (or "all"); returns order-normalized records."""
    cfg = cfg or RunConfig()
    if name == "all":
        names = list(SUITE_NAMES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join(SUITE_NAMES)} or all")
    threads = max(1, int(os.environ.get("KMINK_THREADS", "1") or "1"))
    records = []
    if threads > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_run_one, n, cfg) for n in names]
            for fut in futures:
                records.extend(fut.result())
    else:
        for n in names:
            records.extend(_run_one(n, cfg))
    records.sort(key=lambda r: (r.suite, r.check_id))
    return records


def _run_one(name, cfg):
    t0 = time.perf_counter()
    records = SUITES[name](cfg)
    elapsed = (time.perf_counter() - t0) * 1000.0 / max(1, len(records))
    for r in records:
        if not r.wall_ms:
            r.wall_ms = round(elapsed, 3)
    return records


def render_table(records):
    lines = []
    width = max((len(r.check_id) for r in records), default=10)
    for r in records:
        mark = {"pass": "PASS", "fail": "FAIL", "reported": "INFO"}[r.status]
        residual = "" if r.residual in ("0", "") else f"  residual: {r.residual}"
        lines.append(
            f"[{mark}] {r.suite:8s} {r.check_id:<{width}s}  eq {r.equation:8s}"
            f" {r.wall_ms:8.2f} ms{residual}"
        )
    n_fail = sum(r.status == "fail" for r in records)
    n_pass = sum(r.status == "pass" for r in records)
    n_rep = sum(r.status == "reported" for r in records)
    lines.append(f"  {n_pass} passed, {n_fail} failed, {n_rep} reported")
    return "\n".join(lines)


def render_jsonl(records):
    """Line-delimited machine-readable report; no timings, byte-stable."""
    import json

    lines = []
    for r in records:
        lines.append(json.dumps(
            {"suite": r.suite, "id": r.check_id, "equation": r.equation,
             "status": r.status, "residual": r.residual},
            sort_keys=True,
        ))
    return "\n".join(lines) + "\n"
