"""Deformed U(1) gauge sector: connection, curvature, transformations,
invariants, field equations and the classical limit.

A configuration is five potentials A_0..A_4 in the coordinate algebra
plus a charge g.  The field strength is implemented in two conventions:

    literal:  F_ij = del_i(A_j) - del_j(A_i) + i   A_k [f^k_i(A_j) - f^k_j(A_i)]
    charged:  F_ij = del_i(A_j) - del_j(A_i) + i g A_k [f^k_i(A_j) - f^k_j(A_i)]

The literal form is the published one; the charged form is what the
curvature two-form Omega = d omega + g omega ^ omega extracts for any g
(with the i<j normalization i F_ij tau^i ^ tau^j = Omega) and what makes
the covariant-derivative commutator identity exact for any g.  The two
coincide at g = 1, where the covariance suite runs with zero residuals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import HeisenbergElement, act_f, act_f_lowered, act_derivative
from .forms import OneForm
from .minkowski import PositionElement
from .momentum import METRIC5, derivatives, f_matrix
from .scalars import I, ONE, ScalarValue


@dataclass(frozen=True)
class GaugeConfig:
    """Five gauge potentials plus the gauge charge."""

    A: tuple
    g: ScalarValue = ONE

    def __post_init__(self):
        if len(self.A) != 5:
            raise ValueError("a gauge configuration carries five potentials")

    @staticmethod
    def from_potentials(*A, g=ONE):
        pots = list(A) + [PositionElement.zero()] * (5 - len(A))
        return GaugeConfig(tuple(pots), ScalarValue._coerce(g))

    def connection_form(self):
        """omega = i A_k tau^k."""
        return OneForm([a.scale(I) for a in self.A])


def read_config_text(text):
    """Parse a plain-text fixture: lines `A0..A4 = <expr>` and `g = <expr>`.

    Missing potentials default to zero; the charge defaults to one.
    """
    from .expr import evaluate_text

    pots = {f"A{k}": PositionElement.zero() for k in range(5)}
    charge = ONE
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected `name = expression`")
        name, rhs = (part.strip() for part in line.split("=", 1))
        value = evaluate_text(rhs)
        if name == "g":
            if not isinstance(value, ScalarValue):
                raise ValueError(f"line {lineno}: the charge must be a scalar")
            charge = value
        elif name in pots:
            if isinstance(value, ScalarValue):
                value = PositionElement.scalar(value)
            if not isinstance(value, PositionElement):
                raise ValueError(f"line {lineno}: {name} must be a position element")
            pots[name] = value
        else:
            raise ValueError(f"line {lineno}: unknown field {name!r}")
    return GaugeConfig(tuple(pots[f"A{k}"] for k in range(5)), charge)


def check_unitary(u):
    """U U* = U* U = 1 in the coordinate algebra."""
    one = PositionElement.one()
    return (u * u.star()) == one and (u.star() * u) == one


def _require_unitary(u):
    if not check_unitary(u):
        raise ValueError("gauge transformations need a unitary element")


class FieldStrength:
    """Antisymmetric strength tensor, components stored for i < j."""

    __slots__ = ("comp",)

    def __init__(self, comp=None):
        self.comp = comp if comp is not None else {}

    def get(self, i, j):
        if i < j:
            return self.comp.get((i, j), PositionElement.zero())
        if i > j:
            return -self.comp.get((j, i), PositionElement.zero())
        return PositionElement.zero()

    def raised(self, i, j):
        """F^{ij} with both indices moved by the 5-metric."""
        return self.get(i, j).scale(METRIC5[i] * METRIC5[j])

    def set(self, i, j, value):
        if i >= j:
            raise ValueError("store only i < j components")
        if value.is_zero():
            self.comp.pop((i, j), None)
        else:
            self.comp[(i, j)] = value

    def is_zero(self):
        return not self.comp

    def __eq__(self, other):
        return self.comp == other.comp

    def render(self):
        if not self.comp:
            return "0"
        return "; ".join(
            f"F[{i},{j}] = {v.render()}" for (i, j), v in sorted(self.comp.items())
        )


def field_strength(cfg, charged=False):
    """F_ij = del_i(A_j) - del_j(A_i) + i [g] A_k [f^k_i(A_j) - f^k_j(A_i)].

    `charged=False` is the published convention (no charge in the
    quadratic term); `charged=True` inserts it.
    """
    A = cfg.A
    quad_factor = I * cfg.g if charged else I
    dA = [[act_derivative(i, A[j]) for j in range(5)] for i in range(5)]
    out = FieldStrength()
    for i in range(5):
        for j in range(i + 1, 5):
            val = dA[i][j] - dA[j][i]
            for k in range(5):
                inner = act_f(k, i, A[j]) - act_f(k, j, A[i])
                if not inner.is_zero():
                    val = val + (A[k] * inner).scale(quad_factor)
            out.set(i, j, val)
    return out


def curvature_form(cfg):
    """Omega = d omega + g omega ^ omega via the forms module."""
    omega = cfg.connection_form()
    return omega.exterior_d() + omega.wedge(omega).scale(cfg.g)


def extract_strength(two_form):
    """Components from i F_ij tau^i ^ tau^j = Omega with the i<j sum."""
    out = FieldStrength()
    for (i, j), v in two_form.comp.items():
        out.set(i, j, v.scale(-I))
    return out


def curvature_cross_check(cfg):
    """Compare the Omega route against both strength conventions.

    Returns (residual vs charged, residual vs literal) as dicts keyed by
    (i, j); the charged residual is identically empty for any g.
    """
    omega_f = extract_strength(curvature_form(cfg))
    charged = field_strength(cfg, charged=True)
    literal = field_strength(cfg, charged=False)
    res_charged = {}
    res_literal = {}
    for i in range(5):
        for j in range(i + 1, 5):
            d1 = omega_f.get(i, j) - charged.get(i, j)
            if not d1.is_zero():
                res_charged[(i, j)] = d1
            d2 = omega_f.get(i, j) - literal.get(i, j)
            if not d2.is_zero():
                res_literal[(i, j)] = d2
    return res_charged, res_literal


def gauge_transform(cfg, u):
    """A_k -> U A_j f^j_k(U*) - (i/g) U del_k(U*)."""
    _require_unitary(u)
    ustar = u.star()
    inv_g = cfg.g.inverse()
    new_A = []
    for k in range(5):
        acc = PositionElement.zero()
        for j in range(5):
            if cfg.A[j].is_zero():
                continue
            acc = acc + u * cfg.A[j] * act_f(j, k, ustar)
        acc = acc - (u * act_derivative(k, ustar)).scale(I * inv_g)
        new_A.append(acc)
    return GaugeConfig(tuple(new_A), cfg.g)


def check_f_covariance(cfg, u, charged=False):
    """Residuals of F~_ij = U F_kl f^k_i(f^l_j(U*)), per (i, j)."""
    _require_unitary(u)
    ustar = u.star()
    f_old = field_strength(cfg, charged=charged)
    f_new = field_strength(gauge_transform(cfg, u), charged=charged)
    residuals = {}
    for i in range(5):
        for j in range(i + 1, 5):
            rhs = PositionElement.zero()
            for k in range(5):
                for l in range(5):
                    fk = f_old.get(k, l)
                    if fk.is_zero():
                        continue
                    acted = act_f(k, i, act_f(l, j, ustar))
                    if acted.is_zero():
                        continue
                    rhs = rhs + u * fk * acted
            diff = f_new.get(i, j) - rhs
            if not diff.is_zero():
                residuals[(i, j)] = diff
    return residuals


# -- covariant derivatives as mixed-word operators ------------------------------


def covariant_derivative_op(cfg, k, charged=True):
    """nabla_k = del_k + i g A_j f^j_k as a normal-ordered mixed word."""
    del_k = HeisenbergElement.from_momentum(derivatives()[k])
    acc = del_k
    f = f_matrix()
    for j in range(5):
        if cfg.A[j].is_zero():
            continue
        acc = acc + (
            HeisenbergElement.from_position(cfg.A[j])
            * HeisenbergElement.from_momentum(f[j][k])
        ).scale(I * cfg.g)
    return acc


def apply_covariant_derivative(cfg, k, a):
    """nabla_k acting on an algebra element (componentwise on spinors)."""
    if isinstance(a, tuple):
        return tuple(apply_covariant_derivative(cfg, k, comp) for comp in a)
    out = act_derivative(k, a)
    for j in range(5):
        if cfg.A[j].is_zero():
            continue
        out = out + (cfg.A[j] * act_f(j, k, a)).scale(I * cfg.g)
    return out


def check_commutator_identity(cfg, i, j):
    """[nabla_i, nabla_j] - i g F_mn f^m_i f^n_j with the charged strength.

    Exact as an identity between normal-ordered mixed words for any g.
    """
    nb_i = covariant_derivative_op(cfg, i)
    nb_j = covariant_derivative_op(cfg, j)
    lhs = nb_i * nb_j - nb_j * nb_i
    f = f_matrix()
    strength = field_strength(cfg, charged=True)
    rhs = HeisenbergElement()
    for m in range(5):
        for n in range(5):
            fmn = strength.get(m, n)
            if fmn.is_zero():
                continue
            rhs = rhs + (
                HeisenbergElement.from_position(fmn)
                * HeisenbergElement.from_momentum(f[m][i] * f[n][j])
            )
    return lhs - rhs.scale(I * cfg.g)


def check_bianchi(cfg, i, j, k):
    """Cyclic sum of nested covariant-derivative commutators (Jacobi)."""
    ops = [covariant_derivative_op(cfg, idx) for idx in (i, j, k)]
    a, b, c = ops
    acc = a.commutator(b.commutator(c))
    acc = acc + c.commutator(a.commutator(b))
    acc = acc + b.commutator(c.commutator(a))
    return acc


# -- divergence and invariants ---------------------------------------------------


def divergence(cfg, charged=False):
    """nabla_m F^{mk} = del_m F^{mk} + i g (A_j f^j_m(F^{mk})
    - F^{mn} f_m^j(f_n^k(A_j))), one element per k."""
    strength = field_strength(cfg, charged=charged)
    out = []
    for k in range(5):
        acc = PositionElement.zero()
        for m in range(5):
            fmk = strength.raised(m, k)
            if fmk.is_zero():
                continue
            acc = acc + act_derivative(m, fmk)
        correction = PositionElement.zero()
        for j in range(5):
            if cfg.A[j].is_zero():
                continue
            for m in range(5):
                fmk = strength.raised(m, k)
                if fmk.is_zero():
                    continue
                correction = correction + cfg.A[j] * act_f(j, m, fmk)
            for m in range(5):
                for n in range(5):
                    fmn = strength.raised(m, n)
                    if fmn.is_zero():
                        continue
                    acted = act_f_lowered(m, j, act_f_lowered(n, k, cfg.A[j]))
                    if acted.is_zero():
                        continue
                    correction = correction - fmn * acted
        out.append(acc + correction.scale(I * cfg.g))
    return tuple(out)


def check_divergence_covariance(cfg, u, charged=False):
    """Residuals of nabla~_m F~^{mk} = U nabla_m F^{mn} f_n^k(U*)."""
    _require_unitary(u)
    ustar = u.star()
    div_old = divergence(cfg, charged=charged)
    div_new = divergence(gauge_transform(cfg, u), charged=charged)
    residuals = {}
    for k in range(5):
        rhs = PositionElement.zero()
        for n in range(5):
            if div_old[n].is_zero():
                continue
            acted = act_f_lowered(n, k, ustar)
            if acted.is_zero():
                continue
            rhs = rhs + u * div_old[n] * acted
        diff = div_new[k] - rhs
        if not diff.is_zero():
            residuals[k] = diff
    return residuals


def invariants(cfg, charged=False):
    """C = F^{ij} F*_ij, C_+ = F_ij f^i_k(f^j_l(F^{kl})),
    C_- = f^i_k(f^j_l(F*_ij)) F^{kl}*."""
    strength = field_strength(cfg, charged=charged)
    c = PositionElement.zero()
    c_plus = PositionElement.zero()
    c_minus = PositionElement.zero()
    for i in range(5):
        for j in range(5):
            f_low = strength.get(i, j)
            if f_low.is_zero():
                continue
            f_up = strength.raised(i, j)
            c = c + f_up * f_low.star()
            for k in range(5):
                for l in range(5):
                    fkl_up = strength.raised(k, l)
                    if fkl_up.is_zero():
                        continue
                    acted = act_f(i, k, act_f(j, l, fkl_up))
                    if not acted.is_zero():
                        c_plus = c_plus + f_low * acted
                    acted2 = act_f(i, k, act_f(j, l, f_low.star()))
                    if not acted2.is_zero():
                        c_minus = c_minus + acted2 * fkl_up.star()
    return c, c_plus, c_minus


def check_invariant_covariance(cfg, u, charged=False):
    """Residuals of C~ = U C U* and C~_pm = U C_pm U*, plus C_- - C_+*."""
    _require_unitary(u)
    old = invariants(cfg, charged=charged)
    new = invariants(gauge_transform(cfg, u), charged=charged)
    residuals = {}
    for name, o, n in zip(("C", "C_plus", "C_minus"), old, new):
        diff = n - (u * o * u.star())
        if not diff.is_zero():
            residuals[name] = diff
    conj_diff = old[2] - old[1].star()
    if not conj_diff.is_zero():
        residuals["C_minus - star(C_plus)"] = conj_diff
    return residuals


def check_star_collapse(u):
    """sum_ij f_k^i(f_l^j(U*)) f_i^u(f_j^v(U)) = delta_k^u delta_l^v."""
    _require_unitary(u)
    ustar = u.star()
    residuals = {}
    for k in range(5):
        for l in range(5):
            for uu in range(5):
                for v in range(5):
                    acc = PositionElement.zero()
                    for i in range(5):
                        for j in range(5):
                            left = act_f_lowered(k, i, act_f_lowered(l, j, ustar))
                            if left.is_zero():
                                continue
                            right = act_f_lowered(i, uu, act_f_lowered(j, v, u))
                            if right.is_zero():
                                continue
                            acc = acc + left * right
                    expect = (
                        PositionElement.one()
                        if (k == uu and l == v)
                        else PositionElement.zero()
                    )
                    diff = acc - expect
                    if not diff.is_zero():
                        residuals[(k, l, uu, v)] = diff
    return residuals


# -- classical limit --------------------------------------------------------------


def _classical_mul(a, b):
    """Commutative product of plane-wave-free polynomials: exponents add."""
    out = {}
    for (a1, d1, w1), c1 in a.terms.items():
        for (a2, d2, w2), c2 in b.terms.items():
            if not (w1.is_identity() and w2.is_identity()):
                raise ValueError("classical calculus needs polynomial elements")
            key = ((a1[0] + a2[0], a1[1] + a2[1], a1[2] + a2[2]), d1 + d2, w1)
            cur = out.get(key)
            v = c1 * c2 if cur is None else cur + c1 * c2
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
    return PositionElement(out)


def _classical_partial(mu, a):
    """Formal partial derivative on the commuting monomial basis."""
    out = PositionElement.zero()
    for (ax, d, w), c in a.terms.items():
        if not w.is_identity():
            raise ValueError("classical calculus needs polynomial elements")
        if mu == 0:
            if d:
                out = out + PositionElement.monomial(ax, d - 1, w, c * ScalarValue.number(d))
        else:
            if ax[mu - 1]:
                na = list(ax)
                na[mu - 1] -= 1
                out = out + PositionElement.monomial(
                    tuple(na), d, w, c * ScalarValue.number(ax[mu - 1])
                )
    return out


def classical_lagrangian(cfg):
    """-1/4 F_{mu nu} F^{mu nu} + 1/2 del_mu A_4 del^mu A_4, computed with the
    independent commutative calculus from the same potentials."""
    from fractions import Fraction

    A = cfg.A
    f_cl = [[None] * 4 for _ in range(4)]
    for mu in range(4):
        for nu in range(4):
            f_cl[mu][nu] = _classical_partial(mu, A[nu]) - _classical_partial(nu, A[mu])
    acc = PositionElement.zero()
    for mu in range(4):
        for nu in range(4):
            up = f_cl[mu][nu].scale(METRIC5[mu] * METRIC5[nu])
            acc = acc + _classical_mul(f_cl[mu][nu], up)
    lagrangian = acc.scale(ScalarValue.number(Fraction(-1, 4)))
    for mu in range(4):
        da4 = _classical_partial(mu, A[4])
        if da4.is_zero():
            continue
        lagrangian = lagrangian + _classical_mul(da4, da4.scale(METRIC5[mu])).scale(
            ScalarValue.number(Fraction(1, 2))
        )
    return lagrangian


def classical_limit(cfg, charged=False):
    """Order-0 kappa expansion of -C/4 minus the classical Lagrangian.

    The configuration must be polynomial (no plane waves).
    """
    from fractions import Fraction

    for a in cfg.A:
        if a.has_waves():
            raise ValueError("the classical limit needs polynomial potentials")
    c, _cp, _cm = invariants(cfg, charged=charged)
    engine = c.scale(ScalarValue.number(Fraction(-1, 4))).map_coeffs(
        lambda s: s.kappa_expand(0)
    )
    return engine - classical_lagrangian(cfg)
