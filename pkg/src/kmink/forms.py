"""Bicovariant differential calculus: one-forms, two-forms, metric form.

One-forms are kept in left-coefficient canonical form a_i tau^i over the
five basis forms tau^0..tau^4; right coefficients exist only transiently,
re-expanded through the f-action

    tau^i a = f^i_j(a) tau^j.

The exterior derivative is d a = del_i(a) tau^i with d tau^i = 0, and the
basis wedges are antisymmetric, so two-forms store only i < j components.
"""

from __future__ import annotations

from fractions import Fraction

from .action import act_derivative, act_f
from .minkowski import PositionElement
from .momentum import METRIC5
from .scalars import I, ScalarValue

IMK = I * ScalarValue.kappa(-1)


class OneForm:
    """Left-coefficient expansion sum_i comp[i] tau^i."""

    __slots__ = ("comp",)

    def __init__(self, comp=None):
        if comp is None:
            comp = [PositionElement.zero() for _ in range(5)]
        self.comp = tuple(comp)

    @staticmethod
    def basis(i):
        comp = [PositionElement.zero() for _ in range(5)]
        comp[i] = PositionElement.one()
        return OneForm(comp)

    def __add__(self, other):
        return OneForm([a + b for a, b in zip(self.comp, other.comp)])

    def __sub__(self, other):
        return OneForm([a - b for a, b in zip(self.comp, other.comp)])

    def __neg__(self):
        return OneForm([-a for a in self.comp])

    def scale(self, s):
        return OneForm([a.scale(s) for a in self.comp])

    def left_mul(self, b):
        """b * omega: plain left multiplication of the coefficients."""
        return OneForm([b * a for a in self.comp])

    def right_mul(self, b):
        """omega * b = (a_i f^i_j(b)) tau^j via the f-action."""
        out = [PositionElement.zero() for _ in range(5)]
        for i in range(5):
            if self.comp[i].is_zero():
                continue
            for j in range(5):
                fb = act_f(i, j, b)
                if not fb.is_zero():
                    out[j] = out[j] + self.comp[i] * fb
        return OneForm(out)

    def star(self):
        """(a_i tau^i)* = f^i_j(a_i*) tau^j; the tau^i are hermitian."""
        out = [PositionElement.zero() for _ in range(5)]
        for i in range(5):
            if self.comp[i].is_zero():
                continue
            astar = self.comp[i].star()
            for j in range(5):
                fb = act_f(i, j, astar)
                if not fb.is_zero():
                    out[j] = out[j] + fb
        return OneForm(out)

    def wedge(self, other):
        """(a_i tau^i) ^ (b_j tau^j) = a_i f^i_k(b_j) tau^k ^ tau^j."""
        out = TwoForm()
        for j in range(5):
            if other.comp[j].is_zero():
                continue
            for i in range(5):
                if self.comp[i].is_zero():
                    continue
                for k in range(5):
                    fb = act_f(i, k, other.comp[j])
                    if not fb.is_zero():
                        out = out.add_component(k, j, self.comp[i] * fb)
        return out

    def exterior_d(self):
        """d(a_i tau^i) = del_j(a_i) tau^j ^ tau^i, using d tau^i = 0."""
        out = TwoForm()
        for i in range(5):
            if self.comp[i].is_zero():
                continue
            for j in range(5):
                da = act_derivative(j, self.comp[i])
                if not da.is_zero():
                    out = out.add_component(j, i, da)
        return out

    def is_zero(self):
        return all(a.is_zero() for a in self.comp)

    def __eq__(self, other):
        return self.comp == other.comp

    def render(self):
        parts = []
        for i in range(5):
            if self.comp[i].is_zero():
                continue
            parts.append(f"({self.comp[i].render()}) * tau[{i}]")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<OneForm {self.render()}>"


class TwoForm:
    """Strictly upper-triangular components over tau^i ^ tau^j, i < j."""

    __slots__ = ("comp",)

    def __init__(self, comp=None):
        self.comp = comp if comp is not None else {}

    def add_component(self, i, j, value):
        """Fold a coefficient on tau^i ^ tau^j into canonical i < j storage."""
        if i == j or value.is_zero():
            return self
        out = dict(self.comp)
        key, v = ((i, j), value) if i < j else ((j, i), -value)
        cur = out.get(key, PositionElement.zero()) + v
        if cur.is_zero():
            out.pop(key, None)
        else:
            out[key] = cur
        return TwoForm(out)

    def component(self, i, j):
        if i < j:
            return self.comp.get((i, j), PositionElement.zero())
        if i > j:
            return -self.comp.get((j, i), PositionElement.zero())
        return PositionElement.zero()

    def __add__(self, other):
        out = self
        for (i, j), v in other.comp.items():
            out = out.add_component(i, j, v)
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TwoForm({k: -v for k, v in self.comp.items()})

    def scale(self, s):
        out = TwoForm()
        for (i, j), v in self.comp.items():
            out = out.add_component(i, j, v.scale(s))
        return out

    def is_zero(self):
        return not self.comp

    def __eq__(self, other):
        return self.comp == other.comp

    def render(self):
        parts = []
        for (i, j) in sorted(self.comp):
            parts.append(f"({self.comp[(i, j)].render()}) * tau[{i}]^tau[{j}]")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<TwoForm {self.render()}>"


def exterior_d(a):
    """d a = del_i(a) tau^i."""
    return OneForm([act_derivative(i, a) for i in range(5)])


def exterior_d2(omega):
    """d on one-forms, landing in two-forms."""
    return omega.exterior_d()


def star_form(omega):
    return omega.star()


def wedge(omega, eta):
    return omega.wedge(eta)


def metric_form_components():
    """s^2 = tau_mu (x) tau^mu - tau^4 (x) tau^4: diag(1,-1,-1,-1,-1)."""
    return {(i, i): METRIC5[i] for i in range(5)}


def check_metric_centrality(a):
    """Residual tensor of s^2 a - a s^2, commuting a through both legs.

    (tau^i (x) tau^j) a = f^i_l(f^j_k(a)) tau^l (x) tau^k, so the (l, k)
    component of s^2 a is sum_i METRIC5[i] f^i_l(f^i_k(a)).
    """
    residual = {}
    for l in range(5):
        for k in range(5):
            acc = PositionElement.zero()
            for i in range(5):
                inner = act_f(i, k, a)
                if not inner.is_zero():
                    outer = act_f(i, l, inner)
                    if not outer.is_zero():
                        acc = acc + outer.scale(METRIC5[i])
            expect = a.scale(METRIC5[l]) if l == k else PositionElement.zero()
            acc = acc - expect
            if not acc.is_zero():
                residual[(l, k)] = acc
    return residual


def tau4_candidate(c):
    """(i kappa / 4) * ([tau^mu, x_mu] + c * tau^0) as a OneForm."""
    acc = OneForm()
    for mu in range(4):
        x_mu = PositionElement.x(mu).scale(METRIC5[mu])
        tau_mu = OneForm.basis(mu)
        acc = acc + (tau_mu.right_mul(x_mu) - tau_mu.left_mul(x_mu))
    acc = acc + OneForm.basis(0).scale(c)
    quarter_ik = ScalarValue.number(Fraction(1, 4)) * I * ScalarValue.kappa(1)
    return acc.scale(quarter_ik)


def check_tau4_definition():
    """Evaluate the tau^4 recipe for the literal and corrected coefficients.

    Returns (literal_residual, corrected_residual) as OneForms relative to
    tau^4; the corrected coefficient 3i/kappa reproduces tau^4 exactly.
    """
    literal = tau4_candidate(ScalarValue.number(0, Fraction(3, 4)))
    corrected = tau4_candidate(ScalarValue.number(0, 3) * ScalarValue.kappa(-1))
    tau4 = OneForm.basis(4)
    return literal - tau4, corrected - tau4
