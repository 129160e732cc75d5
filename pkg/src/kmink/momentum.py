"""The dual momentum Hopf algebra: commutative exponential-polynomials.

Elements are finite sums

    c * P_1^b1 P_2^b2 P_3^b3 * P_0^d * exp(lam * P_0 / kappa)

with integer weight lam.  The coproduct is deformed,

    coproduct(P_0) = P_0 (x) 1 + 1 (x) P_0
    coproduct(P_m) = P_m (x) 1 + exp(-P_0/kappa) (x) P_m

and the hyperbolic functions of P_0/kappa are always stored expanded in
the weight basis, never as atomic functions, so equality is term-map
comparison.

This module also builds the named constants of the calculus: the 5x5
f-matrix, the derivatives del[0..4], the vector fields e[0..4] and the
deformed wave operator `box`, all exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .scalars import HALF, I, ONE, ZERO, ScalarValue

# The five-dimensional metric diag(1,-1,-1,-1,-1); g_44 = -1 is fixed here
# and every index-lowering site uses this single table.
METRIC5 = (1, -1, -1, -1, -1)

KEY_UNIT = ((0, 0, 0), 0, 0)


def _acc(out, key, coeff):
    v = out.get(key)
    v = coeff if v is None else v + coeff
    if v.is_zero():
        out.pop(key, None)
    else:
        out[key] = v


class MomentumElement:
    """Element of the commutative momentum algebra."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return MomentumElement()

    @staticmethod
    def one():
        return MomentumElement({KEY_UNIT: ONE})

    @staticmethod
    def scalar(s):
        s = ScalarValue._coerce(s)
        return MomentumElement({KEY_UNIT: s} if not s.is_zero() else {})

    @staticmethod
    def P(mu):
        if mu == 0:
            return MomentumElement({((0, 0, 0), 1, 0): ONE})
        if 1 <= mu <= 3:
            b = [0, 0, 0]
            b[mu - 1] = 1
            return MomentumElement({(tuple(b), 0, 0): ONE})
        raise ValueError(f"momentum index {mu} out of range 0..3")

    @staticmethod
    def exp_weight(lam):
        """exp(lam * P_0 / kappa)."""
        return MomentumElement({((0, 0, 0), 0, lam): ONE})

    @staticmethod
    def monomial(b, d, lam, coeff=ONE):
        coeff = ScalarValue._coerce(coeff)
        if coeff.is_zero():
            return MomentumElement()
        return MomentumElement({(tuple(b), d, lam): coeff})

    # -- ring --------------------------------------------------------------

    def __add__(self, other):
        other = _coerce_momentum(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return MomentumElement(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_momentum(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_momentum(other) - self

    def __neg__(self):
        return MomentumElement({k: -c for k, c in self.terms.items()})

    def scale(self, s):
        s = ScalarValue._coerce(s)
        if s.is_zero():
            return MomentumElement()
        out = {}
        for key, c in self.terms.items():
            _acc(out, key, c * s)
        return MomentumElement(out)

    def __mul__(self, other):
        if isinstance(other, MomentumElement):
            out = {}
            for (b1, d1, l1), c1 in self.terms.items():
                for (b2, d2, l2), c2 in other.terms.items():
                    key = (
                        (b1[0] + b2[0], b1[1] + b2[1], b1[2] + b2[2]),
                        d1 + d2,
                        l1 + l2,
                    )
                    _acc(out, key, c1 * c2)
            return MomentumElement(out)
        if isinstance(other, (int, ScalarValue)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, ScalarValue)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        acc = MomentumElement.one()
        for _ in range(n):
            acc = acc * self
        return acc

    # -- Hopf structure ------------------------------------------------------

    def coproduct(self):
        out = MomentumTensor()
        for (b, d, lam), c in self.terms.items():
            t = MomentumTensor({(KEY_UNIT, KEY_UNIT): c})
            for m in (1, 2, 3):
                if b[m - 1]:
                    t = t * _coproduct_pm_power(m, b[m - 1])
            if d:
                t = t * _coproduct_p0_power(d)
            if lam:
                key = ((0, 0, 0), 0, lam)
                t = t * MomentumTensor({(key, key): ONE})
            out = out + t
        return out

    def antipode(self):
        """S(P_0) = -P_0, S(P_m) = -exp(P_0/kappa) P_m, S(exp(l)) = exp(-l)."""
        out = {}
        for (b, d, lam), c in self.terms.items():
            nb = b[0] + b[1] + b[2]
            sign = -1 if (nb + d) % 2 else 1
            _acc(out, (b, d, nb - lam), c * ScalarValue.number(sign))
        return MomentumElement(out)

    def counit(self):
        """Set P_mu to 0 and exp(lam P_0/kappa) to 1."""
        acc = ZERO
        for (b, d, _lam), c in self.terms.items():
            if b == (0, 0, 0) and d == 0:
                acc = acc + c
        return acc

    def star(self):
        """P_mu and exp(lam P_0/kappa) are hermitian; conjugate coefficients."""
        return MomentumElement({k: c.conj() for k, c in self.terms.items()})

    # -- expansion and inspection ------------------------------------------

    def kappa_expand(self, order):
        """Expand exp(lam P_0/kappa) in powers of P_0/kappa and drop all
        monomials of total kappa order below -order (coefficients included).

        The weight series runs far enough to saturate positive kappa
        prefactors in the coefficient, so e.g. kappa^2 sh^2 keeps its
        finite P_0^2 part at order 0.
        """
        out = {}
        for (b, d, lam), c in self.terms.items():
            for (kap, ks, es), g in c.kappa_expand(order).terms.items():
                mono = ScalarValue({(kap, ks, es): g})
                if lam == 0:
                    if kap >= -order:
                        _acc(out, (b, d, 0), mono)
                    continue
                for n in range(max(0, kap + order) + 1):
                    if kap - n < -order:
                        break
                    fac = ScalarValue.number(Fraction(lam ** n, _factorial(n)))
                    _acc(out, (b, d + n, 0), mono * fac * ScalarValue.kappa(-n))
        return MomentumElement(out)

    def map_coeffs(self, fn):
        out = {}
        for key, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[key] = v
        return MomentumElement(out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        other = _coerce_momentum(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (b, d, lam) in sorted(self.terms):
            c = self.terms[(b, d, lam)]
            factors = []
            for m in (1, 2, 3):
                if b[m - 1] == 1:
                    factors.append(f"P{m}")
                elif b[m - 1]:
                    factors.append(f"P{m}^{b[m-1]}")
            if d == 1:
                factors.append("P0")
            elif d:
                factors.append(f"P0^{d}")
            if lam:
                factors.append(f"Exp[{lam}]")
            ctext = c.render()
            if not factors:
                parts.append(f"({ctext})" if ("+" in ctext or " - " in ctext) else ctext)
            else:
                mono = " * ".join(factors)
                if c == ONE:
                    parts.append(mono)
                elif ("+" in ctext) or (" - " in ctext):
                    parts.append(f"({ctext}) * {mono}")
                else:
                    parts.append(f"{ctext} * {mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<MomentumElement {self.render()}>"


def _factorial(n):
    from math import factorial

    return factorial(n)


def _coerce_momentum(x):
    if isinstance(x, MomentumElement):
        return x
    if isinstance(x, (int, ScalarValue)):
        return MomentumElement.scalar(x)
    return NotImplemented


def _coproduct_p0_power(d):
    out = {}
    for r in range(d + 1):
        out[(((0, 0, 0), r, 0), ((0, 0, 0), d - r, 0))] = ScalarValue.number(comb(d, r))
    return MomentumTensor(out)


def _coproduct_pm_power(m, n):
    """(P_m (x) 1 + exp(-P_0/kappa) (x) P_m)^n, binomial in the commutative
    tensor square."""
    out = {}
    for r in range(n + 1):
        bl = [0, 0, 0]
        bl[m - 1] = r
        br = [0, 0, 0]
        br[m - 1] = n - r
        left = (tuple(bl), 0, -(n - r))
        right = (tuple(br), 0, 0)
        out[(left, right)] = ScalarValue.number(comb(n, r))
    return MomentumTensor(out)


class MomentumTensor:
    """Element of the tensor square of the momentum algebra."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def outer(a, b):
        out = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                _acc(out, (k1, k2), c1 * c2)
        return MomentumTensor(out)

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return MomentumTensor(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MomentumTensor({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for ((bl1, dl1, ll1), (br1, dr1, lr1)), c1 in self.terms.items():
            for ((bl2, dl2, ll2), (br2, dr2, lr2)), c2 in other.terms.items():
                left = (
                    (bl1[0] + bl2[0], bl1[1] + bl2[1], bl1[2] + bl2[2]),
                    dl1 + dl2,
                    ll1 + ll2,
                )
                right = (
                    (br1[0] + br2[0], br1[1] + br2[1], br1[2] + br2[2]),
                    dr1 + dr2,
                    lr1 + lr2,
                )
                _acc(out, (left, right), c1 * c2)
        return MomentumTensor(out)

    def flip(self):
        out = {}
        for (l, r), c in self.terms.items():
            _acc(out, (r, l), c)
        return MomentumTensor(out)

    def coproduct_left(self):
        """(coproduct (x) id): a three-leg tensor as dict keyed by triples."""
        out = {}
        for (l, r), c in self.terms.items():
            for (l1, l2), c1 in MomentumElement({l: ONE}).coproduct().terms.items():
                _acc(out, (l1, l2, r), c * c1)
        return out

    def coproduct_right(self):
        """(id (x) coproduct)."""
        out = {}
        for (l, r), c in self.terms.items():
            for (r1, r2), c1 in MomentumElement({r: ONE}).coproduct().terms.items():
                _acc(out, (l, r1, r2), c * c1)
        return out

    def multiply_legs(self, fn_left=None):
        """m o (fn_left (x) id)."""
        acc = MomentumElement()
        for (l, r), c in self.terms.items():
            left = MomentumElement({l: ONE})
            if fn_left is not None:
                left = fn_left(left)
            acc = acc + (left * MomentumElement({r: ONE})).scale(c)
        return acc

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return self.terms == other.terms

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (l, r) in sorted(self.terms):
            c = self.terms[(l, r)]
            lt = MomentumElement({l: ONE}).render()
            rt = MomentumElement({r: ONE}).render()
            parts.append(f"({c.render()}) * ({lt}) (x) ({rt})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<MomentumTensor {self.render()}>"


# -- named constants ----------------------------------------------------------


def ch():
    """cosh(P_0/kappa) in the weight basis."""
    return (MomentumElement.exp_weight(1) + MomentumElement.exp_weight(-1)).scale(HALF)


def sh():
    """sinh(P_0/kappa) in the weight basis."""
    return (MomentumElement.exp_weight(1) - MomentumElement.exp_weight(-1)).scale(HALF)


def p_squared():
    """P_1^2 + P_2^2 + P_3^2."""
    acc = MomentumElement.zero()
    for m in (1, 2, 3):
        acc = acc + MomentumElement.P(m) * MomentumElement.P(m)
    return acc


def _u():
    """(1/2 kappa^2) exp(P_0/kappa) P^2, the recurring quadratic correction."""
    return (MomentumElement.exp_weight(1) * p_squared()).scale(
        HALF * ScalarValue.kappa(-2)
    )


@lru_cache(maxsize=1)
def f_matrix():
    """The 5x5 matrix of momentum elements governing tau^i a = f^i_j(a) tau^j."""
    u = _u()
    C, S = ch(), sh()
    inv_k = ScalarValue.kappa(-1)
    e_plus = MomentumElement.exp_weight(1)
    f = [[MomentumElement.zero() for _ in range(5)] for _ in range(5)]
    f[0][0] = C + u
    f[0][4] = S + u
    f[4][0] = S - u
    f[4][4] = C - u
    for m in (1, 2, 3):
        pm = MomentumElement.P(m)
        f[0][m] = pm.scale(-inv_k)
        f[m][0] = (e_plus * pm).scale(-inv_k)
        f[m][m] = MomentumElement.one()
        f[m][4] = (e_plus * pm).scale(-inv_k)
        f[4][m] = pm.scale(inv_k)
    return tuple(tuple(row) for row in f)


@lru_cache(maxsize=1)
def f_lowered():
    """f_i^j = g_ii g^jj f^i_j (diagonal 5-metric, no sum)."""
    f = f_matrix()
    return tuple(
        tuple(
            f[i][j].scale(METRIC5[i] * METRIC5[j]) for j in range(5)
        )
        for i in range(5)
    )


@lru_cache(maxsize=1)
def derivatives():
    """del[0..4]: del_0 = i kappa f^4_0, del_m = i kappa f^4_m,
    del_4 = i kappa (f^4_4 - 1)."""
    f = f_matrix()
    ik = I * ScalarValue.kappa(1)
    d = [f[4][0].scale(ik)]
    d += [f[4][m].scale(ik) for m in (1, 2, 3)]
    d.append((f[4][4] - MomentumElement.one()).scale(ik))
    return tuple(d)


@lru_cache(maxsize=1)
def vector_fields():
    """e[0..4], the covariant vector fields:

        e^0 = i kappa (sh + u),  e^m = -i exp(P_0/kappa) P_m,
        e^4 = i kappa (ch - u).
    """
    u = _u()
    ik = I * ScalarValue.kappa(1)
    e_plus = MomentumElement.exp_weight(1)
    out = [(sh() + u).scale(ik)]
    out += [(e_plus * MomentumElement.P(m)).scale(-I) for m in (1, 2, 3)]
    out.append((ch() - u).scale(ik))
    return tuple(out)


@lru_cache(maxsize=1)
def box():
    """The deformed massless wave operator g^{mu nu} e_mu e_nu (4d sum)."""
    e = vector_fields()
    acc = MomentumElement.zero()
    for mu in range(4):
        acc = acc + (e[mu] * e[mu]).scale(METRIC5[mu])
    return acc


def kronecker(i, j):
    return MomentumElement.one() if i == j else MomentumElement.zero()


def build_constants():
    """All named constants at once: (f-matrix, del[0..4], e[0..4], box)."""
    return f_matrix(), derivatives(), vector_fields(), box()


# -- verification -------------------------------------------------------------


def verify_f_identities():
    """Exact checks of the orthogonality and coproduct systems.

    Returns a list of (identity id, equation tag, residual) with zero
    residual rendered as "0"; 50 orthogonality cases plus 30 coproducts.
    """
    f = f_matrix()
    flow = f_lowered()
    results = []
    for j in range(5):
        for i in range(5):
            acc = MomentumElement.zero()
            for k in range(5):
                acc = acc + flow[k][j] * f[k][i]
            res = acc - kronecker(i, j)
            results.append((f"f_k^{j} f^k_{i} = delta", "1.25", res.render()))
    for j in range(5):
        for i in range(5):
            acc = MomentumElement.zero()
            for k in range(5):
                acc = acc + f[j][k] * flow[i][k]
            res = acc - kronecker(i, j)
            results.append((f"f^{j}_k f_{i}^k = delta", "1.26", res.render()))
    for i in range(5):
        for k in range(5):
            lhs = f[i][k].coproduct()
            rhs = MomentumTensor()
            for j in range(5):
                rhs = rhs + MomentumTensor.outer(f[i][j], f[j][k])
            res = lhs - rhs
            results.append((f"coproduct(f^{i}_{k}) = f^{i}_j (x) f^j_{k}", "1.23",
                            res.render()))
    d = derivatives()
    for i in range(5):
        lhs = d[i].coproduct()
        rhs = MomentumTensor.outer(MomentumElement.one(), d[i])
        for j in range(5):
            rhs = rhs + MomentumTensor.outer(d[j], f[j][i])
        res = lhs - rhs
        results.append((f"coproduct(del_{i}) = 1 (x) del_{i} + del_j (x) f^j_{i}",
                        "2.6", res.render()))
    return results


def verify_box_identities():
    """box = kappa^2 + (e^4)^2 and del_0^2 - sum del_m^2 = box, exactly."""
    e = vector_fields()
    d = derivatives()
    results = []
    res1 = box() - MomentumElement.scalar(ScalarValue.kappa(2)) - e[4] * e[4]
    results.append(("box = kappa^2 + (e^4)^2", "1.12", res1.render()))
    acc = d[0] * d[0]
    for m in (1, 2, 3):
        acc = acc - d[m] * d[m]
    res2 = acc - box()
    results.append(("del_0^2 - sum del_m^2 = box", "2.9", res2.render()))
    limit = box().kappa_expand(0)
    results.append(
        ("box at kappa order 0 (sign convention: -(P_0^2 - P^2))", "derived-convention",
         limit.render())
    )
    return results
