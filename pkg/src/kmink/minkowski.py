"""The kappa-Minkowski coordinate algebra in normal-ordered form.

Elements are finite sums

    c * (x^1)^a1 (x^2)^a2 (x^3)^a3 * (x^0)^d * W

where W = exp(i q.x_spatial) * exp(i K x^0) is an ordered plane wave
(spatial factor to the left), q is a triple of scalar entries and K an
integer combination of the base time symbols k[j,0].  Normal order is
canonical: spatial coordinates (mutually commuting), then x^0 powers,
then the plane wave.  The product is driven by the closed rewrite rules

    x^0 x^m           = x^m (x^0 + i/kappa)
    x^0 exp(i q.x)    = exp(i q.x) (x^0 - (1/kappa) q.x)
    exp(i K x^0) x^m  = E_K^-1 x^m exp(i K x^0)
    exp(i K x^0) exp(i q.x) = exp(i E_K^-1 q.x) exp(i K x^0)

with E_K the Laurent monomial in the E symbols representing exp(K/kappa).
No infinite series ever appears.
"""

from __future__ import annotations

from .scalars import I, ONE, ZERO, ScalarValue

IMK = I * ScalarValue.kappa(-1)  # i/kappa, the structure constant of the algebra

_ZSPATIAL = (ZERO, ZERO, ZERO)


class PlaneWave:
    """Ordered exponential exp(i q.x_spatial) exp(i K x^0).

    `spatial` is a triple of ScalarValue entries (products of k and E
    symbols appear after rescaling); `time` is a sorted tuple of
    (label, integer) pairs denoting K = sum n_j * k[j,0].
    """

    __slots__ = ("spatial", "time", "_hash")

    def __init__(self, spatial=_ZSPATIAL, time=()):
        self.spatial = tuple(spatial)
        self.time = tuple(sorted((j, n) for j, n in time if n))
        self._hash = None

    @staticmethod
    def label(j):
        """The standard symbolic wave W[j] with momentum (k[j,0], k[j,1..3])."""
        return PlaneWave(
            (ScalarValue.k(j, 1), ScalarValue.k(j, 2), ScalarValue.k(j, 3)), ((j, 1),)
        )

    def is_identity(self):
        return not self.time and all(s.is_zero() for s in self.spatial)

    def time_scalar(self):
        """K as a ScalarValue, sum of n_j * k[j,0]."""
        acc = ZERO
        for j, n in self.time:
            acc = acc + ScalarValue.number(n) * ScalarValue.k(j, 0)
        return acc

    def e_power(self, p):
        """The Laurent monomial for exp(p*K/kappa) = prod E[j]^(p*n_j)."""
        acc = ONE
        for j, n in self.time:
            acc = acc * ScalarValue.E(j, p * n)
        return acc

    def inverse(self):
        """W^-1 = W(-E_K q, -K); equals star(W) for real momenta."""
        ek = self.e_power(1)
        return PlaneWave(
            tuple(-(ek * s) for s in self.spatial),
            tuple((j, -n) for j, n in self.time),
        )

    def star(self):
        ek = self.e_power(1)
        return PlaneWave(
            tuple(-(ek * s.conj()) for s in self.spatial),
            tuple((j, -n) for j, n in self.time),
        )

    def __eq__(self, other):
        return self.spatial == other.spatial and self.time == other.time

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spatial, self.time))
        return self._hash

    def render(self):
        if self.is_identity():
            return "1"
        parts = []
        for j, n in self.time:
            t = f"k[{j},0]" if n == 1 else f"{n}*k[{j},0]"
            parts.append(t)
        time_text = " + ".join(parts) if parts else "0"
        sp = "; ".join(s.render() for s in self.spatial)
        return "W{" + sp + "; " + time_text + "}"

    def __repr__(self):
        return f"<PlaneWave {self.render()}>"


W_IDENTITY = PlaneWave()
KEY_UNIT = ((0, 0, 0), 0, W_IDENTITY)


def _merge_time(t1, t2):
    acc = dict(t1)
    for j, n in t2:
        v = acc.get(j, 0) + n
        if v:
            acc[j] = v
        else:
            del acc[j]
    return tuple(sorted(acc.items()))


def _acc(out, key, coeff):
    v = out.get(key)
    v = coeff if v is None else v + coeff
    if v.is_zero():
        out.pop(key, None)
    else:
        out[key] = v


# -- left multiplication by single canonical factors -------------------------
# Each takes and returns a term dict {(a, d, W): ScalarValue}.


def _lmul_x0(terms):
    out = {}
    for (a, d, w), c in terms.items():
        _acc(out, (a, d + 1, w), c)
        na = a[0] + a[1] + a[2]
        if na:
            _acc(out, (a, d, w), c * ScalarValue.number(na) * IMK)
    return out


def _lmul_xm(m, terms):
    out = {}
    for (a, d, w), c in terms.items():
        na = list(a)
        na[m - 1] += 1
        _acc(out, (tuple(na), d, w), c)
    return out


def _lmul_time_exp(time, terms):
    """Multiply from the left by exp(i K x^0), K given as a time tuple."""
    if not time:
        return dict(terms)
    probe = PlaneWave((ZERO, ZERO, ZERO), time)
    ek_inv = probe.e_power(-1)
    out = {}
    for (a, d, w), c in terms.items():
        na = a[0] + a[1] + a[2]
        coeff = c * probe.e_power(-na) if na else c
        spatial = tuple(ek_inv * s for s in w.spatial)
        _acc(out, (a, d, PlaneWave(spatial, _merge_time(time, w.time))), coeff)
    return out


def _lmul_spatial_exp(q, terms):
    """Multiply from the left by exp(i q.x_spatial)."""
    if all(s.is_zero() for s in q):
        return dict(terms)
    out = {}
    qk = tuple(ScalarValue.kappa(-1) * s for s in q)
    for (a, d, w), c in terms.items():
        merged = PlaneWave(
            tuple(q[m] + w.spatial[m] for m in range(3)), w.time
        )
        cur = {((0, 0, 0), 0, merged): c}
        # (x^0 + (1/kappa) q.x)^d, applied one factor at a time
        for _ in range(d):
            nxt = _lmul_x0(cur)
            for m in (1, 2, 3):
                if qk[m - 1].is_zero():
                    continue
                for key, cc in _lmul_xm(m, cur).items():
                    _acc(nxt, key, cc * qk[m - 1])
            cur = nxt
        for (a2, d2, w2), cc in cur.items():
            key = ((a[0] + a2[0], a[1] + a2[1], a[2] + a2[2]), d2, w2)
            _acc(out, key, cc)
    return out


def _mono_lmul(key, terms):
    """Multiply the element `terms` from the left by the monomial `key`."""
    a, d, w = key
    cur = terms
    if w.time:
        cur = _lmul_time_exp(w.time, cur)
    if any(not s.is_zero() for s in w.spatial):
        cur = _lmul_spatial_exp(w.spatial, cur)
    for _ in range(d):
        cur = _lmul_x0(cur)
    if a != (0, 0, 0):
        out = {}
        for (a2, d2, w2), c in cur.items():
            _acc(out, ((a[0] + a2[0], a[1] + a2[1], a[2] + a2[2]), d2, w2), c)
        cur = out
    return cur


class PositionElement:
    """Normal-ordered element of the kappa-Minkowski algebra."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return PositionElement()

    @staticmethod
    def one():
        return PositionElement({KEY_UNIT: ONE})

    @staticmethod
    def scalar(s):
        s = ScalarValue._coerce(s)
        return PositionElement({KEY_UNIT: s} if not s.is_zero() else {})

    @staticmethod
    def x(mu):
        if mu == 0:
            return PositionElement({((0, 0, 0), 1, W_IDENTITY): ONE})
        if 1 <= mu <= 3:
            a = [0, 0, 0]
            a[mu - 1] = 1
            return PositionElement({(tuple(a), 0, W_IDENTITY): ONE})
        raise ValueError(f"coordinate index {mu} out of range 0..3")

    @staticmethod
    def wave(w):
        return PositionElement({((0, 0, 0), 0, w): ONE})

    @staticmethod
    def monomial(a, d, w, coeff=ONE):
        coeff = ScalarValue._coerce(coeff)
        if coeff.is_zero():
            return PositionElement()
        return PositionElement({(tuple(a), d, w): coeff})

    # -- algebra -------------------------------------------------------------

    def __add__(self, other):
        other = _coerce_position(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return PositionElement(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_position(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_position(other) - self

    def __neg__(self):
        return PositionElement({k: -c for k, c in self.terms.items()})

    def scale(self, s):
        s = ScalarValue._coerce(s)
        if s.is_zero():
            return PositionElement()
        out = {}
        for key, c in self.terms.items():
            _acc(out, key, c * s)
        return PositionElement(out)

    def __mul__(self, other):
        if isinstance(other, PositionElement):
            out = {}
            for key, c in self.terms.items():
                for key2, c2 in _mono_lmul(key, other.terms).items():
                    _acc(out, key2, c * c2)
            return PositionElement(out)
        if isinstance(other, (int, ScalarValue)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, ScalarValue)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("position elements only take nonnegative powers")
        acc = PositionElement.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def star(self):
        """Antilinear antihomomorphism fixing the generators x^mu."""
        out = PositionElement()
        for (a, d, w), c in self.terms.items():
            piece = PositionElement({((0, 0, 0), 0, w.star()): c.conj()})
            if d:
                piece = piece * PositionElement({((0, 0, 0), d, W_IDENTITY): ONE})
            if a != (0, 0, 0):
                piece = piece * PositionElement({(a, 0, W_IDENTITY): ONE})
            out = out + piece
        return out

    def antipode(self):
        """S(x^mu) = -x^mu extended antimultiplicatively; S(W) = W^-1."""
        out = PositionElement()
        for (a, d, w), c in self.terms.items():
            sign = -1 if (a[0] + a[1] + a[2] + d) % 2 else 1
            piece = PositionElement(
                {((0, 0, 0), 0, w.inverse()): c * ScalarValue.number(sign)}
            )
            if d:
                piece = piece * PositionElement({((0, 0, 0), d, W_IDENTITY): ONE})
            if a != (0, 0, 0):
                piece = piece * PositionElement({(a, 0, W_IDENTITY): ONE})
            out = out + piece
        return out

    def counit(self):
        """Coefficient of the identity monomial with trivial plane wave."""
        return self.terms.get(KEY_UNIT, ZERO)

    def coproduct(self):
        """Algebra map with primitive x^mu and group-like plane waves."""
        out = PositionTensor()
        for (a, d, w), c in self.terms.items():
            t = PositionTensor({(KEY_UNIT, KEY_UNIT): c})
            for m in (1, 2, 3):
                if a[m - 1]:
                    t = t * _primitive_power_tensor(PositionElement.x(m), a[m - 1])
            if d:
                t = t * _primitive_power_tensor(PositionElement.x(0), d)
            if not w.is_identity():
                key = ((0, 0, 0), 0, w)
                t = t * PositionTensor({(key, key): ONE})
            out = out + t
        return out

    # -- inspection ----------------------------------------------------------

    def map_coeffs(self, fn):
        out = {}
        for key, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[key] = v
        return PositionElement(out)

    def degree(self):
        return max((a[0] + a[1] + a[2] + d for (a, d, _w) in self.terms), default=0)

    def has_waves(self):
        return any(not w.is_identity() for (_a, _d, w) in self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        other = _coerce_position(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, d, w) in sorted(
            self.terms, key=lambda k: (k[0], k[1], k[2].time, k[2].render())
        ):
            c = self.terms[(a, d, w)]
            factors = []
            for m in (1, 2, 3):
                if a[m - 1] == 1:
                    factors.append(f"x{m}")
                elif a[m - 1]:
                    factors.append(f"x{m}^{a[m-1]}")
            if d == 1:
                factors.append("x0")
            elif d:
                factors.append(f"x0^{d}")
            if not w.is_identity():
                factors.append(w.render())
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
        return f"<PositionElement {self.render()}>"


def _coerce_position(x):
    if isinstance(x, PositionElement):
        return x
    if isinstance(x, (int, ScalarValue)):
        return PositionElement.scalar(x)
    return NotImplemented


def _primitive_power_tensor(gen, n):
    """(gen (x) 1 + 1 (x) gen)^n expanded binomially (the summands commute)."""
    from math import comb

    key = next(iter(gen.terms))
    out = {}
    for r in range(n + 1):
        out[(_power_key(key, r), _power_key(key, n - r))] = ScalarValue.number(comb(n, r))
    return PositionTensor(out)


def _power_key(key, n):
    a, d, _w = key
    return ((a[0] * n, a[1] * n, a[2] * n), d * n, W_IDENTITY)


class PositionTensor:
    """Element of the tensor square with componentwise product."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def outer(a, b):
        out = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                _acc(out, (k1, k2), c1 * c2)
        return PositionTensor(out)

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return PositionTensor(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PositionTensor({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                left = _mono_lmul(l1, {l2: ONE})
                right = _mono_lmul(r1, {r2: ONE})
                c = c1 * c2
                for kl, cl in left.items():
                    for kr, cr in right.items():
                        _acc(out, (kl, kr), c * cl * cr)
        return PositionTensor(out)

    def left_counit(self):
        """(counit (x) id), landing back in the algebra."""
        out = {}
        for (l, r), c in self.terms.items():
            if l == KEY_UNIT:
                _acc(out, r, c)
        return PositionElement(out)

    def multiply_legs(self, fn_left=None):
        """m o (fn_left (x) id): transform left legs, then multiply out."""
        acc = PositionElement()
        for (l, r), c in self.terms.items():
            left = PositionElement({l: ONE})
            if fn_left is not None:
                left = fn_left(left)
            acc = acc + (left * PositionElement({r: ONE})).scale(c)
        return acc

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return self.terms == other.terms

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (l, r), c in self.terms.items():
            lt = PositionElement({l: ONE}).render()
            rt = PositionElement({r: ONE}).render()
            parts.append(f"({c.render()}) * ({lt}) (x) ({rt})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<PositionTensor {self.render()}>"
