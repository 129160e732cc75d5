"""Deterministic random fixtures for the verification suites and tests.

Coefficients are drawn from {0, +-1, +-i, +-1/2} and degrees stay small:
normal ordering is superlinear in degree, and small exact fixtures keep
the term blow-up bounded.  At most two plane-wave labels are used.
"""

from __future__ import annotations

from fractions import Fraction

from .forms import OneForm
from .minkowski import PlaneWave, PositionElement, W_IDENTITY
from .momentum import MomentumElement
from .scalars import ScalarValue

COEFFS = (
    ScalarValue.number(1),
    ScalarValue.number(-1),
    ScalarValue.number(0, 1),
    ScalarValue.number(0, -1),
    ScalarValue.number(Fraction(1, 2)),
    ScalarValue.number(Fraction(-1, 2)),
)

WAVE_LABELS = (1, 2)


def rand_coeff(rng):
    return COEFFS[rng.randrange(len(COEFFS))]


def rand_position(rng, max_degree, n_terms=3, waves=False):
    acc = PositionElement.zero()
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        a = [0, 0, 0]
        d = 0
        for _ in range(deg):
            slot = rng.randrange(4)
            if slot == 0:
                d += 1
            else:
                a[slot - 1] += 1
        w = W_IDENTITY
        if waves and rng.random() < 0.5:
            w = PlaneWave.label(WAVE_LABELS[rng.randrange(len(WAVE_LABELS))])
        acc = acc + PositionElement.monomial(tuple(a), d, w, rand_coeff(rng))
    return acc


def rand_polynomial(rng, max_degree, n_terms=3):
    return rand_position(rng, max_degree, n_terms, waves=False)


def rand_momentum(rng, max_degree, n_terms=3):
    acc = MomentumElement.zero()
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        b = [0, 0, 0]
        d = 0
        for _ in range(deg):
            slot = rng.randrange(4)
            if slot == 0:
                d += 1
            else:
                b[slot - 1] += 1
        lam = rng.randint(-1, 1)
        acc = acc + MomentumElement.monomial(tuple(b), d, lam, rand_coeff(rng))
    return acc


def rand_spinor(rng, max_degree):
    return tuple(rand_position(rng, max_degree, n_terms=1) for _ in range(4))


def rand_oneform(rng, max_degree):
    return OneForm([rand_position(rng, max_degree, n_terms=1) for _ in range(5)])


def rand_unitary(rng):
    return PositionElement.wave(PlaneWave.label(WAVE_LABELS[rng.randrange(2)]))
