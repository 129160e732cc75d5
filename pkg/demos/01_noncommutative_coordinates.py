#!/usr/bin/env python3
"""Tour of the noncommutative coordinate algebra.

The four coordinates obey [x^0, x^m] = (i/kappa) x^m with the spatial
coordinates commuting among themselves.  Everything below is exact: the
coefficients are Gaussian rationals times Laurent monomials in kappa,
and equality means equality of canonical term maps.
"""

from kmink import PlaneWave, PositionElement, ScalarValue

x = [PositionElement.x(mu) for mu in range(4)]
i_over_kappa = ScalarValue.number(0, 1) * ScalarValue.kappa(-1)

print("== defining relations ==")
print("x0 * x1              =", (x[0] * x[1]).render())
print("x1 * x0              =", (x[1] * x[0]).render())
print("[x0, x1]             =", (x[0] * x[1] - x[1] * x[0]).render())
print("[x1, x2]             =", (x[1] * x[2] - x[2] * x[1]).render())

print()
print("== normal ordering is canonical ==")
lhs = (x[0] * x[1]) * x[0]
rhs = x[0] * (x[1] * x[0])
print("(x0 x1) x0           =", lhs.render())
print("x0 (x1 x0)           =", rhs.render())
print("associative?         ", lhs == rhs)

print()
print("== star structure ==")
print("star(x0 x1)          =", (x[0] * x[1]).star().render())
print("star is an involution:", (x[0] * x[1]).star().star() == x[0] * x[1])

print()
print("== ordered plane waves ==")
w1 = PositionElement.wave(PlaneWave.label(1))
w2 = PositionElement.wave(PlaneWave.label(2))
print("W[1]                 =", w1.render())
print("W[1] * W[2]          =", (w1 * w2).render())
print("  (the spatial momenta of the right factor are redshifted by")
print("   E[1]^-1 = exp(-k[1,0]/kappa): the deformed momentum addition)")
print("W[1] * star(W[1])    =", (w1 * w1.star()).render())

print()
print("== cocommutative Hopf structure ==")
print("coproduct(x0)        =", x[0].coproduct().render())
print("antipode(x0 x1)      =", (x[0] * x[1]).antipode().render())
print("counit(5 + x1)       =", (PositionElement.scalar(5) + x[1]).counit().render())
