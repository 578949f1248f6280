"""Transcendental constants used by the exact maps and validation checks."""

import math

# 30 significant digits; cross-checked against math.gamma in the tests.
GAMMA_1_4 = 3.62560990822190831193068515587
GAMMA_1_3 = 2.67893853470774763365569294097
GAMMA_1_6 = 5.56631600178023520425009689520

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

#: Invariant g2 of the square lattice with half-periods 1 and i (g3 = 0).
G2 = GAMMA_1_4**8 / (256.0 * math.pi**2)

#: Weierstrass p at the real half-period.
P_OF_1 = GAMMA_1_4**4 / (32.0 * math.pi)

#: Half-width of the centered isosceles right triangle, K(1/2)/sqrt(2).
KAPPA = GAMMA_1_4**2 / (2.0**2.5 * math.sqrt(math.pi))

#: Short leg of the 30-60-90 triangle used by the exact map.
KAPPA_306090 = GAMMA_1_3 * GAMMA_1_6 / (2.0 ** (5.0 / 3.0) * math.sqrt(math.pi))

#: Nome of the square lattice, exp(-pi).
NOME = math.exp(-math.pi)

#: Diagonal coordinate of the least capacity point of the unit isosceles right triangle.
T0 = 0.3011216108413220815538254

#: Maximum inner radius of the unit isosceles right triangle (closed form).
MAX_RADIUS_ISO = 4.0 * math.sqrt(2.0 * math.pi) * 3.0**-0.75 / GAMMA_1_4**2

#: Maximum inner radius of the 30-60-90 triangle divided by its hypotenuse 2*kappa.
MAX_RADIUS_306090_REL = 2.0 ** (4.0 / 3.0) * math.pi * 5.0 ** (-5.0 / 12.0) / GAMMA_1_3**3

#: Jacobi parameter of the map for the 30-60-90 triangle.
M_306090 = (2.0 + SQRT3) / 4.0

#: Argument scale of the 30-60-90 map.
SCALE_306090 = 2.0 ** (2.0 / 3.0) / 3.0**0.75
