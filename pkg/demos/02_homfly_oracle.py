"""The independent HOMFLYPT oracle: Hecke algebra, Markov trace, and the
two normalizations F and F~.

Run:  python3 demos/02_homfly_oracle.py
"""

from trigrad import parse_braid, qt_expand
from trigrad.algebra import RationalQT
from trigrad.braid import BraidWord
from trigrad.homfly import (
    hecke_of_braid,
    homfly_F,
    homfly_F_tilde,
    solve_trace_params,
    unknot_value,
)

params = solve_trace_params()
print("trace parameters:")
print("  delta =", params.delta)
print("  z     =", params.z)
print("  delta * z == 1:", params.delta * params.z == RationalQT.one())

unknot = parse_braid("", strands=1)
print("\nF(unknot) =", homfly_F(unknot))
print("as a q-series:", qt_expand(homfly_F(unknot), 9))

# Stabilization: adding sigma_n leaves F untouched; adding sigma_n^{-1}
# multiplies by alpha = -t^{-1}q^{-1}.
print("\nF(sigma_1)   == F(unknot):", homfly_F(parse_braid("1")) == unknot_value())
print("F(sigma_1^-1) =", qt_expand(homfly_F(parse_braid("-1")), 8))

# The Hecke algebra itself: the image of sigma_1^2 decomposes over the
# permutation basis via the quadratic relation.
print("\nhecke(sigma_1^2) coefficients:")
for w, c in hecke_of_braid(parse_braid("1 1")).coeffs:
    print(f"  T_{w}: {c}")

# The skein relation the oracle satisfies, on a random-looking example.
q = RationalQT.term(1, 0)
qinv = RationalQT.term(-1, 0)
b = BraidWord(3, (1, -2, 1))
lhs = qinv * homfly_F(BraidWord(3, b.letters + (2,))) - q * homfly_F(
    BraidWord(3, b.letters + (-2,))
)
print("\nskein check on 1 -2 1:", lhs == (qinv - q) * homfly_F(b))

# F~ is fully Markov-invariant: the figure-eight braid and a stabilization.
fig8 = parse_braid("1 -2 1 -2")
stab = BraidWord(4, fig8.letters + (-3,))
print("F~(4_1) invariant under negative stabilization:",
      homfly_F_tilde(fig8) == homfly_F_tilde(stab))
