"""
Convolution, inversion and the Mobius function
==============================================

Series on a finite poset multiply by summing over intervals.  A series
is invertible exactly when its diagonal has no zeros, and the inverse of
zeta is the Mobius function.
"""

from finitary import QQ, Series, boolean_lattice, c_alpha, chain, diamond, invert, mobius, zeta

# The diamond a < b, c < d.  zeta * zeta counts the elements of each interval.
D = diamond()
print("zeta^2 on the diamond:", zeta(D) * zeta(D))

# Mobius values: -1 on covering pairs, +1 across the diamond,
# (-1)^3 across the Boolean lattice on three atoms.
print("mu on the diamond:", mobius(D))
print("mu(bottom, top) on B3:", mobius(boolean_lattice(3))["000", "111"])

# A generic invertible series over the rationals and its inverse.
C = chain(3)
a = Series(C, {("0", "0"): 2, ("1", "1"): -1, ("2", "2"): "1/3", ("0", "2"): 5, ("1", "2"): 1})
b = invert(a)
print("a^-1 =", b)
print("a * a^-1 == identity:", a * b == Series(C, {(x, x): 1 for x in C}))

# The finitarity counter: nonzero off-diagonal coefficients inside [0, 2].
print("c_alpha(a, 0, 2) =", c_alpha(a, "0", "2"))

# A zero on the diagonal makes the series singular; the error names the element.
try:
    invert(a - Series(C, {("1", "1"): -1}, QQ))
except Exception as e:
    print(type(e).__name__, "-", e)
