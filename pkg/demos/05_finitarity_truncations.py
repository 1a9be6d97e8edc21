"""
Truncating a non-locally-finite poset
=====================================

In N + N-bar every bottom element lies below every top element, so each
interval from the bottom half to the top half is infinite and zeta on
the bottom half is not a finitary series there.  On finite truncations
chain(n) + chain(n) this shows up as unbounded growth of the counter
c_alpha at the extreme segment.
"""

from finitary import c_alpha, chain, extend_by_zero, order_sum, zeta

print(" n  c_alpha  segments")
for n in range(1, 11):
    lower, upper = chain(n, "a"), chain(n, "b")
    P = order_sum(lower, upper)
    z = extend_by_zero(zeta(lower), P)
    print(f"{n:2d}  {c_alpha(z, 'a0', f'b{n - 1}'):7d}  {len(P.segments()):8d}")
