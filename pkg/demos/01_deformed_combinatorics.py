"""Exact coefficients and deformed combinatorics.

Every scalar in this package lives in Z[p^+-1, q^+-1, w^+-1]: integer
coefficients, two deformation parameters, and a formal phase unit w whose
powers never collapse (the deformation angle is irrational).  This script
walks through the coefficient ring and the contraction-polynomial family
that powers every normal-form rule.
"""

from heegaard import (
    ONE,
    QPoly,
    p_pow,
    q_pow,
    qbinomial,
    qint,
    qpoly_Q,
    qpoly_Qpair,
    qpoly_rescale,
    w_pow,
)

# Deformed integers interpolate the ordinary ones: [n] = 1 + v + ... + v^(n-1).
print("deformed integers")
for n in range(5):
    print(f"  [{n}]_p = {qint(n, 'p')}")

# Deformed binomials are computed by the Pascal recursion, never by
# floating division.  They are symmetric Laurent-free polynomials:
print("\ndeformed binomials")
for n in range(5):
    row = [str(qbinomial(n, m, "p")) for m in range(n + 1)]
    print(f"  n={n}: " + " | ".join(row))

# The contraction family Q.  Positive indices have negative parameter
# powers, negative indices stay polynomial in p — the asymmetry that makes
# the parameter-zero specialization of adjoint-first products exact:
print("\ncontraction polynomials")
for mu in (-3, -2, -1, 1, 2, 3):
    print(f"  index {mu:+d}: {qpoly_Q(mu, 'p')}")

# The two-index family vanishes unless the exponents have opposite signs:
print("\ntwo-index family")
print("  (3, 5)  ->", qpoly_Qpair(3, 5, "p"))
print("  (1, -2) ->", qpoly_Qpair(1, -2, "p"))
print("  (2, -1) ->", qpoly_Qpair(2, -1, "p"))

# Rescaling substitutes Y -> p^e Y; it is how composition identities and
# the negative-index family are expressed:
one, y = QPoly({0: ONE}), QPoly({1: ONE})
m, n = 3, 4
lhs = qpoly_Q(m + n, "p")
rhs = (one + qpoly_Q(m, "p")) * qpoly_rescale(qpoly_Q(n, "p"), -m) + qpoly_Q(m, "p")
print("\ncomposition identity at (3, 4):", "holds" if lhs == rhs else "FAILS")

# Conjugation fixes the real parameters and inverts the phase unit:
c = p_pow(1) * q_pow(-2) * w_pow(3)
print("\nconjugation:", c, "|->", c.conjugate())
