"""Normal-form arithmetic in the quantum disc and the Heegaard sphere.

Elements are stored in normal form at all times — equality is literal
dictionary comparison — and every product runs through closed-form
contraction rules rather than free rewriting.
"""

from heegaard import DISC, DISC0, ONE, SPHERE, SPHERE0, EvaluationError, kappa_iso, p_pow, w_pow
from heegaard.units import deg_extreme, is_unit, split_expansion

d = DISC
x, X = d.x(), d.X()

print("quantum disc")
print("  x* x      =", x.star() * x)
print("  x x*      =", x * x.star())
print("  x^2 x*^2  =", d.x(2) * d.x(1).pow_signed(-2))
print("  X x = p x X:", (X * x) == (x * X).scale(p_pow(1)))

# the mirror disc carries the inverse parameter; the generator map sends
# the defining relation's residual to zero there
residual = x.star() * x - (x * x.star()).scale(p_pow(1)) - d.scalar(ONE - p_pow(1))
print("  mirror image of x:", kappa_iso(x))
print("  mirror image of the relation residual:", kappa_iso(residual))

s = SPHERE
a, b, A, B, z = s.a(), s.b(), s.A(), s.B(), s.z()

print("\nHeegaard sphere")
print("  b a     =", b * a)
print("  a* a    =", a.star() * a)
print("  A B     =", A * B)
print("  z z*    =", z * z.star())
print("  z* z    =", z.star() * z)
print("  star(a b*) =", (a * b.star()).star())

print("\ngrading")
print("  degrees of a + b^2:", sorted((a + b.pow_signed(2)).degree_support()))
print("  z is invariant for every type:", z.is_invariant(5))

print("\nunit detection")
print("  w^2 * 1:", is_unit(s.scalar(w_pow(2))))
print("  1 + A  :", is_unit(s.one() + A))
print("  a      :", is_unit(a))

r = s.one() + A * b + (s.B(2) * a)
print("\ncoefficient splitting of 1 + A b + B^2 a")
for t in split_expansion(r):
    print(f"  bidegree ({t.mu}, {t.nu}): gamma={t.gamma}, alpha={t.alpha}, beta={t.beta}")
print("  lexicographic extremes:", deg_extreme(r, "A", "min"), "..", deg_extreme(r, "A", "max"))

print("\nparameter-zero presentation")
s0 = SPHERE0
print("  a* a    =", s0.a().star() * s0.a())
print("  A^2     =", s0.A() * s0.A())
print("  A a     =", s0.A() * s0.a())
d0 = DISC0
try:
    d0.x() * d0.X()
except EvaluationError as exc:
    print("  x X escapes the span:", type(exc).__name__)
