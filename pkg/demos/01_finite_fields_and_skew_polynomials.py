"""Field arithmetic in GF(4) and the twisted polynomial product D*a = theta(a)*D."""

from skewconv import FiniteField, SkewPoly

field = FiniteField(2, 2, modulus=[1, 1, 1], theta_r=1)
a = field.primitive_element

print("GF(4) with modulus x^2 + x + 1; elements are integers 0..3")
print(f"primitive element a = {int(a)}")
print(f"a * a     = {a * a}   (a^2 = a + 1)")
print(f"a * a^2   = {a * a**2}   (a^3 = 1)")
print(f"theta(a)  = {a.frobenius()}   (theta(x) = x^2)")
print(f"theta^2(a) = {a.frobenius(2)}   (theta has order 2)")
print()

D = SkewPoly.indeterminate(field)
alpha = SkewPoly(field, [int(a)])
print("skew polynomials: multiplication twists coefficients past D")
print(f"D * a = {D * alpha}")
print(f"a * D = {alpha * D}")
print()

p = SkewPoly(field, [1, int(a)])  # 1 + a D
q = SkewPoly(field, [int(a), 1])  # a + D
print(f"({p}) * ({q}) = {p * q}")

quot, rem = (p * q).right_divmod(q)
print(f"right division back out: quotient {quot}, remainder {rem}")
