"""Encode with a [2, 1] unit-memory skew convolutional code over GF(4).

The encoder coefficients rotate with the automorphism, so the same generator
matrix behaves like a periodic time-varying convolutional code with period 2.
"""

from skewconv import FiniteField, SkewConvCode, SkewPolyMatrix, format_sequence

field = FiniteField(2, 2, modulus=[1, 1, 1], theta_r=1)
A = 2  # the primitive element as an integer

# G(D) = (1 + a D, a + a^2 D)
code = SkewConvCode(SkewPolyMatrix.from_ints(field, [[[1, A], [A, A + 1]]]))
print(f"code: {code}")
print(f"generator: {code.generator}")
print(f"memory {code.memory}, external degree {code.external_degree}, period {code.period}")
print()

u = [[1], [0], [0], [1]]
v = code.encode(u, terminate=True)
print("information 1, 0, 0, 1 encodes (zero-tail terminated) to:")
print(format_sequence(v, pretty=True))

print("the same codeword as integers:")
print(format_sequence(v))

print("scalar generator window (4 block rows), showing the twisted staircase:")
print(code.scalar_generator(4))
print()

print("regrouped into an equivalent fixed [4, 2] code, generator:")
print(code.tau_block())
