"""Solve for the dual code's syndrome former and verify orthogonality."""

from skewconv import (
    FiniteField,
    SkewConvCode,
    SkewPolyMatrix,
    syndrome_former,
    verify_duality,
)
from skewconv.linalg import f_matmul

A = 2
field = FiniteField(2, 2, modulus=[1, 1, 1], theta_r=1)
code = SkewConvCode(SkewPolyMatrix.from_ints(field, [[[1, A], [A, A + 1]]]))

sf = syndrome_former(code)
print(f"H(D) = {sf.check}   (dual memory {sf.dual_memory})")
print(f"G(D) H^T(D) = {code.generator @ sf.check.transpose()}")
print()

print("check-matrix window (column-stationary layout):")
print(sf.h_window(3))
print()

gw = code.scalar_generator(4)
prod = f_matmul(field, gw, sf.ht_window(5))
print(f"scalar window product is zero: {not prod.any()}")
print(f"full duality verification: {verify_duality(code, sf)}")
