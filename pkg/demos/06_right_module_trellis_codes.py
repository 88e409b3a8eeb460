"""Right-module skew trellis codes: the twist moves into the shift register,
making the code nonlinear over GF(4) yet still linear over GF(2)."""

from skewconv import (
    FiniteField,
    SkewPolyMatrix,
    SkewTrellisCode,
    build_trellis_right,
    linearity_report,
    viterbi,
)

A = 2
field = FiniteField(2, 2, modulus=[1, 1, 1], theta_r=1)
code = SkewTrellisCode(SkewPolyMatrix.from_ints(field, [[[1, A], [A, A + 1]]]))

print("v_t = u_t G_0 + theta(u_{t-1}) G_1")
for u in ([[1], [0]], [[A], [0]]):
    print(f"  u = {[b[0] for b in u]} -> {code.encode_right(u).to_ints()}")
print()

report = linearity_report(code)
print(f"fixed subfield of theta: {report.fixed_subfield}")
print(f"additive on random pairs: {report.additive_ok}")
print(f"homogeneous over the fixed subfield: {report.subfield_homogeneous}")
a, u, lhs, rhs = report.witness
print(f"homogeneity over GF(4) fails, witness a = {field.element_name(a)}, u = {u}:")
print(f"  encode(a*u) = {lhs.to_ints()}")
print(f"  a*encode(u) = {rhs.to_ints()}")
print()

trellis = build_trellis_right(code)
print(f"trellis: {trellis.num_states} states, {trellis.num_sections} section (time-invariant)")
sent = code.encode_right([[3], [1], [2]], terminate=True)
print(f"decoding its own output: {viterbi(trellis, sent, terminated=True).info_est.to_ints()}")
