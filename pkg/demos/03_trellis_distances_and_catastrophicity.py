"""Trellis structure, active burst distances, slope, and the catastrophicity
flip when the automorphism is switched off."""

from skewconv import FiniteField, SkewConvCode, SkewPolyMatrix, is_catastrophic
from skewconv.trellis import build_trellis, export_dot, unit_memory_bounds

A = 2
TABLE = [[[1, A], [A, A + 1]]]


def describe(theta_r):
    field = FiniteField(2, 2, modulus=[1, 1, 1], theta_r=theta_r)
    code = SkewConvCode(SkewPolyMatrix.from_ints(field, TABLE))
    tr = build_trellis(code)
    print(f"theta_r = {theta_r}: {tr.num_states} states, {tr.num_sections} section(s)")
    bursts = {ell: tr.active_burst_distance(ell) for ell in range(2, 8)}
    print(f"  active burst distances: {bursts}")
    fd = tr.free_distance()
    print(f"  free distance {fd.value} (via {fd.achieved_by}), slope {tr.slope()}")
    cat = is_catastrophic(code)
    print(f"  catastrophic: {cat.catastrophic}")
    if cat.witness:
        loop = " -> ".join(str(s.from_state) for s in cat.witness)
        print(f"  witness cycle through states {loop} -> {cat.witness[-1].to_state}")
    print(f"  unit-memory bounds: {unit_memory_bounds(code)}")
    print()
    return tr


tr = describe(theta_r=1)  # the skew code: optimal, d_free = 4, slope 1
describe(theta_r=0)  # same matrix, ordinary code: catastrophic, d_free = 2

print("three unrolled sections as Graphviz DOT (first lines):")
print("\n".join(export_dot(tr, 3).splitlines()[:8]))
print("...")
