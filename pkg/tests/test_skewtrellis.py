import itertools
import random

import pytest

from skewconv import (
    QSChannel,
    Sequence,
    SkewPolyMatrix,
    SkewTrellisCode,
    bcjr,
    build_trellis_right,
    linearity_report,
    viterbi,
)

from conftest import A, A2, EXAMPLE_TABLE


@pytest.fixture(scope="module")
def right_code(f4):
    return SkewTrellisCode(SkewPolyMatrix.from_ints(f4, EXAMPLE_TABLE))


@pytest.fixture(scope="module")
def right_code_id(f4_id):
    return SkewTrellisCode(SkewPolyMatrix.from_ints(f4_id, EXAMPLE_TABLE))


def reference_encode_right(code, ublocks, terminate):
    f = code.field
    total = len(ublocks) + (code.memory if terminate else 0)
    out = []
    for t in range(total):
        acc = [0] * code.n
        for i in range(code.memory + 1):
            s = t - i
            if not 0 <= s < len(ublocks):
                continue
            gi = code.generator.coefficient_values(i)
            for row in range(code.k):
                tw = f.frobenius_int(ublocks[s][row], i)
                for j in range(code.n):
                    acc[j] = f.add_int(acc[j], f.mul_int(tw, gi[row][j]))
        out.append(tuple(acc))
    return out


def test_one_zero_input(right_code):
    assert right_code.encode_right([[1], [0]]).to_ints() == [(1, A), (A, A2)]


def test_alpha_zero_input(right_code):
    # v_1 = theta(a) (a, a^2) = a^2 (a, a^2) = (1, a)
    assert right_code.encode_right([[A], [0]]).to_ints() == [(A, A2), (1, A)]


def test_all_zero(right_code):
    assert right_code.encode_right([[0]] * 4, terminate=True).to_ints() == [(0, 0)] * 5


def test_matches_reference_formula(right_code):
    rng = random.Random(41)
    for _ in range(50):
        u = [[rng.randrange(4)] for _ in range(rng.randrange(1, 6))]
        for term in (False, True):
            assert right_code.encode_right(u, terminate=term).to_ints() == (
                reference_encode_right(right_code, u, term)
            )


def test_additivity(right_code, f4):
    rng = random.Random(42)
    for _ in range(100):
        length = rng.randrange(1, 6)
        u1 = Sequence(f4, [[rng.randrange(4)] for _ in range(length)], width=1)
        u2 = Sequence(f4, [[rng.randrange(4)] for _ in range(length)], width=1)
        lhs = right_code.encode_right(u1 + u2, terminate=True)
        rhs = right_code.encode_right(u1, terminate=True) + right_code.encode_right(
            u2, terminate=True
        )
        assert lhs == rhs


def test_identity_twist_coincides_with_left_encoding(right_code_id, example_code_id):
    rng = random.Random(43)
    for _ in range(50):
        u = [[rng.randrange(4)] for _ in range(rng.randrange(1, 7))]
        assert right_code_id.encode_right(u, terminate=True) == example_code_id.encode(
            u, terminate=True
        )


def test_linearity_report_example(right_code):
    rep = linearity_report(right_code)
    assert rep.fixed_subfield == [0, 1]
    assert rep.additive_ok
    assert rep.subfield_homogeneous
    a, u, lhs, rhs = rep.witness
    assert a in (A, A2)
    # re-check the witness directly
    useq = Sequence(right_code.field, [list(b) for b in u], width=1)
    assert right_code.encode_right(useq.scale(a), terminate=True) == lhs
    assert right_code.encode_right(useq, terminate=True).scale(a) == rhs
    assert lhs != rhs


def test_no_witness_for_identity_twist(right_code_id):
    rep = linearity_report(right_code_id)
    assert rep.witness is None
    assert rep.fixed_subfield == [0, 1, 2, 3]
    assert rep.additive_ok and rep.subfield_homogeneous
    # exhaustive confirmation on short inputs
    f = right_code_id.field
    for a in range(1, 4):
        for u in itertools.product(range(4), repeat=2):
            useq = Sequence(f, [[s] for s in u], width=1)
            lhs = right_code_id.encode_right(useq.scale(a), terminate=True)
            rhs = right_code_id.encode_right(useq, terminate=True).scale(a)
            assert lhs == rhs


def test_homogeneity_over_fixed_subfield_exhaustive(right_code):
    f = right_code.field
    for c in (0, 1):
        for u in itertools.product(range(4), repeat=2):
            useq = Sequence(f, [[s] for s in u], width=1)
            lhs = right_code.encode_right(useq.scale(c), terminate=True)
            rhs = right_code.encode_right(useq, terminate=True).scale(c)
            assert lhs == rhs


# -- trellis ------------------------------------------------------------------


def test_right_trellis_structure(right_code, f4):
    tr = build_trellis_right(right_code)
    assert tr.num_states == 4
    assert tr.num_sections == 1
    for st in range(4):
        for u in range(4):
            e = tr.edge(0, st, u)
            assert e.to_state == f4.frobenius_int(u)
    zero = tr.edge(0, 0, 0)
    assert zero.to_state == 0 and zero.label == (0, 0)


def test_right_trellis_paths_spell_encoder(right_code):
    tr = build_trellis_right(right_code)
    for length in range(1, 5):
        for u in itertools.product(range(4), repeat=length):
            state = 0
            labels = []
            for sym in u:
                e = tr.edge(0, state, sym)
                labels.append(e.label)
                state = e.to_state
            assert labels == right_code.encode_right([[s] for s in u]).to_ints()


def test_right_trellis_decodes(right_code):
    tr = build_trellis_right(right_code)
    rng = random.Random(44)
    channel = QSChannel(4, 0.05)
    for _ in range(20):
        u = [[rng.randrange(4)] for _ in range(5)]
        v = right_code.encode_right(u, terminate=True)
        res = viterbi(tr, v, terminated=True)
        assert res.metric == 0
        assert res.info_est.to_ints() == [tuple(b) for b in u]
    soft = bcjr(tr, right_code.encode_right(u, terminate=True), channel, terminated=True)
    assert soft.info_est.to_ints() == [tuple(b) for b in u]


def test_validation_mirrors_left_code(f4):
    with pytest.raises(ValueError):
        SkewTrellisCode(SkewPolyMatrix.from_ints(f4, [[[1], [A]], [[A], [A2]]]))
