import itertools

import pytest

from qcat.exactfield import ONE, Q, ZERO, qint, v_power
from qcat.linmap import flat_index, word_dim, word_weights
from qcat.uqsl2_rep import (
    CoproductSide, Irrep, act_generator, act_tensor, generator_matrix,
    highest_weight_vectors, verify_relations,
)
from qcat.fusion_cg import sel

SIDES = list(CoproductSide)


def basis(word, *idx):
    x = [ZERO] * word_dim(word)
    x[flat_index(word, idx)] = ONE
    return x


def test_irrep():
    r = Irrep(3)
    assert r.dim == 4
    assert [r.weight(i) for i in range(4)] == [3, 1, -1, -3]
    with pytest.raises(ValueError):
        Irrep(-1)


def test_act_generator_examples():
    assert act_generator("E", 3, 0) == [ZERO] * 4
    assert act_generator("F", 2, 2) == [ZERO] * 3
    assert act_generator("E", 2, 1) == [Q + Q**-1, ZERO, ZERO]
    assert act_generator("K", 2, 0) == [Q**2, ZERO, ZERO]
    with pytest.raises(IndexError):
        act_generator("E", 2, 3)
    with pytest.raises(ValueError):
        act_generator("X", 2, 0)


def test_act_tensor_examples():
    w = (1, 1)
    x = [a - Q * b for a, b in zip(basis(w, 0, 1), basis(w, 1, 0))]
    assert act_tensor("E", w, CoproductSide.DELTA, x) == [ZERO] * 4
    for l1, l2 in [(1, 2), (3, 2)]:
        for i, j in itertools.product(range(l1 + 1), range(l2 + 1)):
            for side in SIDES:
                got = act_tensor("K", (l1, l2), side, basis((l1, l2), i, j))
                assert got == [Q**(l1 + l2 - 2 * i - 2 * j) * e for e in basis((l1, l2), i, j)]
    assert act_tensor("F", (), CoproductSide.DELTA, [ONE]) == [ZERO]
    assert act_tensor("K", (), CoproductSide.DELTA_OP, [ONE]) == [ONE]
    with pytest.raises(ValueError):
        act_tensor("E", (1, 1), CoproductSide.DELTA, [ONE])


def _hand_coproduct(gen, l1, l2, side, i, j):
    """Expand Delta or Delta_op of gen on e_i (x) e_j factor by factor."""
    def one_leg(g, ell, k):
        return act_generator(g, ell, k)

    def tensor(u, w):
        return [a * b for a in u for b in w]

    ei = basis((l1,), i)
    ej = basis((l2,), j)
    if gen in ("K", "Kinv"):
        return tensor(one_leg(gen, l1, i), one_leg(gen, l2, j))
    if side is CoproductSide.DELTA:
        if gen == "E":
            terms = [tensor(one_leg("E", l1, i), ej), tensor(one_leg("K", l1, i), one_leg("E", l2, j))]
        else:
            terms = [tensor(one_leg("F", l1, i), one_leg("Kinv", l2, j)), tensor(ei, one_leg("F", l2, j))]
    else:
        if gen == "E":
            terms = [tensor(ei, one_leg("E", l2, j)), tensor(one_leg("E", l1, i), one_leg("K", l2, j))]
        else:
            terms = [tensor(one_leg("Kinv", l1, i), one_leg("F", l2, j)), tensor(one_leg("F", l1, i), ej)]
    return [a + b for a, b in zip(*terms)]


@pytest.mark.parametrize("side", SIDES)
@pytest.mark.parametrize("gen", ["K", "Kinv", "E", "F"])
def test_two_factor_action_matches_hand_expansion(gen, side):
    for l1, l2 in [(1, 1), (2, 1), (1, 3), (3, 2)]:
        for i, j in itertools.product(range(l1 + 1), range(l2 + 1)):
            got = act_tensor(gen, (l1, l2), side, basis((l1, l2), i, j))
            assert got == _hand_coproduct(gen, l1, l2, side, i, j)


@pytest.mark.parametrize("ell", [0, 1, 5])
def test_verify_relations_irreps(ell):
    assert all(verify_relations(ell).values())


def _words(total):
    for k in range(1, total + 1):
        for word in itertools.product(range(1, total + 1), repeat=k):
            if sum(word) <= total:
                yield word


@pytest.mark.slow
@pytest.mark.parametrize("side", SIDES)
def test_relations_on_all_words(side):
    # every word of positive labels with label sum <= 8, plus some unit legs
    words = list(_words(8)) + [(0, 3), (2, 0, 1), (0,), ()]
    for word in words:
        report = verify_relations(word, side)
        assert all(report.values()), (word, report)


@pytest.mark.parametrize("side", SIDES)
def test_weight_grading(side):
    for word in [(1, 2), (2, 2, 1), (3,)]:
        weights = word_weights(word)
        for gen, shift in (("K", 0), ("Kinv", 0), ("E", 2), ("F", -2)):
            m = generator_matrix(gen, word, side)
            for i, nz in enumerate(m.nonzeros()):
                for j, _ in nz:
                    assert weights[i] == weights[j] + shift


def test_highest_weight_vector_examples():
    hw = dict(highest_weight_vectors((1, 1)))
    assert [len(hw[w]) for w in (2, 0, -2)] == [1, 1, 0]
    # the weight-0 vector is proportional to e0 (x) e1 - q e1 (x) e0
    (vec,) = hw[0]
    assert vec[2] == -Q * vec[1] and vec[0] == vec[3] == ZERO
    hw = highest_weight_vectors((0, 4))
    assert [(w, len(b)) for w, b in hw if b] == [(4, 1)]
    hw = highest_weight_vectors((2, 3))
    assert [(w, len(b)) for w, b in hw if b] == [(5, 1), (3, 1), (1, 1)]


@pytest.mark.parametrize("side", SIDES)
def test_highest_weight_multiset_matches_sel(side):
    for l1, l2 in itertools.product(range(7), repeat=2):
        found = sorted(w for w, b in highest_weight_vectors((l1, l2), side) for _ in b)
        assert found == sorted(sel(l1, l2))
        for w, vecs in highest_weight_vectors((l1, l2), side):
            for x in vecs:
                assert act_tensor("E", (l1, l2), side, x) == [ZERO] * len(x)
