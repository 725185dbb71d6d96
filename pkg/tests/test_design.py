"""Block system tests.

Frozen values (the three block examples, the census, the case
certificates) were derived once by enumeration and pinned; the
enumeration oracles that derived them run alongside, so a regression
breaks both the pin and the oracle comparison.
"""

import itertools
import random
from collections import Counter

import pytest

from witt12.design import (
    ConicExterior,
    LinePairMinusU,
    SymmetricDifference,
    block_of_form,
    block_through,
    classify_block,
    construct,
    rederive_block,
    solve_block_through,
)
from witt12.plane import PLANE
from witt12.quadrics import QuadraticForm, form_pair_representatives
from witt12.symmetry import all_collineations

EXPECTED_CENSUS = {
    ConicExterior: 54,
    SymmetricDifference: 36,
    LinePairMinusU: 42,
}


def test_frozen_block_examples(model):
    q = QuadraticForm.of(1, 0, 0, 1, 0, 1)
    assert block_of_form(q, model.u) == (2, 3, 5, 6, 7, 10)
    assert block_of_form(QuadraticForm.of(0, 0, 0, 1, 0, 2), model.u) == (
        2, 3, 8, 9, 11, 12,
    )
    assert block_of_form(QuadraticForm.of(0, 0, 0, 1, 0, 1), model.u) is None


def test_block_of_form_constant_on_pair_classes(model):
    for q in form_pair_representatives():
        assert block_of_form(q, model.u) == block_of_form(q.doubled(), model.u)


def test_model_shape(model):
    assert model.u.index == 4
    assert model.w == tuple(i for i in range(13) if i != 4)
    assert len(model.blocks) == 132
    assert list(model.blocks) == sorted(model.blocks)
    assert len(set(model.blocks)) == 132
    for b in model.blocks:
        assert len(b) == 6
        assert set(b) <= set(model.w)


def test_every_five_subset_covered_exactly_once(model):
    cover = Counter(
        sub for b in model.blocks for sub in itertools.combinations(b, 5)
    )
    assert len(cover) == 792
    assert set(cover.values()) == {1}
    for sub, k in model.five_subset_block.items():
        assert sub <= set(model.blocks[k])


def test_census(model):
    got = Counter(type(c) for c in model.classes)
    assert got == EXPECTED_CENSUS


def test_every_witness_rederives_its_block(model):
    for b, cls_ in zip(model.blocks, model.classes):
        assert rederive_block(cls_, model.u) == b


def test_classify_frozen_examples(model):
    c = classify_block(model, (2, 3, 5, 6, 7, 10))
    assert isinstance(c, ConicExterior)
    assert c.form.coeffs == (1, 0, 0, 1, 0, 1)

    s = classify_block(model, (7, 8, 9, 10, 11, 12))
    assert isinstance(s, SymmetricDifference)
    assert tuple(ln.dual for ln in s.lines) == ((1, 1, 0), (1, 2, 0))

    lp = classify_block(model, (2, 3, 8, 9, 11, 12))
    assert isinstance(lp, LinePairMinusU)
    assert tuple(ln.dual for ln in lp.lines) == ((0, 1, 1), (0, 1, 2))


def test_classify_rejects_non_blocks(model):
    # (0,1,2,3,5) extends uniquely to a block, and not by the point 7
    b = block_through(model, (0, 1, 2, 3, 5))
    assert 7 not in b
    with pytest.raises(ValueError):
        classify_block(model, (0, 1, 2, 3, 5, 7))


def test_rederive_rejects_corrupt_witnesses(model):
    with pytest.raises(ValueError):
        rederive_block(ConicExterior(QuadraticForm.of(1, 0, 0, 1, 0, 0)), model.u)
    ln = PLANE.lines[7]
    with pytest.raises(ValueError):
        rederive_block(LinePairMinusU((ln, ln)), model.u)
    with pytest.raises(ValueError):
        rederive_block(SymmetricDifference((ln, ln)), model.u)
    with pytest.raises(ValueError):
        # lines through U cannot witness a symmetric difference block
        rederive_block(SymmetricDifference((PLANE.lines[0], PLANE.lines[1])), model.u)


def test_block_through_validation(model):
    with pytest.raises(ValueError):
        block_through(model, (2, 3, 5, 6))
    with pytest.raises(ValueError):
        block_through(model, (2, 3, 5, 6, 6))
    with pytest.raises(ValueError):
        block_through(model, (2, 3, 5, 6, 4))  # contains U
    with pytest.raises(ValueError):
        block_through(model, (2, 3, 5, 6, 13))


def test_solver_frozen_examples(model):
    a = solve_block_through((2, 3, 5, 6, 7))
    assert a.case == "A"
    assert a.block == (2, 3, 5, 6, 7, 10)
    assert a.determinant != 0
    assert a.dimension == 1

    b = solve_block_through((2, 3, 8, 9, 11))
    assert b.case == "B"
    assert b.block == (2, 3, 8, 9, 11, 12)
    assert b.determinant == 0


def test_solver_agrees_with_lookup_everywhere(model):
    for five in itertools.combinations(model.w, 5):
        sol = solve_block_through(five, model.u)
        assert sol.block == block_through(model, five)
        cls_ = classify_block(model, sol.block)
        if isinstance(cls_, LinePairMinusU):
            assert sol.case == "B"
            assert sol.determinant == 0
        else:
            assert sol.case == "A"
            assert sol.determinant != 0
            assert sol.dimension == 1
        assert set(five) <= set(block_of_form(sol.form, model.u))


def reference_solutions(five, u):
    """All nonzero coefficient tuples solving the five conditions, by brute force."""

    def ev(c, v):
        a00, a01, a02, a11, a12, a22 = c
        x0, x1, x2 = v
        return (
            a00 * x0 * x0 + a01 * x0 * x1 + a02 * x0 * x2
            + a11 * x1 * x1 + a12 * x1 * x2 + a22 * x2 * x2
        ) % 3

    out = set()
    for c in itertools.product(range(3), repeat=6):
        if not any(c):
            continue
        uu = ev(c, u.rep)
        if all(ev(c, PLANE.points[i].rep) == (2 * uu) % 3 for i in five):
            out.add(c)
    return out


def test_solver_against_brute_force_enumeration(model):
    rng = random.Random(1203)
    subsets = rng.sample(list(itertools.combinations(model.w, 5)), 24)
    for five in subsets:
        sol = solve_block_through(five, model.u)
        ref = reference_solutions(five, model.u)
        assert len(ref) == 3**sol.dimension - 1
        assert sol.form.coeffs in ref


def test_alternate_removed_point_gives_isomorphic_design(model):
    other = construct(PLANE.points[0])
    assert other.u.index == 0
    assert len(other.blocks) == 132
    assert Counter(type(c) for c in other.classes) == EXPECTED_CENSUS
    assert other.blocks != model.blocks
    carrier = next(
        c for c in all_collineations(PLANE) if c.apply_point(model.u).index == 0
    )
    pm = carrier.point_map()
    mapped = {tuple(sorted(pm[x] for x in b)) for b in model.blocks}
    assert mapped == set(other.blocks)
