"""Separated and minimal products, and the rectangle description."""

import pytest

import orthlab as O
from orthlab.errors import CapacityError, InvalidInstanceError
from orthlab.products import (
    cylinder1_mask,
    cylinder2_mask,
    pair_index,
    pair_labels,
    product_orthogonality,
    project1_mask,
    project2_mask,
    rectangle_family,
)

import oracles as ora


def _pairs_of(mask: int, n2: int) -> frozenset:
    return frozenset((k // n2, k % n2) for k in ora.mask_to_set(mask))


def _family_pairs(masks, n2: int) -> set:
    return {_pairs_of(m, n2) for m in masks}


# ---------------------------------------------------------------------------
# index plumbing

def test_pair_indexing_and_labels():
    assert pair_index(1, 2, 3) == 5
    assert pair_labels(("a", "b"), ("x", "y")) == ("(a,x)", "(a,y)", "(b,x)", "(b,y)")


def test_cylinders_and_projections():
    # n1=2, n2=3; F = {0}, G = {1, 2}
    c1 = cylinder1_mask(0b01, 2, 3)
    c2 = cylinder2_mask(0b110, 2, 3)
    assert ora.mask_to_set(c1) == {0, 1, 2}
    assert ora.mask_to_set(c2) == {1, 2, 4, 5}
    rect = c1 & c2
    assert _pairs_of(rect, 3) == {(0, 1), (0, 2)}
    assert project1_mask(rect, 2, 3) == 0b01
    assert project2_mask(rect, 2, 3) == 0b110


# ---------------------------------------------------------------------------
# product orthogonality

def test_product_orthogonality_matches_oracle(mo2, b2):
    o = product_orthogonality(mo2.orth, b2.orth)
    expected = ora.product_orth(ora.rows_to_dict(mo2.orth.rows),
                                ora.rows_to_dict(b2.orth.rows))
    n2 = b2.n
    for k in range(o.n):
        got = {(r // n2, r % n2) for r in ora.mask_to_set(o.rows[k])}
        assert got == expected[(k // n2, k % n2)]


def test_product_orthogonality_capacity():
    big = O.boolean_space(9)
    with pytest.raises(CapacityError):
        product_orthogonality(big.orth, big.orth)


# ---------------------------------------------------------------------------
# separated product

def test_separated_square_of_two_points_is_the_four_point_space(b2):
    sep = O.separated_product(b2, b2)
    assert sep.labels == ("(a,a)", "(a,b)", "(b,a)", "(b,b)")
    assert sep.orth.rows == O.boolean_space(4).orth.rows


def test_separated_product_is_valid_on_random_factors(random_batch):
    for ss1, ss2 in zip(random_batch[:8], random_batch[8:16]):
        if ss1.n * ss2.n > 16:
            continue
        sep = O.separated_product(ss1, ss2)
        assert O.validate_state_space(sep).ok


def test_separated_product_requires_valid_factors(b2):
    bad = O.StateSpace(("x", "y", "z"),
                       O.OrthoRelation.from_pairs(3, [(0, 2), (1, 2)]))
    with pytest.raises(InvalidInstanceError):
        O.separated_product(bad, b2)


def test_separated_lantern_square_lattice_size(mo2):
    ppl = O.property_lattice(O.separated_product(mo2, mo2))
    assert len(ppl.cs) == 114


# ---------------------------------------------------------------------------
# minimal product

def test_minimal_product_of_two_squares_frozen_family(b2_ppl):
    prod = O.minimal_product(b2_ppl, b2_ppl)
    assert prod.labels == ("(a,a)", "(a,b)", "(b,a)", "(b,b)")
    assert prod.cs.masks == (
        0b0000, 0b0001, 0b0010, 0b0100, 0b1000,
        0b0011, 0b0101, 0b1010, 0b1100, 0b1111)


def test_minimal_product_lantern_times_square_size(mo2_ppl, b2_ppl):
    assert len(O.minimal_product(mo2_ppl, b2_ppl).cs) == 16


def test_one_point_factor_is_neutral(b1_ppl, mo2_ppl):
    prod = O.minimal_product(b1_ppl, mo2_ppl)
    assert prod.cs.masks == mo2_ppl.cs.masks
    assert prod.labels == ("(a,a1)", "(a,a2)", "(a,b1)", "(a,b2)")
    assert prod.orth.rows == mo2_ppl.orth.rows


def test_minimal_product_atoms_are_pair_singletons(mo2_ppl, b2_ppl):
    prod = O.minimal_product(mo2_ppl, b2_ppl)
    assert [e.atoms.bits for e in prod.cs.atoms()] == [1 << k for k in range(8)]
    assert prod.validate().ok


def test_minimal_product_requires_valid_factors(mo2_ppl):
    broken = O.PPL(O.ClosureSystem.from_masks(2, [0b00, 0b11]),
                   O.OrthoRelation.from_pairs(2, [(0, 1)]), ("a", "b"))
    with pytest.raises(InvalidInstanceError):
        O.minimal_product(broken, mo2_ppl)


def test_minimal_product_capacity():
    b8 = O.property_lattice(O.boolean_space(8))
    b9 = O.property_lattice(O.boolean_space(9))
    with pytest.raises(CapacityError):
        O.minimal_product(b8, b9)


# ---------------------------------------------------------------------------
# the rectangle description of the product family

@pytest.mark.parametrize("name1,name2", [
    ("b2", "b2"), ("b2", "b3"), ("mo2", "b2"), ("mo2", "mo2"), ("b1", "mo3"),
])
def test_minimal_product_family_is_the_rectangle_family(name1, name2, request):
    ppl1 = request.getfixturevalue(name1 + "_ppl")
    ppl2 = request.getfixturevalue(name2 + "_ppl")
    prod = O.minimal_product(ppl1, ppl2)
    rect = rectangle_family(ppl1.cs, ppl2.cs)
    assert prod.cs.masks == rect.masks

    expected = ora.rectangles(ora.family_to_sets(ppl1.cs.masks),
                              ora.family_to_sets(ppl2.cs.masks))
    assert _family_pairs(prod.cs.masks, ppl2.n) == expected

    fast = O.minimal_product(ppl1, ppl2, via_rectangles=True)
    assert fast.cs.masks == prod.cs.masks
    assert fast.orth.rows == prod.orth.rows


def test_projections_of_closed_sets_are_closed(mo2_ppl, b3_ppl):
    prod = O.minimal_product(mo2_ppl, b3_ppl)
    n1, n2 = mo2_ppl.n, b3_ppl.n
    for m in prod.cs.masks:
        if m == 0:
            continue
        assert project1_mask(m, n1, n2) in mo2_ppl.cs
        assert project2_mask(m, n1, n2) in b3_ppl.cs
