"""Closure systems, meets and joins, and the abstract-lattice view."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import orthlab.closure
from orthlab.bitset import AtomSet
from orthlab.closure import (
    AbstractLattice,
    ClosureSystem,
    closure_space_of,
    meet_closure,
)
from orthlab.errors import CapacityError, NotALatticeError, NotAtomisticError

from oracles import (
    covers_of_bottom,
    family_closure,
    family_join,
    family_to_sets,
    mask_to_set,
    minimal_nonempty,
    saturate_intersections,
    set_to_mask,
)


# ---------------------------------------------------------------------------
# construction and validation

def test_from_masks_canonicalizes_order_and_duplicates():
    cs = ClosureSystem.from_masks(3, [0b111, 0b011, 0b001, 0b011, 0b000])
    assert cs.masks == (0b000, 0b001, 0b011, 0b111)


def test_direct_construction_requires_canonical_order():
    with pytest.raises(ValueError):
        ClosureSystem(2, (0b11, 0b00))
    with pytest.raises(ValueError):
        ClosureSystem(2, (0b00, 0b10, 0b01, 0b11))  # same size, wrong value order


def test_family_must_contain_ground_set():
    with pytest.raises(ValueError):
        ClosureSystem.from_masks(2, [0b00, 0b01])


def test_ground_set_size_limits():
    with pytest.raises(ValueError):
        ClosureSystem.from_masks(0, [0])
    with pytest.raises(CapacityError):
        ClosureSystem.from_masks(65, [(1 << 65) - 1])


def test_mask_out_of_range():
    with pytest.raises(ValueError):
        ClosureSystem(2, (0b00, 0b11, 0b100))


# ---------------------------------------------------------------------------
# meet closure: worked examples, then oracle agreement

def test_meet_closure_of_singletons():
    gens = [AtomSet.single(i, 3) for i in range(3)]
    cs = meet_closure(gens, 3)
    assert cs.masks == (0b000, 0b001, 0b010, 0b100, 0b111)


def test_meet_closure_of_two_overlapping_pairs():
    gens = [AtomSet.of([0, 1], 3), AtomSet.of([1, 2], 3)]
    cs = meet_closure(gens, 3)
    assert cs.masks == (0b010, 0b011, 0b110, 0b111)


def test_meet_closure_of_nothing_is_just_the_ground_set():
    assert meet_closure([], 2).masks == (0b11,)


def test_meet_closure_rejects_universe_mismatch():
    with pytest.raises(ValueError):
        meet_closure([AtomSet.single(0, 3)], 4)


def test_meet_closure_family_cap():
    gens = [AtomSet.of(pair, 4) for pair in
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]]
    assert len(meet_closure(gens, 4)) == 12
    with pytest.raises(CapacityError):
        meet_closure(gens, 4, max_family=10)


families = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(0, (1 << n) - 1), max_size=8),
    )
)


@given(families)
def test_meet_closure_agrees_with_pairwise_saturation(case):
    n, gens = case
    cs = meet_closure([AtomSet(g, n) for g in gens], n)
    expected = saturate_intersections(
        {frozenset(mask_to_set(g)) for g in gens}, range(n))
    assert family_to_sets(cs.masks) == expected
    assert cs.intersection_defect() is None


# ---------------------------------------------------------------------------
# closure, meet, join against the family oracle

@given(families, st.integers(0, 63), st.integers(0, 63))
def test_closure_and_bounds_match_oracle(case, x, y):
    n, gens = case
    cs = meet_closure([AtomSet(g, n) for g in gens], n)
    full = (1 << n) - 1
    a, b = x & full, y & full
    fam = family_to_sets(cs.masks)
    cl = cs.closure_mask(a)
    assert mask_to_set(cl) == family_closure(fam, mask_to_set(a))
    assert a & ~cl == 0
    assert cs.closure_mask(cl) == cl
    ca, cb = cs.closure_mask(a), cs.closure_mask(b)
    assert mask_to_set(cs.join_mask(ca, cb)) == \
        family_join(fam, mask_to_set(ca), mask_to_set(cb))
    assert cs.meet_mask(ca, cb) == ca & cb


@given(families)
def test_atoms_and_lattice_atoms_match_oracle(case):
    n, gens = case
    cs = meet_closure([AtomSet(g, n) for g in gens], n)
    fam = family_to_sets(cs.masks)
    assert {frozenset(e.atoms) for e in cs.atoms()} == minimal_nonempty(fam)
    assert {frozenset(e.atoms) for e in cs.lattice_atoms()} == covers_of_bottom(fam)


def test_atoms_of_single_member_family_is_the_ground_set():
    cs = ClosureSystem.from_masks(2, [0b11])
    assert [e.atoms.bits for e in cs.atoms()] == [0b11]
    assert cs.lattice_atoms() == []


def test_atoms_vs_lattice_atoms_on_a_chain():
    cs = ClosureSystem.from_masks(2, [0b00, 0b01, 0b11])
    assert [e.atoms.bits for e in cs.atoms()] == [0b01]
    assert [e.atoms.bits for e in cs.lattice_atoms()] == [0b01]
    assert not cs.is_t1


def test_covers_in_a_boolean_cube(b3_ppl):
    cs = b3_ppl.cs
    bot, top = cs.element(cs.bottom_id), cs.element(cs.top_id)
    atom = cs.element(cs.id_of(0b001))
    assert cs.covers(bot, atom)
    assert not cs.covers(bot, top)
    assert not cs.covers(atom, atom)
    assert not cs.covers(top, atom)


def test_element_lookup_and_iteration(b3_ppl):
    cs = b3_ppl.cs
    assert len(cs) == 8
    assert [e.id for e in cs.elements()] == list(range(8))
    e = cs.element(3)
    assert cs.id_of(e.atoms.bits) == 3
    assert e.atoms.bits in cs
    assert cs.masks[cs.bottom_id] == 0
    assert cs.masks[cs.top_id] == 0b111


def test_intersection_defect_reports_first_missing_pair():
    cs = ClosureSystem.from_masks(2, [0b01, 0b10, 0b11])
    defect = cs.intersection_defect()
    assert defect == (0b01, 0b10)
    assert ClosureSystem.from_masks(2, [0b00, 0b01, 0b10, 0b11]).intersection_defect() is None


# ---------------------------------------------------------------------------
# permutation images of the family

def test_permutation_failure_basics():
    cs = ClosureSystem.from_masks(2, [0b00, 0b01, 0b11])
    assert cs.permutation_failure((0, 1)) is None
    assert cs.permutation_failure((1, 0)) == 0b01
    assert not cs.maps_onto_itself((1, 0))


def test_permutation_failure_vectorized_path_matches_scalar():
    # 4095 members puts this over the vectorization threshold
    masks = [m for m in range(1 << 12) if m != 5]
    cs = ClosureSystem.from_masks(12, masks)
    assert len(cs.masks) >= orthlab.closure._NUMPY_THRESHOLD
    ident = tuple(range(12))
    swap01 = (1, 0) + tuple(range(2, 12))
    assert cs.permutation_failure(ident) is None
    assert cs.permutation_failure(swap01) == 6  # its image is the missing set

    # force the scalar path on the same instance and compare
    cs2 = ClosureSystem.from_masks(12, masks)
    orig = orthlab.closure._NUMPY_THRESHOLD
    orthlab.closure._NUMPY_THRESHOLD = 10 ** 9
    try:
        assert cs2.permutation_failure(ident) is None
        assert cs2.permutation_failure(swap01) == 6
    finally:
        orthlab.closure._NUMPY_THRESHOLD = orig


# ---------------------------------------------------------------------------
# the abstract lattice view and the closure system it induces

def test_abstract_lattice_tables_match_family_ops(b3_ppl):
    cs = b3_ppl.cs
    lat = AbstractLattice.from_closure_system(cs)
    assert lat.order_defect() is None
    fam = family_to_sets(cs.masks)
    for i, a in enumerate(cs.masks):
        for j, b in enumerate(cs.masks):
            jid = int(lat.join_table[i, j])
            mid = int(lat.meet_table[i, j])
            assert cs.masks[jid] == set_to_mask(
                family_join(fam, mask_to_set(a), mask_to_set(b)))
            assert cs.masks[mid] == a & b
    assert lat.bottom == cs.bottom_id
    assert lat.lattice_atoms == tuple(e.id for e in cs.lattice_atoms())
    assert lat.join_all([]) == lat.bottom
    assert lat.join_all(lat.lattice_atoms) == cs.top_id


def test_order_defect_catches_a_broken_order():
    le = np.ones((2, 2), dtype=bool)  # 0 <= 1 and 1 <= 0: not antisymmetric
    assert AbstractLattice(le).order_defect() is not None
    le = np.eye(3, dtype=bool)
    le[0, 1] = le[1, 2] = True  # transitivity gap: 0 <= 2 missing
    assert AbstractLattice(le).order_defect() is not None


def test_join_table_raises_when_upper_bounds_have_no_least():
    # diamond-free poset: 0,1 both below 2,3 with no top
    le = np.eye(4, dtype=bool)
    for a in (0, 1):
        for b in (2, 3):
            le[a, b] = True
    lat = AbstractLattice(le)
    assert lat.order_defect() is None
    with pytest.raises(NotALatticeError):
        lat.join_table


def test_bad_matrix_shapes_are_rejected():
    with pytest.raises(ValueError):
        AbstractLattice(np.zeros((2, 3), dtype=bool))
    with pytest.raises(ValueError):
        AbstractLattice(np.zeros((0, 0), dtype=bool))


def test_closure_space_roundtrip(b3_ppl, mo2_ppl):
    for ppl in (b3_ppl, mo2_ppl):
        lat = AbstractLattice.from_closure_system(ppl.cs)
        assert closure_space_of(lat).masks == ppl.cs.masks


def test_closure_space_of_rejects_non_atomistic_lattice():
    chain = ClosureSystem.from_masks(2, [0b00, 0b01, 0b11])
    lat = AbstractLattice.from_closure_system(chain)
    with pytest.raises(NotAtomisticError):
        closure_space_of(lat)


def test_closure_space_of_rejects_one_element_lattice():
    lat = AbstractLattice(np.ones((1, 1), dtype=bool))
    with pytest.raises(ValueError):
        closure_space_of(lat)
