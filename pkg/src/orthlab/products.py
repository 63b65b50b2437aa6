"""Product constructions on state spaces and T1 closure systems.

Pairs (i, j) of factor atoms are flattened to index i * n2 + j, and the
composite label is "(x,y)".  In both products, (p1, p2) is orthogonal to
(q1, q2) iff p1 is orthogonal to q1 or p2 is orthogonal to q2.

The separated product keeps the full state-space structure (take its
property lattice for the closed sets); the minimal product closes the
cylinder extensions of factor closed sets under intersection, the
product in the category of T1 closure spaces.
"""

from __future__ import annotations

from .bitset import GROUND_CAPACITY, mask_bits
from .closure import DEFAULT_FAMILY_CAP, ClosureSystem, _meet_closure_masks
from .errors import CapacityError, InvariantViolationError
from .statespace import PPL, OrthoRelation, StateSpace


def pair_index(i: int, j: int, n2: int) -> int:
    return i * n2 + j


def pair_labels(labels1: tuple[str, ...], labels2: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(f"({a},{b})" for a in labels1 for b in labels2)


def cylinder1_mask(mask1: int, n1: int, n2: int) -> int:
    """F x Sigma2 as a mask over pair indices."""
    ones2 = (1 << n2) - 1
    out = 0
    for i in mask_bits(mask1):
        out |= ones2 << (i * n2)
    return out


def cylinder2_mask(mask2: int, n1: int, n2: int) -> int:
    """Sigma1 x G as a mask over pair indices."""
    out = 0
    for i in range(n1):
        out |= mask2 << (i * n2)
    return out


def project1_mask(mask: int, n1: int, n2: int) -> int:
    ones2 = (1 << n2) - 1
    out = 0
    for i in range(n1):
        if (mask >> (i * n2)) & ones2:
            out |= 1 << i
    return out


def project2_mask(mask: int, n1: int, n2: int) -> int:
    ones2 = (1 << n2) - 1
    out = 0
    for i in range(n1):
        out |= (mask >> (i * n2)) & ones2
    return out


def product_orthogonality(o1: OrthoRelation, o2: OrthoRelation) -> OrthoRelation:
    """Componentwise-disjunctive orthogonality on the flattened pair set."""
    n1, n2 = o1.n, o2.n
    if n1 * n2 > GROUND_CAPACITY:
        raise CapacityError(
            f"product ground set of {n1}*{n2} atoms exceeds capacity {GROUND_CAPACITY}")
    rows = []
    for p1 in range(n1):
        c1 = cylinder1_mask(o1.rows[p1], n1, n2)
        for p2 in range(n2):
            rows.append(c1 | cylinder2_mask(o2.rows[p2], n1, n2))
    return OrthoRelation(n1 * n2, tuple(rows))


def separated_product(ss1: StateSpace, ss2: StateSpace) -> StateSpace:
    """State space on the pair set with the product orthogonality.

    Separation carries over from the factors; it is re-checked anyway and
    a failure is reported as an internal invariant violation.
    """
    ss1.require_valid()
    ss2.require_valid()
    orth = product_orthogonality(ss1.orth, ss2.orth)
    out = StateSpace(pair_labels(ss1.labels, ss2.labels), orth)
    if orth.separation_failure() is not None:
        raise InvariantViolationError(
            "separated product of valid factors must be separating")
    return out


def minimal_product(ppl1: PPL, ppl2: PPL, *,
                    max_family: int = DEFAULT_FAMILY_CAP,
                    via_rectangles: bool = False) -> PPL:
    """Product of two valid ppl's in the category of T1 closure spaces.

    The closed family is generated from the cylinder extensions of the
    factor closed sets; ``via_rectangles`` switches to the direct
    rectangle construction, which tests pin down as an equal family.
    """
    ppl1.require_valid()
    ppl2.require_valid()
    n1, n2 = ppl1.n, ppl2.n
    if n1 * n2 > GROUND_CAPACITY:
        raise CapacityError(
            f"product ground set of {n1}*{n2} atoms exceeds capacity {GROUND_CAPACITY}")
    if via_rectangles:
        cs = rectangle_family(ppl1.cs, ppl2.cs, max_family=max_family)
    else:
        gens = [cylinder1_mask(m, n1, n2) for m in ppl1.cs.masks]
        gens += [cylinder2_mask(m, n1, n2) for m in ppl2.cs.masks]
        cs = _meet_closure_masks(gens, n1 * n2, max_family=max_family)
    if not cs.is_t1:
        raise InvariantViolationError("minimal product of T1 factors must be T1")
    orth = product_orthogonality(ppl1.orth, ppl2.orth)
    return PPL(cs=cs, orth=orth, labels=pair_labels(ppl1.labels, ppl2.labels))


def rectangle_family(cs1: ClosureSystem, cs2: ClosureSystem, *,
                     max_family: int = DEFAULT_FAMILY_CAP) -> ClosureSystem:
    """All products F x G of factor closed sets, empty sides collapsed."""
    n1, n2 = cs1.n, cs2.n
    if n1 * n2 > GROUND_CAPACITY:
        raise CapacityError(
            f"product ground set of {n1}*{n2} atoms exceeds capacity {GROUND_CAPACITY}")
    masks = {0}
    for f in cs1.masks:
        if f == 0:
            continue
        for g in cs2.masks:
            if g == 0:
                continue
            masks.add(cylinder1_mask(f, n1, n2) & cylinder2_mask(g, n1, n2))
            if len(masks) > max_family:
                raise CapacityError(f"closure family exceeds cap of {max_family} sets")
    return ClosureSystem.from_masks(n1 * n2, masks)
