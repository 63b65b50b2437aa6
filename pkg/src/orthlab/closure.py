"""Intersection-closed set families ("Moore families") over a finite ground set.

A :class:`ClosureSystem` stores every closed set as a bit mask, in a
canonical order (cardinality, then mask value).  Meets are intersections;
joins go through the closure operator (smallest closed superset).  The
family generated by arbitrary sets is computed by :func:`meet_closure`.

:class:`AbstractLattice` is the extensional counterpart: a finite lattice
given only by its order matrix.  :func:`closure_space_of` turns an
atomistic one back into the closure system of its atom supports.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .bitset import GROUND_CAPACITY, AtomSet, canonical_key, mask_bits
from .errors import CapacityError, NotALatticeError, NotAtomisticError

#: Default cap on family size for generated closure systems.
DEFAULT_FAMILY_CAP = 1_000_000

# Above this many closed sets, bulk permutation checks switch to numpy.
_NUMPY_THRESHOLD = 2048


@dataclass(frozen=True)
class LatticeElement:
    """A closed set together with its position in the canonical order."""

    id: int
    atoms: AtomSet


@dataclass(frozen=True)
class ClosureSystem:
    """An intersection-closed family containing the full ground set.

    ``masks`` is strictly increasing under the canonical key, deduplicated,
    and always contains the full set.  Builders are responsible for actual
    intersection-closedness; :meth:`intersection_defect` re-checks it
    exhaustively when wanted.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground set must have at least one atom")
        if self.n > GROUND_CAPACITY:
            raise CapacityError(f"ground set of {self.n} atoms exceeds capacity {GROUND_CAPACITY}")
        full = (1 << self.n) - 1
        keys = [canonical_key(m) for m in self.masks]
        if keys != sorted(set(keys)):
            raise ValueError("masks must be unique and canonically ordered")
        for m in self.masks:
            if m < 0 or m >> self.n:
                raise ValueError(f"mask 0x{m:x} out of range for n={self.n}")
        if not self.masks or self.masks[-1] != full:
            raise ValueError("family must contain the full ground set")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "ClosureSystem":
        return cls(n, tuple(sorted(set(masks), key=canonical_key)))

    @classmethod
    def from_atomsets(cls, n: int, sets: Iterable[AtomSet]) -> "ClosureSystem":
        return cls.from_masks(n, (s.bits for s in sets))

    # -- derived structure ------------------------------------------------

    @cached_property
    def _index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.masks)}

    @cached_property
    def _cards(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.masks)

    @cached_property
    def _value_sorted(self) -> np.ndarray:
        return np.sort(np.array(self.masks, dtype=np.uint64))

    @cached_property
    def closed(self) -> tuple[AtomSet, ...]:
        return tuple(AtomSet(m, self.n) for m in self.masks)

    @cached_property
    def is_t1(self) -> bool:
        """Does the family contain the empty set and every singleton?"""
        idx = self._index
        return 0 in idx and all((1 << p) in idx for p in range(self.n))

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, item) -> bool:
        mask = item.bits if isinstance(item, AtomSet) else item
        return mask in self._index

    def id_of(self, item) -> int:
        mask = item.bits if isinstance(item, AtomSet) else item
        return self._index[mask]

    def element(self, i: int) -> LatticeElement:
        return LatticeElement(i, AtomSet(self.masks[i], self.n))

    def elements(self) -> Iterator[LatticeElement]:
        for i in range(len(self.masks)):
            yield self.element(i)

    @property
    def bottom_id(self) -> int:
        return 0

    @property
    def top_id(self) -> int:
        return len(self.masks) - 1

    # -- lattice operations -----------------------------------------------

    def closure_mask(self, mask: int) -> int:
        """Smallest closed superset of ``mask``.

        The canonical order makes the first superset encountered the
        smallest one: the intersection of all closed supersets is itself a
        closed superset of minimal cardinality, and a distinct set of the
        same cardinality cannot contain it.
        """
        if mask in self._index:
            return mask
        start = bisect_left(self._cards, mask.bit_count())
        for m in self.masks[start:]:
            if mask & ~m == 0:
                return m
        raise AssertionError("full set is always a closed superset")  # pragma: no cover

    def meet_mask(self, a: int, b: int) -> int:
        return a & b

    def join_mask(self, a: int, b: int) -> int:
        return self.closure_mask(a | b)

    def meet(self, a: LatticeElement, b: LatticeElement) -> LatticeElement:
        return self.element(self.id_of(a.atoms.bits & b.atoms.bits))

    def join(self, a: LatticeElement, b: LatticeElement) -> LatticeElement:
        return self.element(self.id_of(self.join_mask(a.atoms.bits, b.atoms.bits)))

    def le(self, a: LatticeElement, b: LatticeElement) -> bool:
        return a.atoms.issubset(b.atoms)

    def covers(self, a: LatticeElement, b: LatticeElement) -> bool:
        """True iff ``b`` covers ``a``: a < b with nothing strictly between."""
        am, bm = a.atoms.bits, b.atoms.bits
        if am == bm or am & ~bm:
            return False
        return self._between(am, bm) is None

    def _between(self, am: int, bm: int) -> int | None:
        """First closed set strictly between ``am`` and ``bm``, else None."""
        start = bisect_left(self._cards, am.bit_count())
        stop = bisect_left(self._cards, bm.bit_count() + 1)
        for m in self.masks[start:stop]:
            if m != am and m != bm and am & ~m == 0 and m & ~bm == 0:
                return m
        return None

    def atoms(self) -> list[LatticeElement]:
        """Minimal nonempty closed sets; for a T1 family, the singletons."""
        mins: list[int] = []
        out: list[LatticeElement] = []
        for i, m in enumerate(self.masks):
            if m == 0:
                continue
            if any(x & m == x for x in mins):
                continue
            mins.append(m)
            out.append(self.element(i))
        return out

    def lattice_atoms(self) -> list[LatticeElement]:
        """Elements covering the bottom element (the order-theoretic atoms)."""
        bottom = self.masks[0]
        mins: list[int] = []
        out: list[LatticeElement] = []
        for i, m in enumerate(self.masks):
            if m == bottom:
                continue
            if any(x & m == x for x in mins):
                continue
            mins.append(m)
            out.append(self.element(i))
        return out

    # -- whole-family checks ----------------------------------------------

    def intersection_defect(self) -> tuple[int, int] | None:
        """Exhaustive pairwise check; first (F, G) with F & G missing, else None."""
        idx = self._index
        for i, a in enumerate(self.masks):
            for b in self.masks[i + 1:]:
                if a & b not in idx:
                    return (a, b)
        return None

    def permutation_failure(self, perm: Sequence[int]) -> int | None:
        """First closed mask whose image under the atom permutation leaves the family.

        Checking one direction suffices for "closed both ways": the image map
        is injective on a finite family, so if every image is a member the
        family maps onto itself.
        """
        if len(self.masks) >= _NUMPY_THRESHOLD:
            arr = self._value_sorted
            out = np.zeros_like(arr)
            one = np.uint64(1)
            for i, t in enumerate(perm):
                out |= ((arr >> np.uint64(i)) & one) << np.uint64(t)
            out.sort()
            if np.array_equal(out, arr):
                return None
        tbl = [1 << t for t in perm]
        idx = self._index
        for m in self.masks:
            img = 0
            for i in mask_bits(m):
                img |= tbl[i]
            if img not in idx:
                return m
        return None

    def maps_onto_itself(self, perm: Sequence[int]) -> bool:
        return self.permutation_failure(perm) is None


def meet_closure(generators: Sequence[AtomSet], n: int, *,
                 max_family: int = DEFAULT_FAMILY_CAP) -> ClosureSystem:
    """Smallest intersection-closed family containing ``generators`` and the full set.

    Generators are folded in one at a time; after step k the family holds
    every intersection of a subset of the first k generators (plus the full
    set), which is exactly the generated family and costs O(len(result))
    work per generator instead of a 2**n scan.
    """
    for g in generators:
        if g.n != n:
            raise ValueError(f"generator universe {g.n} does not match n={n}")
    return _meet_closure_masks([g.bits for g in generators], n, max_family=max_family)


def _meet_closure_masks(gen_masks: Iterable[int], n: int, *,
                        max_family: int = DEFAULT_FAMILY_CAP) -> ClosureSystem:
    family = {(1 << n) - 1}
    for g in gen_masks:
        family |= {m & g for m in family}
        if len(family) > max_family:
            raise CapacityError(
                f"closure family exceeds cap of {max_family} sets")
    return ClosureSystem.from_masks(n, family)


class AbstractLattice:
    """A finite lattice given extensionally by its order matrix.

    ``le[i, j]`` is True iff element i is below element j.  Nothing is
    assumed up front; :meth:`order_defect` and the bound tables report
    exactly what breaks.
    """

    def __init__(self, le):
        arr = np.array(le, dtype=bool)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("order matrix must be square")
        if arr.shape[0] < 1:
            raise ValueError("lattice must be nonempty")
        arr.setflags(write=False)
        self.le = arr
        self.m = arr.shape[0]

    @classmethod
    def from_closure_system(cls, cs: ClosureSystem) -> "AbstractLattice":
        m = len(cs.masks)
        le = np.zeros((m, m), dtype=bool)
        for i, a in enumerate(cs.masks):
            for j, b in enumerate(cs.masks):
                le[i, j] = a & ~b == 0
        return cls(le)

    def order_defect(self) -> str | None:
        le = self.le
        if not le.diagonal().all():
            i = int(np.flatnonzero(~le.diagonal())[0])
            return f"not reflexive at element {i}"
        both = (le & le.T).copy()
        np.fill_diagonal(both, False)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            return f"not antisymmetric: {i} <= {j} <= {i}"
        closed = (le.astype(np.uint8) @ le.astype(np.uint8)) > 0
        gap = closed & ~le
        if gap.any():
            i, j = map(int, np.argwhere(gap)[0])
            return f"not transitive: {i} <= ... <= {j} but not {i} <= {j}"
        return None

    def _least_of(self, member_mask: np.ndarray) -> int | None:
        """Index of the least element of a subset, or None if there is none."""
        for k in np.flatnonzero(member_mask):
            if (self.le[k] | ~member_mask).all():
                return int(k)
        return None

    @cached_property
    def join_table(self) -> np.ndarray:
        out = np.empty((self.m, self.m), dtype=np.int64)
        for i in range(self.m):
            for j in range(i, self.m):
                ub = self.le[i] & self.le[j]
                k = self._least_of(ub)
                if k is None:
                    raise NotALatticeError(f"elements {i} and {j} have no least upper bound")
                out[i, j] = out[j, i] = k
        return out

    @cached_property
    def meet_table(self) -> np.ndarray:
        out = np.empty((self.m, self.m), dtype=np.int64)
        for i in range(self.m):
            for j in range(i, self.m):
                lb = self.le[:, i] & self.le[:, j]
                # greatest lower bound: dual of _least_of
                k = None
                for c in np.flatnonzero(lb):
                    if (self.le[:, c] | ~lb).all():
                        k = int(c)
                        break
                if k is None:
                    raise NotALatticeError(f"elements {i} and {j} have no greatest lower bound")
                out[i, j] = out[j, i] = k
        return out

    @cached_property
    def bottom(self) -> int:
        for i in range(self.m):
            if self.le[i].all():
                return i
        raise NotALatticeError("no bottom element")

    @cached_property
    def lattice_atoms(self) -> tuple[int, ...]:
        bot = self.bottom
        atoms = []
        for x in range(self.m):
            if x == bot:
                continue
            if not any(y != bot and y != x and self.le[y, x] for y in range(self.m)):
                atoms.append(x)
        return tuple(atoms)

    def join_all(self, xs: Iterable[int]) -> int:
        jt = self.join_table
        acc = self.bottom
        for x in xs:
            acc = int(jt[acc, x])
        return acc


def closure_space_of(lat: AbstractLattice) -> ClosureSystem:
    """Closure system of atom supports of an atomistic lattice.

    A subset F of the atoms is closed iff every atom below the join of F
    already lies in F; those subsets are exactly the atom supports
    ``{atoms below x}`` of lattice elements, which is what gets built.
    Raises :class:`NotALatticeError` / :class:`NotAtomisticError` otherwise.
    """
    defect = lat.order_defect()
    if defect is not None:
        raise NotALatticeError(defect)
    lat.meet_table  # existence check for meets
    atoms = lat.lattice_atoms
    k = len(atoms)
    pos = {a: i for i, a in enumerate(atoms)}
    masks = []
    for x in range(lat.m):
        below = [a for a in atoms if lat.le[a, x]]
        if lat.join_all(below) != x:
            raise NotAtomisticError(x)
        mask = 0
        for a in below:
            mask |= 1 << pos[a]
        masks.append(mask)
    if len(set(masks)) != lat.m:  # pragma: no cover - excluded by atomisticity
        raise NotALatticeError("atom supports are not distinct")
    if k == 0:
        raise ValueError("one-element lattice has no atoms; empty ground sets are unsupported")
    return ClosureSystem.from_masks(k, masks)
