"""Symmetries of a ppl and plane-transitivity search.

A symmetry is an atom permutation that maps closed sets to closed sets
in both directions and preserves orthogonality in both directions.  The
enumerator backtracks over atom images in lexicographic order, pruning on
per-atom invariants (orthogonality degree and closed-set membership
profile) and on partial orthogonality consistency; completed assignments
are verified against the whole closed family before being emitted.

A plane witness for (p, q) is a symmetry carrying p to q while fixing,
atom by atom, the join of two distinct atoms.  Searches are budgeted:
running out raises :class:`BudgetExceededError`, which is an "unknown"
outcome, never a negative one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .bitset import AtomSet, mask_bits
from .errors import BudgetExceededError, InvariantViolationError
from .statespace import PPL

#: Default node budget per search query.
DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class Symmetry:
    """An atom permutation, image-listed: atom i maps to perm[i]."""

    perm: tuple[int, ...]

    def __call__(self, atom: int) -> int:
        return self.perm[atom]

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in mask_bits(mask):
            out |= 1 << self.perm[i]
        return out


@dataclass(frozen=True)
class SymmetryDefect:
    """Why a permutation fails to be a symmetry."""

    kind: str  # "orthogonality" | "closed-set"
    pair: tuple[int, int] | None = None
    mask: int | None = None


@dataclass(frozen=True)
class PlaneWitness:
    """A symmetry f with f(p) = q fixing every atom of join({p1}, {p2})."""

    p: int
    q: int
    p1: int
    p2: int
    f: Symmetry


@dataclass(frozen=True)
class PlaneTransitivityReport:
    transitive: bool
    witnesses: tuple[PlaneWitness, ...] | None = None
    failing_pair: tuple[int, int] | None = None
    note: str | None = None


class _Budget:
    """Mutable node counter; raises once the limit is spent."""

    __slots__ = ("limit", "spent")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.spent = 0

    def spend(self) -> None:
        self.spent += 1
        if self.limit is not None and self.spent > self.limit:
            raise BudgetExceededError(self.spent)


def symmetry_failure(ppl: PPL, perm: Sequence[int]) -> SymmetryDefect | None:
    """First reason ``perm`` is not a symmetry, or None if it is one."""
    n = ppl.n
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of the atoms")
    rows = ppl.orth.rows
    f = Symmetry(tuple(perm))
    for p in range(n):
        if f.image_mask(rows[p]) != rows[perm[p]]:
            for q in range(n):
                if ppl.orth.orthogonal(p, q) != ppl.orth.orthogonal(perm[p], perm[q]):
                    return SymmetryDefect("orthogonality", pair=(p, q))
            raise AssertionError("row image mismatch must show up pairwise")  # pragma: no cover
    bad = ppl.cs.permutation_failure(perm)
    if bad is not None:
        return SymmetryDefect("closed-set", mask=bad)
    return None


def is_symmetry(ppl: PPL, perm: Sequence[int]) -> bool:
    return symmetry_failure(ppl, perm) is None


def _atom_signatures(ppl: PPL) -> tuple:
    """Per-atom invariants preserved by any symmetry.

    Degree in the orthogonality relation, plus a histogram of the
    cardinalities of closed sets containing the atom.  A symmetry permutes
    the closed family preserving cardinality, so both are invariant.
    """
    n = ppl.n
    prof: list[dict[int, int]] = [dict() for _ in range(n)]
    for m in ppl.cs.masks:
        c = m.bit_count()
        for p in mask_bits(m):
            prof[p][c] = prof[p].get(c, 0) + 1
    return tuple(
        (ppl.orth.rows[p].bit_count(), tuple(sorted(prof[p].items())))
        for p in range(n)
    )


def _backtrack(ppl: PPL, pins: dict[int, int], budget: _Budget,
               sigs: tuple | None = None) -> Iterator[tuple[int, ...]]:
    """All symmetries consistent with ``pins``, in lexicographic order."""
    n = ppl.n
    rows = ppl.orth.rows
    if sigs is None:
        sigs = _atom_signatures(ppl)
    if len(set(pins.values())) != len(pins):
        return
    for p, q in pins.items():
        if sigs[p] != sigs[q]:
            return
    by_sig: dict = {}
    for q in range(n):
        by_sig.setdefault(sigs[q], []).append(q)

    perm = [-1] * n
    used = 0

    def descend(pos: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if pos == n:
            if ppl.cs.permutation_failure(perm) is None:
                yield tuple(perm)
            return
        assigned = (1 << pos) - 1
        req = 0
        for p in mask_bits(rows[pos] & assigned):
            req |= 1 << perm[p]
        pinned = pins.get(pos)
        cands = (pinned,) if pinned is not None else by_sig[sigs[pos]]
        for q in cands:
            budget.spend()
            if (used >> q) & 1:
                continue
            if rows[q] & used != req:
                continue
            perm[pos] = q
            used |= 1 << q
            yield from descend(pos + 1)
            used ^= 1 << q
            perm[pos] = -1

    yield from descend(0)


def enumerate_symmetries(ppl: PPL, budget: int | None = DEFAULT_BUDGET) -> Iterator[Symmetry]:
    """Every symmetry exactly once, in lexicographic order of the image tuple.

    Raises :class:`BudgetExceededError` mid-stream if the node budget runs
    out; results already yielded are valid but the enumeration is partial.
    """
    b = _Budget(budget)
    for perm in _backtrack(ppl, {}, b):
        yield Symmetry(perm)


def count_symmetries(ppl: PPL, budget: int | None = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in enumerate_symmetries(ppl, budget))


def find_plane_symmetry(ppl: PPL, p: int, q: int,
                        budget: int | None = DEFAULT_BUDGET) -> PlaneWitness | None:
    """First plane witness mapping p to q, scanning planes in canonical order.

    The budget is shared across all candidate planes of this (p, q) query.
    None means no witness exists; an exhausted budget raises instead.
    """
    n = ppl.n
    if not (0 <= p < n and 0 <= q < n):
        raise ValueError("atoms out of range")
    if n < 2:
        return None
    b = _Budget(budget)
    sigs = _atom_signatures(ppl)
    for p1 in range(n):
        for p2 in range(p1 + 1, n):
            plane = ppl.join_mask((1 << p1) | (1 << p2))
            pins = {a: a for a in mask_bits(plane)}
            if p in pins and q != p:
                continue
            if q in pins and p != q:
                continue  # image q is already taken by the fixed atom q
            pins[p] = q
            for perm in _backtrack(ppl, pins, b, sigs):
                return PlaneWitness(p=p, q=q, p1=p1, p2=p2, f=Symmetry(perm))
    return None


def verify_plane_witness(ppl: PPL, w: PlaneWitness) -> str | None:
    """Re-check every invariant of a plane witness; None when all hold."""
    if w.p1 == w.p2:
        return "plane atoms are not distinct"
    if sorted(w.f.perm) != list(range(ppl.n)):
        return "not a permutation"
    if w.f.perm[w.p] != w.q:
        return f"does not map {w.p} to {w.q}"
    plane = ppl.join_mask((1 << w.p1) | (1 << w.p2))
    for a in mask_bits(plane):
        if w.f.perm[a] != a:
            return f"does not fix plane atom {a}"
    defect = symmetry_failure(ppl, w.f.perm)
    if defect is not None:
        return f"not a symmetry ({defect.kind})"
    return None


def is_plane_transitive(ppl: PPL, budget: int | None = DEFAULT_BUDGET) -> PlaneTransitivityReport:
    """Search a plane witness for every ordered atom pair (fresh budget each).

    Fewer than two atoms cannot host a plane, so such ppl's are reported
    as not plane transitive with a note.
    """
    n = ppl.n
    if n < 2:
        return PlaneTransitivityReport(
            False, failing_pair=(0, 0) if n else None,
            note="fewer than two atoms: no plane exists")
    witnesses = []
    for p in range(n):
        for q in range(n):
            w = find_plane_symmetry(ppl, p, q, budget=budget)
            if w is None:
                return PlaneTransitivityReport(False, failing_pair=(p, q))
            witnesses.append(w)
    return PlaneTransitivityReport(True, witnesses=tuple(witnesses))


def product_plane_witness(w1: PlaneWitness, w2: PlaneWitness, product: PPL) -> PlaneWitness:
    """Assemble a product plane witness from factor witnesses.

    The product permutation acts coordinatewise.  The first factor's
    witness fixes its own plane atom p1, so the plane spanned by
    (p1, .) pairs over the second factor's plane is fixed pointwise.  All
    invariants are re-verified against the product; a failure there is a
    bug, not a search miss.
    """
    n1, n2 = len(w1.f.perm), len(w2.f.perm)
    if n1 * n2 != product.n:
        raise ValueError("factor witness sizes do not match the product")
    perm = tuple(w1.f.perm[i] * n2 + w2.f.perm[j]
                 for i in range(n1) for j in range(n2))
    w = PlaneWitness(
        p=w1.p * n2 + w2.p,
        q=w1.q * n2 + w2.q,
        p1=w1.p1 * n2 + w2.p1,
        p2=w1.p1 * n2 + w2.p2,
        f=Symmetry(perm),
    )
    defect = verify_plane_witness(product, w)
    if defect is not None:
        raise InvariantViolationError(f"constructed product witness invalid: {defect}")
    return w


def is_group_transitive(ppl: PPL, budget: int | None = DEFAULT_BUDGET) -> bool:
    """Can every atom be carried to every other by some symmetry?

    Finite evidence only: each ordered pair gets its own budgeted search
    for any symmetry with perm[p] = q (no plane constraint).
    """
    n = ppl.n
    sigs = _atom_signatures(ppl)
    for p in range(n):
        for q in range(n):
            if p == q:
                continue
            b = _Budget(budget)
            if next(_backtrack(ppl, {p: q}, b, sigs), None) is None:
                return False
    return True
