"""Lattice axiom checkers returning pass verdicts or replayable certificates.

Each checker scans elements in the canonical order, so the first
counterexample found is deterministic.  Certificates carry the element
ids and atom sets involved; replaying one against the same instance must
reproduce the violation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Union

from .bitset import AtomSet, mask_bits
from .closure import ClosureSystem, LatticeElement
from .statespace import PPL


@dataclass(frozen=True)
class CheckStats:
    checked: int
    seconds: float


@dataclass(frozen=True)
class Certificate:
    """Structured counterexample: named parts, each an element or a raw set."""

    kind: str
    parts: tuple[tuple[str, Union[LatticeElement, AtomSet]], ...]

    def part(self, name: str):
        for k, v in self.parts:
            if k == name:
                return v
        raise KeyError(name)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    holds: bool
    certificate: Certificate | None
    stats: CheckStats


@dataclass(frozen=True)
class Orthocomplementation:
    """An involutive order-reversing complement, as a map on element ids."""

    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]


def _timed(axiom: str, holds: bool, cert: Certificate | None, checked: int,
           t0: float) -> AxiomReport:
    return AxiomReport(axiom, holds, cert, CheckStats(checked, time.perf_counter() - t0))


def find_compatible_orthocomplementation(ppl: PPL) -> Orthocomplementation | Certificate:
    """The unique candidate complement compatible with the orthogonality, if any.

    Compatibility (p orthogonal to q iff p lies below the complement of q)
    forces the complement of an atom to be the closed set holding exactly
    its perp row, and order reversal plus involution then force every
    element to the perp of its atom set.  Builds that candidate and checks
    the complement axioms; any missing set or failed law is returned as an
    impossibility certificate.
    """
    ppl.require_valid()
    cs, o = ppl.cs, ppl.orth
    idx = cs._index
    sing = {}
    for q in range(o.n):
        req = o.rows[q]
        if req not in idx:
            return Certificate("atom-row-not-closed", (
                ("atom", cs.element(idx[1 << q])),
                ("required", AtomSet(req, o.n)),
            ))
        sing[q] = idx[req]
    mapping = []
    for i, m in enumerate(cs.masks):
        pm = o.perp_mask(m)
        if pm not in idx:
            return Certificate("perp-not-closed", (
                ("element", cs.element(i)),
                ("required", AtomSet(pm, o.n)),
            ))
        mapping.append(idx[pm])
    oc = Orthocomplementation(tuple(mapping))

    for i in range(len(cs)):
        if mapping[mapping[i]] != i:
            return Certificate("not-involutive", (
                ("element", cs.element(i)),
                ("image", cs.element(mapping[i])),
                ("double-image", cs.element(mapping[mapping[i]])),
            ))
    for i, a in enumerate(cs.masks):
        for j, b in enumerate(cs.masks):
            if a & ~b == 0 and cs.masks[mapping[j]] & ~cs.masks[mapping[i]] != 0:
                return Certificate("not-order-reversing", (
                    ("lower", cs.element(i)),
                    ("upper", cs.element(j)),
                ))
    bottom, top = cs.masks[0], cs.masks[-1]
    for i, m in enumerate(cs.masks):
        cm = cs.masks[mapping[i]]
        if m & cm != bottom or ppl.join_mask(m | cm) != top:
            return Certificate("complement-law", (
                ("element", cs.element(i)),
                ("image", cs.element(mapping[i])),
            ))
    for p in range(o.n):
        for q in range(o.n):
            if o.orthogonal(p, q) != ((cs.masks[sing[q]] >> p) & 1 == 1):
                return Certificate("atom-compatibility", (
                    ("p", cs.element(sing_id(cs, p))),
                    ("q", cs.element(sing_id(cs, q))),
                ))
    return oc


def sing_id(cs: ClosureSystem, atom: int) -> int:
    """Element id of an atom's singleton (requires a T1 family)."""
    return cs._index[1 << atom]


def check_orthomodular(ppl: PPL, oc: Orthocomplementation) -> AxiomReport:
    """For every a below b, does joining a with (b meet a') give back b?"""
    t0 = time.perf_counter()
    cs = ppl.cs
    masks = cs.masks
    checked = 0
    for i, a in enumerate(masks):
        oca = masks[oc(i)]
        for j, b in enumerate(masks):
            if a & ~b:
                continue
            checked += 1
            if ppl.join_mask(a | (b & oca)) != b:
                cert = Certificate("orthomodularity", (
                    ("a", cs.element(i)),
                    ("b", cs.element(j)),
                    ("rebuilt", AtomSet(ppl.join_mask(a | (b & oca)), cs.n)),
                ))
                return _timed("orthomodular", False, cert, checked, t0)
    return _timed("orthomodular", True, None, checked, t0)


def check_covering_law(cs: ClosureSystem) -> AxiomReport:
    """Whenever an atom p misses an element a, must a join p cover a?

    Atoms here are the covers of the bottom element.  The scan runs
    element-major (each a against every disjoint atom), and the first
    strictly-intermediate element in canonical order is reported.
    """
    t0 = time.perf_counter()
    bottom = cs.masks[0]
    atoms = cs.lattice_atoms()
    checked = 0
    for i, a in enumerate(cs.masks):
        for p in atoms:
            pm = p.atoms.bits
            if a & pm != bottom:
                continue
            checked += 1
            j = cs.closure_mask(a | pm)
            between = cs._between(a, j)
            if between is not None:
                cert = Certificate("covering-law", (
                    ("p", p),
                    ("a", cs.element(i)),
                    ("join", cs.element(cs.id_of(j))),
                    ("between", cs.element(cs.id_of(between))),
                ))
                return _timed("covering", False, cert, checked, t0)
    return _timed("covering", True, None, checked, t0)


def check_boolean(cs: ClosureSystem, oc: Orthocomplementation) -> AxiomReport:
    """Distributivity over all element triples (the complement is given)."""
    t0 = time.perf_counter()
    masks = cs.masks
    join = {}

    def jn(a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        got = join.get(key)
        if got is None:
            got = join[key] = cs.closure_mask(a | b)
        return got

    checked = 0
    for i, x in enumerate(masks):
        for j, y in enumerate(masks):
            for k, z in enumerate(masks):
                checked += 1
                if x & jn(y, z) != jn(x & y, x & z) or jn(x, y & z) != jn(x, y) & jn(x, z):
                    cert = Certificate("distributivity", (
                        ("x", cs.element(i)),
                        ("y", cs.element(j)),
                        ("z", cs.element(k)),
                    ))
                    return _timed("boolean", False, cert, checked, t0)
    return _timed("boolean", True, None, checked, t0)


def check_irreducible(ppl: PPL, oc: Orthocomplementation) -> AxiomReport:
    """Are bottom and top the only central elements?

    z is central when every element F decomposes as
    (F meet z) join (F meet z'); a nontrivial central element is the
    certificate (the lattice then splits as a product).
    """
    t0 = time.perf_counter()
    cs = ppl.cs
    masks = cs.masks
    checked = 0
    for i, z in enumerate(masks):
        if i == cs.bottom_id or i == cs.top_id:
            continue
        zc = masks[oc(i)]
        central = True
        for f in masks:
            checked += 1
            if ppl.join_mask((f & z) | (f & zc)) != f:
                central = False
                break
        if central:
            cert = Certificate("central-element", (("z", cs.element(i)),))
            return _timed("irreducible", False, cert, checked, t0)
    return _timed("irreducible", True, None, checked, t0)


def check_trivial(cs: ClosureSystem) -> bool:
    """True iff the lattice has at most two elements."""
    return len(cs) <= 2
