"""DOT rendering of the Hasse diagram of a closure system."""

from __future__ import annotations

from .closure import ClosureSystem
from .errors import CapacityError
from .formats import format_atom_set

#: Diagram sanity cap; larger lattices are unreadable as graphs anyway.
MAX_DOT_ELEMENTS = 500


def cover_pairs(cs: ClosureSystem) -> list[tuple[int, int]]:
    """Cover relation as (lower id, upper id) pairs, sorted."""
    out = []
    for j, b in enumerate(cs.masks):
        # maximal strict subsets of b are exactly the elements b covers
        subs = [(i, a) for i, a in enumerate(cs.masks) if a != b and a & ~b == 0]
        for i, a in subs:
            if not any(a != c and a & ~c == 0 for _, c in subs):
                out.append((i, j))
    return out


def export_dot(cs: ClosureSystem, labels: tuple[str, ...], *,
               max_elements: int = MAX_DOT_ELEMENTS) -> str:
    """Hasse diagram in DOT, elements ranked by cardinality, bottom-up."""
    if len(cs) > max_elements:
        raise CapacityError(
            f"{len(cs)} elements exceed the diagram cap of {max_elements}")
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for i, m in enumerate(cs.masks):
        lines.append(f'  n{i} [label="{format_atom_set(m, labels)}"];')
    by_card: dict[int, list[int]] = {}
    for i, m in enumerate(cs.masks):
        by_card.setdefault(m.bit_count(), []).append(i)
    for card in sorted(by_card):
        members = " ".join(f"n{i};" for i in by_card[card])
        lines.append(f"  {{ rank=same; {members} }}")
    for i, j in cover_pairs(cs):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
