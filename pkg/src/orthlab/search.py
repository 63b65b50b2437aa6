"""Seeded search for would-be counterexamples to the product no-go claims.

A search spec names a target predicate and a generator schedule::

    search v1
    target separated-orthomodular-nonboolean
    count 200
    nmax 4
    density 0.5
    seed 1

Instance i derives everything from one splitmix64 stream seeded with
``seed + i``: two sizes in 1..nmax, then two seeds for
:func:`orthlab.catalog.random_space`.  A hit is an instance satisfying
the target; hits carry the full serialized factor spaces so they can be
replayed, and any hit contradicts a structural claim this package is
built around.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import (Certificate, check_boolean, check_orthomodular, check_trivial,
                     find_compatible_orthocomplementation)
from .catalog import SplitMix64, random_space
from .errors import CouldNotSeparateError, ParseError
from .formats import _tokenize, serialize_statespace
from .products import minimal_product, separated_product
from .statespace import StateSpace, property_lattice


@dataclass(frozen=True)
class SearchSpec:
    target: str
    count: int
    nmax: int = 4
    density: float = 0.5
    seed: int = 1


@dataclass(frozen=True)
class InstanceResult:
    index: int
    seed: int
    n1: int
    n2: int
    status: str  # "pass" | "hit" | "invalid"
    detail: str = ""


@dataclass(frozen=True)
class Hit:
    instance: InstanceResult
    input1: str
    input2: str


@dataclass(frozen=True)
class SearchReport:
    spec: SearchSpec
    instances: tuple[InstanceResult, ...]
    hits: tuple[Hit, ...]

    @property
    def invalid(self) -> int:
        return sum(1 for r in self.instances if r.status == "invalid")


def _sep_orthomodular_nonboolean(ss1: StateSpace, ss2: StateSpace) -> str | None:
    """Hit iff the separated product is orthomodular and neither factor is Boolean."""
    for ss in (ss1, ss2):
        ppl = property_lattice(ss)
        oc = find_compatible_orthocomplementation(ppl)
        if isinstance(oc, Certificate):  # pragma: no cover - property lattices admit one
            return None
        if check_boolean(ppl.cs, oc).holds:
            return None
    prod = property_lattice(separated_product(ss1, ss2))
    oc = find_compatible_orthocomplementation(prod)
    assert not isinstance(oc, Certificate)
    report = check_orthomodular(prod, oc)
    if report.holds:
        return "separated product is orthomodular with two non-Boolean factors"
    return None


def _minimal_oc_nontrivial(ss1: StateSpace, ss2: StateSpace) -> str | None:
    """Hit iff the minimal product admits a compatible complement with both factors nontrivial."""
    ppls = [property_lattice(ss) for ss in (ss1, ss2)]
    if any(check_trivial(p.cs) for p in ppls):
        return None
    result = find_compatible_orthocomplementation(minimal_product(*ppls))
    if not isinstance(result, Certificate):
        return "minimal product admits a compatible orthocomplementation with nontrivial factors"
    return None


def _minimal_covering_nontrivial(ss1: StateSpace, ss2: StateSpace) -> str | None:
    """Hit iff the minimal product satisfies the covering law with both factors nontrivial."""
    from .axioms import check_covering_law

    ppls = [property_lattice(ss) for ss in (ss1, ss2)]
    if any(check_trivial(p.cs) for p in ppls):
        return None
    if check_covering_law(minimal_product(*ppls).cs).holds:
        return "minimal product satisfies the covering law with nontrivial factors"
    return None


TARGETS = {
    "separated-orthomodular-nonboolean": _sep_orthomodular_nonboolean,
    "minimal-orthocomplementation-nontrivial": _minimal_oc_nontrivial,
    "minimal-covering-nontrivial": _minimal_covering_nontrivial,
}


def parse_search_spec(text: str) -> SearchSpec:
    lines = _tokenize(text)
    if not lines or [t[0] for t in lines[0]] != ["search", "v1"]:
        raise ParseError("expected 'search v1' header",
                         lines[0][0][1] if lines else 0)
    fields: dict[str, str] = {}
    for toks in lines[1:]:
        if len(toks) != 2:
            raise ParseError("expected 'key value'", toks[0][1], toks[0][2])
        key, (value, line, col) = toks[0][0], toks[1]
        if key not in ("target", "count", "nmax", "density", "seed"):
            raise ParseError(f"unknown key {key!r}", toks[0][1], toks[0][2])
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", line, col)
        fields[key] = value
    if "target" not in fields or "count" not in fields:
        raise ParseError("spec needs at least 'target' and 'count'", 0, 0)
    if fields["target"] not in TARGETS:
        raise ParseError(f"unknown target {fields['target']!r}", 0, 0)
    try:
        return SearchSpec(
            target=fields["target"],
            count=int(fields["count"]),
            nmax=int(fields.get("nmax", "4")),
            density=float(fields.get("density", "0.5")),
            seed=int(fields.get("seed", "1")),
        )
    except ValueError as exc:
        raise ParseError(f"bad value in search spec: {exc}", 0, 0) from exc


def run_search(spec: SearchSpec) -> SearchReport:
    """Evaluate the target over the seeded instance schedule; deterministic."""
    if spec.count < 0 or spec.nmax < 1:
        raise ValueError("count must be >= 0 and nmax >= 1")
    target = TARGETS[spec.target]
    instances = []
    hits = []
    for i in range(spec.count):
        inst_seed = spec.seed + i
        rng = SplitMix64(inst_seed)
        n1 = 1 + rng.next_below(spec.nmax)
        n2 = 1 + rng.next_below(spec.nmax)
        seed1, seed2 = rng.next_u64(), rng.next_u64()
        try:
            ss1 = random_space(n1, spec.density, seed1)
            ss2 = random_space(n2, spec.density, seed2)
        except CouldNotSeparateError as exc:
            instances.append(InstanceResult(i, inst_seed, n1, n2, "invalid", str(exc)))
            continue
        detail = target(ss1, ss2)
        if detail is None:
            instances.append(InstanceResult(i, inst_seed, n1, n2, "pass"))
        else:
            result = InstanceResult(i, inst_seed, n1, n2, "hit", detail)
            instances.append(result)
            hits.append(Hit(result, serialize_statespace(ss1), serialize_statespace(ss2)))
    return SearchReport(spec, tuple(instances), tuple(hits))


def render_report(report: SearchReport) -> str:
    """One finding per line; hits include the serialized factor inputs."""
    out = []
    for r in report.instances:
        out.append(f"instance\t{r.index}\tseed\t{r.seed}\tn1\t{r.n1}\tn2\t{r.n2}"
                   f"\tstatus\t{r.status}" + (f"\t{r.detail}" if r.detail else ""))
    for h in report.hits:
        for tag, text in (("input1", h.input1), ("input2", h.input2)):
            for line in text.rstrip("\n").splitlines():
                out.append(f"hit\t{h.instance.index}\t{tag}\t{line}")
    out.append(f"summary\tcount\t{len(report.instances)}\thits\t{len(report.hits)}"
               f"\tinvalid\t{report.invalid}")
    return "\n".join(out) + "\n"
