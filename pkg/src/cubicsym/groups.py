"""Finitely generated finite matrix groups over Q(zeta_N).

Closure is breadth-first product closure with canonical-form hashing; the
element order is the deterministic BFS insertion order for the given
generator list.
"""

from __future__ import annotations

from typing import Sequence

from .cyclo import CycNum, common_conductor
from .diffrank import eigen_partition_witness, eigenvalue_multiset
from .forms import CycMatrix

DEFAULT_CAP = 300_000


class CapExceeded(Exception):
    def __init__(self, count: int):
        super().__init__(f"group closure exceeded cap with {count} elements found")
        self.count = count


class MatGroup:
    """Subgroup of GL(m, Q(zeta_N)) given by generators, optionally materialized."""

    __slots__ = ("dimension", "conductor", "generators", "elements", "cap")

    def __init__(self, generators: Sequence[CycMatrix],
                 elements: tuple[CycMatrix, ...] | None = None,
                 cap: int = DEFAULT_CAP):
        gens = list(generators)
        if not gens:
            raise ValueError("need at least one generator")
        n = common_conductor(*(g.conductor for g in gens))
        gens = [g.lift(n) for g in gens]
        m = gens[0].dim
        if any(g.dim != m for g in gens):
            raise ValueError("generators must share one dimension")
        self.dimension = m
        self.conductor = n
        self.generators = tuple(gens)
        self.elements = elements
        self.cap = cap

    @property
    def order(self) -> int:
        if self.elements is None:
            raise ValueError("group not materialized; run closure first")
        return len(self.elements)

    def materialized(self) -> bool:
        return self.elements is not None

    def encode(self) -> str:
        parts = [f"group {self.dimension} {self.conductor} {len(self.generators)}"]
        parts.extend(g.encode().rstrip("\n") for g in self.generators)
        return "\n".join(parts) + "\n"

    @staticmethod
    def parse(text: str) -> "MatGroup":
        lines = text.splitlines()
        header = None
        for ln in lines:
            if ln.strip():
                header = ln.strip()
                break
        if header is None or not header.startswith("group"):
            raise ValueError("missing group header")
        _, m, n, k = header.split()
        m, n, k = int(m), int(n), int(k)
        blocks: list[list[str]] = []
        for ln in lines:
            s = ln.strip()
            if not s or s.startswith("group"):
                continue
            if s.startswith("matrix"):
                blocks.append([s])
            else:
                if not blocks:
                    raise ValueError("matrix row before matrix header")
                blocks[-1].append(s)
        if len(blocks) != k:
            raise ValueError(f"expected {k} matrices, found {len(blocks)}")
        gens = [CycMatrix.parse("\n".join(b)).lift(n) for b in blocks]
        if any(g.dim != m for g in gens):
            raise ValueError("matrix dimension disagrees with group header")
        return MatGroup(gens)


def closure(gens: Sequence[CycMatrix], cap: int = DEFAULT_CAP) -> MatGroup:
    """Materialize the generated group; raises CapExceeded past the cap."""
    group = MatGroup(gens, cap=cap)
    for g in group.generators:
        if g.det().is_zero():
            raise ValueError("generators must be invertible")
    ident = CycMatrix.identity(group.dimension, group.conductor)
    seen = {ident}
    ordered = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in group.generators:
                b = a * g
                if b not in seen:
                    seen.add(b)
                    ordered.append(b)
                    nxt.append(b)
                    if len(ordered) > cap:
                        raise CapExceeded(len(ordered))
        frontier = nxt
    return MatGroup(group.generators, elements=tuple(ordered), cap=cap)


def scalar_elements(group: MatGroup) -> list[CycMatrix]:
    if not group.materialized():
        raise ValueError("group not materialized")
    return [a for a in group.elements if a.is_scalar()]


def scalar_subgroup(group: MatGroup) -> int:
    """Order of the subgroup of scalar matrices lambda*I inside the group."""
    return len(scalar_elements(group))


def projective_order(group: MatGroup) -> int:
    """|pi(G)| = |G| / |G intersect scalars|."""
    return group.order // scalar_subgroup(group)


def is_semi_permutation(group: MatGroup) -> bool:
    """Products of semi-permutation matrices stay semi-permutation, so the
    generators decide."""
    return all(g.is_semi_permutation() for g in group.generators)


def is_abelian(group: MatGroup) -> bool:
    gens = group.generators
    return all(gens[i] * gens[j] == gens[j] * gens[i]
               for i in range(len(gens)) for j in range(i + 1, len(gens)))


def eigen_multisets(group: MatGroup, cap: int = 10_000) -> list[dict[CycNum, int]]:
    if not group.materialized():
        raise ValueError("group not materialized")
    return [eigenvalue_multiset(a, cap) for a in group.elements]


def is_special(group: MatGroup, cap: int = 10_000) -> bool:
    """No element carries one of the two forbidden cube-root eigenvalue shapes."""
    if group.dimension != 7:
        raise ValueError("special representations are defined for dimension 7")
    if not group.materialized():
        raise ValueError("group not materialized")
    return all(eigen_partition_witness(a, cap) is None for a in group.elements)


def projective_classes(group: MatGroup) -> list[list[CycMatrix]]:
    """Partition of the elements into classes modulo the scalar subgroup."""
    scalars = scalar_elements(group)
    seen: set[CycMatrix] = set()
    classes = []
    for a in group.elements:
        if a in seen:
            continue
        cls = [s * a for s in scalars]
        seen.update(cls)
        classes.append(cls)
    return classes
