"""Smoothness of the projective hypersurface X_F.

Two combinatorial non-smoothness filters for cubics (positive answers are
certificates of singularity), plus an exact decision through the Jacobian
criterion: X_F is smooth iff the partials have no common projective zero,
certified by pure-power leading terms in a graded-reverse-lex Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .forms import Form, partial
from .groebner import BudgetExhausted, buchberger, pure_power_coverage

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class NonSmoothWitness:
    """Certificate of non-smoothness; replaying it against F re-triggers it."""

    kind: str  # L38-i | L38-ii | L38-iii | L38-iv | L310 | JacobianZero
    data: tuple

    def __str__(self):
        return f"{self.kind}{self.data}"


@dataclass(frozen=True)
class SmoothResult:
    status: str  # smooth | singular | exhausted
    witness: NonSmoothWitness | None = None

    @property
    def is_smooth(self) -> bool:
        return self.status == "smooth"


def _support_non_smooth(support: Iterable[tuple[int, ...]], m: int) -> NonSmoothWitness | None:
    """The four cubic conditions, checked on a monomial support set.

    Condition (i) (a coordinate point where all partials vanish) is sound for
    every m.  Conditions (ii)-(iv) force a singular point by intersecting 3, 2,
    or 1 quadrics on a linear subspace of dimension m-4, m-5, m-6, so they are
    sound only for m >= 7: at m = 6 there are smooth cubics inside an ideal of
    three variables.
    """
    supp = list(support)
    for i in range(m):
        if not any(e[i] >= 2 for e in supp):
            return NonSmoothWitness("L38-i", (i,))
    if m < 7:
        return None
    for trio in combinations(range(m), 3):
        if all(any(e[v] for v in trio) for e in supp):
            return NonSmoothWitness("L38-ii", trio)
    for pq in combinations(range(m), 2):
        rest = [v for v in range(m) if v not in pq]
        for rs in combinations(rest, 2):
            if all(e[pq[0]] + e[pq[1]] >= 1 or e[rs[0]] + e[rs[1]] >= 2 for e in supp):
                return NonSmoothWitness("L38-iii", pq + rs)
    for p in range(m):
        rest = [v for v in range(m) if v != p]
        for quad in combinations(rest, 4):
            if all(e[p] >= 1 or sum(e[v] for v in quad) >= 2 for e in supp):
                return NonSmoothWitness("L38-iv", (p,) + quad)
    return None


def combinatorial_non_smooth(f: Form) -> NonSmoothWitness | None:
    """First witness among conditions (i)-(iv), scanning in order; None proves nothing."""
    if f.degree != 3:
        raise ValueError("combinatorial filter applies to cubic forms only")
    if f.nvars < 4:
        raise ValueError("combinatorial filter needs at least 4 variables")
    return _support_non_smooth(f.terms.keys(), f.nvars)


def _cover_ok(e: tuple[int, ...], labels: Sequence[int]) -> bool:
    c1 = sum(x for x, l in zip(e, labels) if l == 0)
    if c1 == 0 or c1 == 1:
        return True
    if c1 == 2:
        c3 = sum(x for x, l in zip(e, labels) if l == 2)
        return c3 == 0
    return False


def partition_non_smooth(f: Form, v1: Sequence[int], v2: Sequence[int],
                         v3: Sequence[int]) -> bool:
    """True iff every monomial matches one of the three patterns for the cover
    (V1, V2, V3); a true answer certifies that F is not smooth."""
    if f.degree != 3:
        raise ValueError("partition filter applies to cubic forms only")
    m = f.nvars
    sets = [set(v1), set(v2), set(v3)]
    if sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]:
        raise ValueError("variable collections must be disjoint")
    if sets[0] | sets[1] | sets[2] != set(range(m)):
        raise ValueError("variable collections must cover all variables")
    if len(sets[0]) <= len(sets[1]):
        raise ValueError("need |V1| > |V2|")
    labels = [0] * m
    for v in sets[1]:
        labels[v] = 1
    for v in sets[2]:
        labels[v] = 2
    return all(_cover_ok(e, labels) for e in f.terms)


def find_partition_cover(support: Iterable[tuple[int, ...]], m: int):
    """Search all (V1, V2, V3) covers; return the first one whose patterns absorb
    every monomial of the support, or None."""
    supp = list(support)
    for labels in product((0, 1, 2), repeat=m):
        n1 = labels.count(0)
        n2 = labels.count(1)
        if n1 <= n2:
            continue
        if all(_cover_ok(e, labels) for e in supp):
            v1 = tuple(i for i, l in enumerate(labels) if l == 0)
            v2 = tuple(i for i, l in enumerate(labels) if l == 1)
            v3 = tuple(i for i, l in enumerate(labels) if l == 2)
            return v1, v2, v3
    return None


def replay(witness: NonSmoothWitness, f: Form) -> bool:
    """Check that the witness still triggers against F."""
    supp = list(f.terms.keys())
    m = f.nvars
    k, d = witness.kind, witness.data
    if k == "L38-i":
        return not any(e[d[0]] >= 2 for e in supp)
    if k == "L38-ii":
        return all(any(e[v] for v in d) for e in supp)
    if k == "L38-iii":
        return all(e[d[0]] + e[d[1]] >= 1 or e[d[2]] + e[d[3]] >= 2 for e in supp)
    if k == "L38-iv":
        return all(e[d[0]] >= 1 or sum(e[v] for v in d[1:]) >= 2 for e in supp)
    if k == "L310":
        v1, v2, v3 = d
        return partition_non_smooth(f, v1, v2, v3)
    if k == "JacobianZero":
        return is_smooth(f).status == "singular"
    raise ValueError(f"unknown witness kind {k}")


def jacobian_generators(f: Form) -> list[dict]:
    return [partial(f, i).terms for i in range(f.nvars)]


def is_smooth(f: Form, budget: int = DEFAULT_BUDGET) -> SmoothResult:
    """Decide smoothness of X_F; honest tri-state (smooth/singular/exhausted)."""
    if f.is_zero():
        raise ValueError("smoothness of the zero form is undefined")
    if f.degree < 2:
        raise ValueError("smoothness test needs degree >= 2")
    m = f.nvars
    if f.degree == 3 and m >= 4:
        w = _support_non_smooth(f.terms.keys(), m)
        if w is not None:
            return SmoothResult("singular", w)
    partials = []
    for i in range(m):
        p = partial(f, i)
        if p.is_zero():
            # F does not involve x_i at all: X_F is a cone
            return SmoothResult("singular", NonSmoothWitness("JacobianZero", (i,)))
        partials.append(p.terms)
    try:
        gb = buchberger(partials, budget_limit=budget)
    except BudgetExhausted:
        return SmoothResult("exhausted")
    covered = pure_power_coverage(gb, m)
    if all(covered):
        return SmoothResult("smooth")
    missing = tuple(i for i, c in enumerate(covered) if not c)
    return SmoothResult("singular", NonSmoothWitness("JacobianZero", missing))
