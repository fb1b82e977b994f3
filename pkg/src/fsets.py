"""Combinatória do conjunto finito F: u_F, v_F, σ_F, involução, F↓, admissibilidade."""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from .reports import VerificationReport


@dataclass(frozen=True, order=True)
class FiniteSet:
    elements: Tuple[int, ...] = ()

    def __post_init__(self):
        els = tuple(int(e) for e in self.elements)
        if any(e < 1 for e in els):
            raise ValueError(f"elementos devem ser inteiros positivos: {els}")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError(f"elementos devem ser estritamente crescentes: {els}")
        object.__setattr__(self, "elements", els)

    @classmethod
    def of(cls, *xs: int) -> "FiniteSet":
        return cls(tuple(sorted(xs)))

    @classmethod
    def parse(cls, text: str) -> "FiniteSet":
        """Lê "1,2,5,6" (aceita também ';' e espaços). Vazio ou "{}" dá ∅."""
        raw = (text or "").strip().strip("{}[]")
        parts = [p.strip() for p in re.split(r"[,;\s]+", raw) if p.strip()]
        xs = [int(p) for p in parts]
        if len(set(xs)) != len(xs):
            raise ValueError(f"elementos repetidos em {text!r}")
        return cls(tuple(sorted(xs)))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def max(self) -> int:
        """f_k (0 para ∅)."""
        return self.elements[-1] if self.elements else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __getitem__(self, i: int) -> int:
        """f_i com índice 1-based, como na notação usual."""
        if not 1 <= i <= self.k:
            raise IndexError(i)
        return self.elements[i - 1]

    def drop(self, i: int) -> "FiniteSet":
        """F_{i} = F \\ {f_i} (1-based)."""
        return FiniteSet(self.elements[: i - 1] + self.elements[i:])

    def is_initial_segment(self) -> bool:
        return self.elements == tuple(range(1, self.k + 1))

    def to_json(self) -> list:
        return list(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


EMPTY = FiniteSet(())


@dataclass(frozen=True)
class SetIndices:
    u: int
    v: int
    excluded: FrozenSet[int]

    def contains(self, n: int) -> bool:
        return n >= self.u and n not in self.excluded

    def iter_from(self, start: int | None = None) -> Iterator[int]:
        n = self.u if start is None else max(start, self.u)
        while True:
            if n not in self.excluded:
                yield n
            n += 1

    def first(self, count: int) -> List[int]:
        return list(itertools.islice(self.iter_from(), count))

    def upto(self, nmax: int) -> List[int]:
        return [n for n in range(self.u, nmax + 1) if n not in self.excluded]


def u_index(F: FiniteSet) -> int:
    return sum(F) - math.comb(F.k + 1, 2)


def set_indices(F: FiniteSet) -> SetIndices:
    u = u_index(F)
    # v_∅ = 0 por convenção
    v = u + F.max + 1 if F.k else 0
    return SetIndices(u=u, v=v, excluded=frozenset(u + f for f in F))


def involution(F: FiniteSet) -> FiniteSet:
    if not F.k:
        raise ValueError("a involução I não está definida para F = ∅")
    top = F.max
    removed = {top - f for f in F}
    return FiniteSet(tuple(x for x in range(1, top + 1) if x not in removed))


def s_index(F: FiniteSet) -> int:
    if not F.k:
        return 1
    if F.is_initial_segment():
        return F.k + 1
    return min(s for s in range(1, F.k + 1) if s < F[s])


def down(F: FiniteSet) -> FiniteSet:
    """F↓."""
    if not F.k or F.is_initial_segment():
        return EMPTY
    s = s_index(F)
    return FiniteSet(tuple(F[i] - s for i in range(s, F.k + 1)))


@dataclass(frozen=True)
class DerivedSets:
    s: int
    drops: Tuple[FiniteSet, ...]
    down: FiniteSet
    down_matches_involution: bool


def derived_sets(F: FiniteSet) -> DerivedSets:
    drops = tuple(F.drop(i) for i in range(1, F.k + 1))
    fd = down(F)
    if F.k:
        G = involution(F)
        G_top = G.drop(G.k)
        # I(∅) := ∅ só para esta comparação
        expected = involution(G_top) if G_top.k else EMPTY
        matches = expected == fd
    else:
        matches = fd == EMPTY
    return DerivedSets(s=s_index(F), drops=drops, down=fd, down_matches_involution=matches)


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    blocks: Tuple[FiniteSet, ...]


def blocks(F: FiniteSet) -> Tuple[FiniteSet, ...]:
    out: List[FiniteSet] = []
    run: List[int] = []
    for f in F:
        if run and f != run[-1] + 1:
            out.append(FiniteSet(tuple(run)))
            run = []
        run.append(f)
    if run:
        out.append(FiniteSet(tuple(run)))
    return tuple(out)


def is_admissible(F: FiniteSet) -> Admissibility:
    bs = blocks(F)
    return Admissibility(admissible=all(b.k % 2 == 0 for b in bs), blocks=bs)


def product_nonnegative_on_naturals(F: FiniteSet) -> bool:
    """∏_{f∈F}(x−f) ≥ 0 para todo x natural (basta x ≤ f_k)."""
    for x in range(0, F.max + 1):
        prod = 1
        for f in F:
            prod *= x - f
        if prod < 0:
            return False
    return True


def partition_to_set(lam: Sequence[int]) -> FiniteSet:
    lam = list(lam)
    if any(p < 1 for p in lam) or any(b < a for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partição deve ser não-decrescente e positiva: {lam}")
    out: List[int] = []
    for j, lj in enumerate(lam, start=1):
        out.extend((lj + 2 * j - 2, lj + 2 * j - 1))
    return FiniteSet(tuple(out))


def gugm_index(lam: Sequence[int], j: int) -> int:
    """Grau 2Σλ − 2l + j do j-ésimo polinômio da família indexada pela partição."""
    return 2 * sum(lam) - 2 * len(lam) + j


def nu(F: FiniteSet) -> Fraction:
    out = Fraction(2) ** math.comb(F.k + 1, 2)
    for f in F:
        out *= math.factorial(f)
    return out


def all_sets(max_fk: int, max_k: int | None = None) -> List[FiniteSet]:
    """Todos os F não vazios com f_k ≤ max_fk, em ordem lexicográfica."""
    out: List[FiniteSet] = []
    top_k = max_fk if max_k is None else min(max_k, max_fk)
    for k in range(1, top_k + 1):
        for combo in itertools.combinations(range(1, max_fk + 1), k):
            out.append(FiniteSet(combo))
    return sorted(out, key=lambda F: F.elements)


def partitions(total: int) -> Iterator[Tuple[int, ...]]:
    """Partições de ``total`` em partes positivas não-decrescentes."""
    def rec(rest: int, smallest: int) -> Iterator[Tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for p in range(smallest, rest + 1):
            for tail in rec(rest - p, p):
                yield (p,) + tail
    yield from rec(total, 1)


def partition_check(max_weight: int = 4, jmax: int = 12) -> VerificationReport:
    """u_F = 2Σλ − 2l e u_F + j ∈ σ_F ⇔ j ∉ F, para F vindo de cada partição de peso ≤ max_weight."""
    rep = VerificationReport("partition_index", inputs={"max_weight": max_weight, "jmax": jmax})
    for weight in range(1, max_weight + 1):
        for lam in partitions(weight):
            F = partition_to_set(lam)
            idx = set_indices(F)
            rep.record(is_admissible(F).admissible, relation="admissible", partition=list(lam))
            rep.compare(idx.u, gugm_index(lam, 0), relation="u_F", partition=list(lam))
            for j in range(jmax + 1):
                rep.record(idx.contains(gugm_index(lam, j)) == (j not in F),
                           relation="sigma_membership", partition=list(lam), j=j)
    return rep.finish()
