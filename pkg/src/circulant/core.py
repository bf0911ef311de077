"""Circulant graphs with canonical connection sets.

A circulant graph of order n is determined by a set of jumps: vertex x is
adjacent to x +/- j (mod n) for every jump j.  Jumps are stored folded into
[1, n//2], sorted, without duplicates, so two graphs are equal exactly when
their (n, jumps) pairs are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import EmptyConnectionSet, InvalidJump


@dataclass(frozen=True, order=True)
class JumpSet:
    """Canonical connection set: sorted, distinct, folded into [1, n//2]."""

    n: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise InvalidJump(f"graph order must be at least 3, got {self.n}")
        if not self.jumps:
            raise EmptyConnectionSet("connection set is empty")
        prev = 0
        for j in self.jumps:
            if not isinstance(j, int) or not 1 <= j <= self.n // 2:
                raise InvalidJump(f"jump {j} outside [1, {self.n // 2}] for order {self.n}")
            if j <= prev:
                raise InvalidJump(f"jumps must be strictly increasing, got {self.jumps}")
            prev = j

    def __len__(self):
        return len(self.jumps)

    def __iter__(self):
        return iter(self.jumps)


@dataclass(frozen=True, order=True)
class CirculantGraph:
    """A circulant graph C_n(R) identified by its canonical jump set."""

    n: int
    r: JumpSet

    def __post_init__(self):
        if self.r.n != self.n:
            raise InvalidJump(f"jump set is for order {self.r.n}, graph has order {self.n}")

    @property
    def jumps(self) -> tuple[int, ...]:
        return self.r.jumps

    def __str__(self):
        return f"C_{self.n}({','.join(map(str, self.jumps))})"


@dataclass(frozen=True)
class DirectedJumpSet:
    """Symmetric closure of a jump set: every jump together with its negation."""

    n: int
    values: frozenset[int]


@dataclass(frozen=True)
class CycleStats:
    """Cycle decomposition of the edges contributed by a single jump."""

    jump: int
    gcd: int
    cycle_length: int
    cycle_count: int


def reflexive_reduce(n: int, raw: Iterable[int]) -> JumpSet:
    """Fold raw jump values into canonical form.

    Each value is reduced mod n; values above n/2 are replaced by their
    negation n - v, duplicates collapse, and the result is sorted.  A value
    congruent to 0 would be a loop and is rejected.
    """
    if n < 3:
        raise InvalidJump(f"graph order must be at least 3, got {n}")
    values = list(raw)
    if not values:
        raise EmptyConnectionSet("connection set is empty")
    folded = set()
    for v in values:
        r = v % n
        if r == 0:
            raise InvalidJump(f"jump {v} is 0 mod {n} (a loop)")
        if 2 * r > n:
            r = n - r
        folded.add(r)
    return JumpSet(n, tuple(sorted(folded)))


def make_circulant(n: int, raw: Iterable[int]) -> CirculantGraph:
    """Build C_n(raw) with the jump values folded to canonical form."""
    return CirculantGraph(n, reflexive_reduce(n, raw))


def symmetric_closure(g: CirculantGraph) -> DirectedJumpSet:
    """All directed jump values of g: each jump j yields j and n - j."""
    values = set()
    for j in g.jumps:
        values.add(j)
        values.add(g.n - j)
    return DirectedJumpSet(g.n, frozenset(values))


def edge_set(g: CirculantGraph) -> frozenset[tuple[int, int]]:
    """The whole edge set of g as (low, high) vertex pairs."""
    n = g.n
    edges = set()
    for j in g.jumps:
        for x in range(n):
            y = (x + j) % n
            edges.add((x, y) if x < y else (y, x))
    return frozenset(edges)


def period_cycle_stats(n: int, jump: int) -> CycleStats:
    """Cycle structure of the subgraph of a single jump.

    Jump j splits the vertices into gcd(n, j) cycles, each of length
    n / gcd(n, j).
    """
    if n < 3:
        raise InvalidJump(f"graph order must be at least 3, got {n}")
    if not 1 <= jump <= n - 1:
        raise InvalidJump(f"jump {jump} outside [1, {n - 1}] for order {n}")
    g = gcd(n, jump)
    return CycleStats(jump=jump, gcd=g, cycle_length=n // g, cycle_count=g)


def scale(k: int, g: CirculantGraph) -> CirculantGraph:
    """C_n(R) -> C_{kn}(kR); jumps stay canonical without refolding."""
    if k < 1:
        raise InvalidJump(f"scale factor must be positive, got {k}")
    return CirculantGraph(k * g.n, JumpSet(k * g.n, tuple(k * j for j in g.jumps)))
