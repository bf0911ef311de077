"""Rotation (Type-2) transform and per-step classification.

For a divisor m of n, the vertex map theta_{n,m,t} sends x = qm + j
(0 <= j < m) to x + j*t*m (mod n): vertices are rotated by an amount
proportional to their residue class mod m.  The map is a bijection, it
composes additively in t, and edges along jumps divisible by m are fixed.

Applying the map to a circulant graph gives a labeled graph that may or
may not be circulant again; when it is, the image's relation to the base
graph is classified per step t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .core import CirculantGraph, JumpSet, edge_set, symmetric_closure
from .errors import InvalidThetaParams, OrderMismatch
from .type1 import type1_witnesses

MIN_TYPE2_JUMPS = 3

M_TOO_SMALL = "MTooSmall"
NO_DIVISOR_CUBED = "NoDivisorCubed"
NO_ANCHOR_JUMP = "NoAnchorJump"


@dataclass(frozen=True)
class ThetaParams:
    """Validated rotation parameters: m > 1, m^3 | n, 0 <= t < n/m."""

    n: int
    m: int
    t: int

    def __post_init__(self):
        reasons = _transform_reasons(self.n, self.m)
        if reasons:
            raise InvalidThetaParams(
                f"invalid rotation parameters n={self.n}, m={self.m}: {', '.join(reasons)}",
                reasons,
            )
        if not 0 <= self.t < self.n // self.m:
            raise InvalidThetaParams(
                f"step t={self.t} outside [0, {self.n // self.m - 1}]", ()
            )


@dataclass(frozen=True)
class ThetaValidity:
    """Report on whether (n, m) admits Type-2 analysis of a jump set."""

    n: int
    m: int
    valid: bool
    reasons: tuple[str, ...]
    admissible_m: tuple[int, ...]


@dataclass(frozen=True)
class LabeledGraph:
    """A plain labeled graph on Z_n, edges as (low, high) pairs."""

    n: int
    edges: frozenset[tuple[int, int]]


class Verdict(Enum):
    NON_CIRCULANT = "NS"
    IDENTITY = "Identity"
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    # circulant image, no multiplier witness, but Type-2 prerequisites
    # (at least three jumps and a jump divisible by m) not met
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class TClassification:
    """Outcome of one rotation step.

    image is the canonical jump set of the image when circulant; witnesses
    are the multiplier units when the image is a Type-1 partner.
    symmetry_mismatch flags the anomaly where vertex 0's image neighborhood
    is closed under negation yet the whole edge set is not circulant.
    """

    t: int
    verdict: Verdict
    image: JumpSet | None = None
    witnesses: tuple[int, ...] = ()
    symmetry_mismatch: bool = False


@dataclass(frozen=True)
class TableRow:
    """One rendered sweep row: transformed directed jumps plus the verdict."""

    t: int
    transformed: tuple[int, ...]
    classification: TClassification


def _transform_reasons(n: int, m: int) -> tuple[str, ...]:
    reasons = []
    if m < 2:
        reasons.append(M_TOO_SMALL)
    elif n % (m ** 3) != 0:
        reasons.append(NO_DIVISOR_CUBED)
    return tuple(reasons)


def check_theta_params(n: int, m: int, r: JumpSet) -> ThetaValidity:
    """Full admissibility of (n, m) for Type-2 analysis of r.

    Valid means m > 1, m^3 divides n, and some jump of r is divisible by m.
    admissible_m lists every m that passes all three tests for this r.
    """
    if r.n != n:
        raise OrderMismatch(f"jump set is for order {r.n}, not {n}")
    reasons = list(_transform_reasons(n, m))
    if m >= 2 and not any(j % m == 0 for j in r.jumps):
        reasons.append(NO_ANCHOR_JUMP)
    admissible = tuple(
        c
        for c in range(2, n + 1)
        if n % (c ** 3) == 0 and any(j % c == 0 for j in r.jumps)
    )
    return ThetaValidity(n, m, not reasons, tuple(reasons), admissible)


def theta_vertex(p: ThetaParams, x: int) -> int:
    """Image of vertex x under the rotation map."""
    x %= p.n
    return (x + (x % p.m) * p.t * p.m) % p.n


def theta_image(p: ThetaParams, g: CirculantGraph) -> LabeledGraph:
    """Push the whole edge set of g through the vertex map."""
    if p.n != g.n:
        raise OrderMismatch(f"params are for order {p.n}, graph has {g.n}")
    vmap = [theta_vertex(p, x) for x in range(p.n)]
    edges = set()
    for a, b in edge_set(g):
        u, v = vmap[a], vmap[b]
        edges.add((u, v) if u < v else (v, u))
    base = edge_set(g)
    assert len(edges) == len(base)  # bijections preserve edge counts
    return LabeledGraph(p.n, frozenset(edges))


def detect_circulant(h: LabeledGraph) -> JumpSet | None:
    """Recover the jump set of h if h is circulant, else None.

    The candidate directed set is vertex 0's neighborhood.  If it is not
    closed under v -> n - v the graph cannot be circulant; otherwise the
    folded candidate is confirmed against the whole edge set, never against
    per-vertex spot checks.
    """
    jumps, _ = _detect(h)
    return jumps


def _detect(h: LabeledGraph) -> tuple[JumpSet | None, bool]:
    """(jump set or None, whether the 0-neighborhood was symmetric)."""
    n = h.n
    nbrs = {b for a, b in h.edges if a == 0} | {a for a, b in h.edges if b == 0}
    if not nbrs or any((n - v) % n not in nbrs for v in nbrs):
        return None, False
    candidate = JumpSet(n, tuple(sorted({min(v, n - v) for v in nbrs})))
    if edge_set(CirculantGraph(n, candidate)) != h.edges:
        return None, True
    return candidate, True


def classify_t(p: ThetaParams, g: CirculantGraph) -> TClassification:
    """Classify the image of g at one rotation step.

    Identity when the image is g itself, Type1 when a multiplier unit
    witnesses the image, Type2 when the image is circulant with no such
    witness and g has at least three jumps including one divisible by m.
    """
    if p.n != g.n:
        raise OrderMismatch(f"params are for order {p.n}, graph has {g.n}")
    n = p.n
    transformed = {theta_vertex(p, v) for v in symmetric_closure(g).values}
    if any((n - v) % n not in transformed for v in transformed):
        return TClassification(p.t, Verdict.NON_CIRCULANT)
    # vertex 0 is fixed, so its image neighborhood is exactly the
    # transformed closure; now confirm on the whole edge set
    candidate = JumpSet(n, tuple(sorted({min(v, n - v) for v in transformed})))
    if edge_set(CirculantGraph(n, candidate)) != theta_image(p, g).edges:
        return TClassification(p.t, Verdict.NON_CIRCULANT, symmetry_mismatch=True)
    if candidate == g.r:
        return TClassification(p.t, Verdict.IDENTITY, image=candidate)
    wits = type1_witnesses(g, CirculantGraph(n, candidate))
    if wits:
        return TClassification(
            p.t, Verdict.TYPE1, image=candidate, witnesses=tuple(sorted(wits))
        )
    if len(g.r) >= MIN_TYPE2_JUMPS and any(j % p.m == 0 for j in g.jumps):
        return TClassification(p.t, Verdict.TYPE2, image=candidate)
    return TClassification(p.t, Verdict.UNCLASSIFIED, image=candidate)


def classification_table(
    n: int,
    m: int,
    g: CirculantGraph,
    t_values: range | None = None,
    threads: int = 1,
) -> tuple[TableRow, ...]:
    """Sweep rotation steps and render one row per t.

    Transformed values are listed in the order of the sorted base closure,
    so columns line up across rows.
    """
    if t_values is None:
        t_values = range(n // m)
    closure = sorted(symmetric_closure(g).values)

    def row(t: int) -> TableRow:
        p = ThetaParams(n, m, t)
        transformed = tuple(theta_vertex(p, v) for v in closure)
        return TableRow(t, transformed, classify_t(p, g))

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return tuple(pool.map(row, t_values))
    return tuple(row(t) for t in t_values)
