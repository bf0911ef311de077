"""Parametric families of Type-2 isomorphic circulant graphs.

Each generator emits a family instance: an ordered list of jump sets on a
common order n = (something) * m^3, together with the rotation steps that
are claimed to map each set onto the next.  family_verify re-derives every
claimed relation from scratch and computes the Type-2 set and group of the
family, so generator bugs cannot slip through as silent claims.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .core import CirculantGraph, JumpSet, reflexive_reduce
from .errors import (
    DegenerateFamily,
    InvalidFamilyParams,
    InvalidJump,
    VerificationFailure,
)
from .groups import t2_group, t2_set
from .theta import ThetaParams, detect_circulant, theta_image
from .type1 import type1_witnesses


class FamilyClaim(Enum):
    TYPE2 = "type2"
    TYPE1_OR_TYPE2 = "type1-or-type2"


@dataclass(frozen=True)
class ThetaRelation:
    """theta at step t maps sets[source] onto sets[target]."""

    t: int
    source: int
    target: int


@dataclass
class FamilyInstance:
    order: int
    m: int
    sets: tuple[JumpSet, ...]
    relations: tuple[ThetaRelation, ...]
    claim: FamilyClaim

    def __post_init__(self):
        sizes = {len(s) for s in self.sets}
        if len(sizes) != 1:
            raise InvalidFamilyParams(f"member sizes differ: {sorted(sizes)}")
        signatures = {tuple(sorted(gcd(self.order, j) for j in s)) for s in self.sets}
        if len(signatures) != 1:
            raise InvalidFamilyParams("gcd signatures differ across members")
        if self.order % (self.m ** 3) != 0:
            raise InvalidFamilyParams(f"{self.m}^3 does not divide {self.order}")
        for s in self.sets:
            if not any(j % self.m == 0 for j in s):
                raise InvalidFamilyParams(f"{tuple(s)} has no jump divisible by {self.m}")

    @property
    def graphs(self) -> tuple[CirculantGraph, ...]:
        return tuple(CirculantGraph(self.order, s) for s in self.sets)


@dataclass
class FamilyVerification:
    """Outcome of re-deriving a family's claims.

    resolved is "type2" when no pair of members is multiplier-related,
    "type1" when every pair is; either way all claimed rotation relations
    held exactly.
    """

    instance: FamilyInstance
    resolved: str
    t1_witness_pairs: dict[tuple[int, int], tuple[int, ...]]
    t2_members: tuple[CirculantGraph, ...]
    group_order: int | None


def _fold(order: int, values) -> JumpSet:
    try:
        return reflexive_reduce(order, values)
    except InvalidJump as exc:
        raise InvalidFamilyParams(str(exc)) from exc


def _check_p_list(p_list: tuple[int, ...]) -> None:
    if not p_list:
        raise InvalidFamilyParams("at least one extra jump multiplier is required")
    if any(p < 1 for p in p_list):
        raise InvalidFamilyParams(f"multipliers must be positive, got {p_list}")
    # a single extra multiplier is unconstrained; several must be coprime
    if len(p_list) > 1 and gcd(*p_list) != 1:
        raise InvalidFamilyParams(f"multipliers {p_list} share a factor {gcd(*p_list)}")


def family_m2(n: int, s: int) -> FamilyInstance:
    """Order 8n pair swapped by theta at steps n and 3n (m = 2)."""
    if n < 2:
        raise InvalidFamilyParams(f"n must be at least 2, got {n}")
    if not 1 <= 2 * s - 1 <= 2 * n - 1:
        raise InvalidFamilyParams(f"odd jump 2s-1={2 * s - 1} outside [1, {2 * n - 1}]")
    if n == 2 * s - 1:
        raise DegenerateFamily(f"n = 2s-1 = {n} makes both sets equal")
    order = 8 * n
    r = _fold(order, [2, 2 * s - 1, 4 * n - (2 * s - 1)])
    t = _fold(order, [2, 2 * n - (2 * s - 1), 2 * n + 2 * s - 1])
    relations = (
        ThetaRelation(n, 0, 1),
        ThetaRelation(3 * n, 0, 1),
        ThetaRelation(n, 1, 0),
        ThetaRelation(3 * n, 1, 0),
        ThetaRelation(2 * n, 0, 0),
        ThetaRelation(2 * n, 1, 1),
    )
    return FamilyInstance(order, 2, (r, t), relations, FamilyClaim.TYPE2)


def family_m2_general(n: int, s: int, p_list: tuple[int, ...], y: int) -> FamilyInstance:
    """Order 8n pair with extra even jumps 2*p_i (m = 2).

    Requires a common even jump 2y of both sets with y a unit mod 4n; the
    pair is then multiplier- or rotation-isomorphic, resolved by
    family_verify.
    """
    if n < 2:
        raise InvalidFamilyParams(f"n must be at least 2, got {n}")
    if not 1 <= 2 * s - 1 <= 2 * n - 1:
        raise InvalidFamilyParams(f"odd jump 2s-1={2 * s - 1} outside [1, {2 * n - 1}]")
    if n == 2 * s - 1:
        raise DegenerateFamily(f"n = 2s-1 = {n} makes both sets equal")
    _check_p_list(p_list)
    order = 8 * n
    extra = [2 * p for p in p_list]
    r = _fold(order, [2 * s - 1, 4 * n - (2 * s - 1)] + extra)
    t = _fold(order, [2 * n - (2 * s - 1), 2 * n + 2 * s - 1] + extra)
    common = set(r.jumps) & set(t.jumps)
    folded_y = min(2 * y % order, (order - 2 * y) % order)
    if folded_y not in common or gcd(4 * n, y) != 1:
        raise InvalidFamilyParams(
            f"2y={2 * y} must be a common jump with y a unit mod {4 * n}"
        )
    relations = (
        ThetaRelation(n, 0, 1),
        ThetaRelation(3 * n, 0, 1),
        ThetaRelation(n, 1, 0),
        ThetaRelation(3 * n, 1, 0),
        ThetaRelation(2 * n, 0, 0),
        ThetaRelation(2 * n, 1, 1),
    )
    return FamilyInstance(order, 2, (r, t), relations, FamilyClaim.TYPE1_OR_TYPE2)


def family_m3(n: int) -> FamilyInstance:
    """Order 27n triple cycled by theta at step n (m = 3)."""
    if n < 1:
        raise InvalidFamilyParams(f"n must be positive, got {n}")
    order = 27 * n
    sets = (
        _fold(order, [1, 3, 9 * n - 1, 9 * n + 1]),
        _fold(order, [3, 3 * n + 1, 6 * n - 1, 12 * n + 1]),
        _fold(order, [3, 3 * n - 1, 6 * n + 1, 12 * n - 1]),
    )
    relations = tuple(ThetaRelation(n, i, (i + 1) % 3) for i in range(3))
    return FamilyInstance(order, 3, sets, relations, FamilyClaim.TYPE2)


def family_m3_general(n: int, p_list: tuple[int, ...]) -> FamilyInstance:
    """Order 27n triple with extra jumps 3*p_i in every member (m = 3)."""
    if n < 1:
        raise InvalidFamilyParams(f"n must be positive, got {n}")
    _check_p_list(p_list)
    order = 27 * n
    extra = [3 * p for p in p_list]
    sets = (
        _fold(order, [1, 9 * n - 1, 9 * n + 1] + extra),
        _fold(order, [3 * n + 1, 6 * n - 1, 12 * n + 1] + extra),
        _fold(order, [3 * n - 1, 6 * n + 1, 12 * n - 1] + extra),
    )
    relations = tuple(ThetaRelation(n, i, (i + 1) % 3) for i in range(3))
    return FamilyInstance(order, 3, sets, relations, FamilyClaim.TYPE1_OR_TYPE2)


def family_m5(n: int) -> FamilyInstance:
    """Order 125n five-cycle: theta at step jn shifts member i to i+j (m = 5)."""
    if n < 1:
        raise InvalidFamilyParams(f"n must be positive, got {n}")
    order = 125 * n
    sets = []
    for i in range(1, 6):
        d = 5 * n * (i - 1) + 1
        sets.append(
            _fold(order, [5, d, 25 * n - d, 25 * n + d, 50 * n - d, 50 * n + d])
        )
    relations = tuple(
        ThetaRelation(j * n, i, (i + j) % 5) for i in range(5) for j in range(1, 5)
    )
    return FamilyInstance(order, 5, tuple(sets), relations, FamilyClaim.TYPE2)


def family_m5_general(n: int, p_list: tuple[int, ...]) -> FamilyInstance:
    """family_m5 with the anchor jump 5 replaced by extra jumps 5*p_i."""
    if n < 1:
        raise InvalidFamilyParams(f"n must be positive, got {n}")
    _check_p_list(p_list)
    order = 125 * n
    extra = [5 * p for p in p_list]
    sets = []
    for i in range(1, 6):
        d = 5 * n * (i - 1) + 1
        sets.append(
            _fold(order, [d, 25 * n - d, 25 * n + d, 50 * n - d, 50 * n + d] + extra)
        )
    relations = tuple(
        ThetaRelation(j * n, i, (i + j) % 5) for i in range(5) for j in range(1, 5)
    )
    return FamilyInstance(order, 5, tuple(sets), relations, FamilyClaim.TYPE1_OR_TYPE2)


def family_m7(n: int) -> FamilyInstance:
    """Order 343n seven-cycle: theta at step jn shifts member i to i+j (m = 7)."""
    if n < 1:
        raise InvalidFamilyParams(f"n must be positive, got {n}")
    order = 343 * n
    sets = []
    for i in range(1, 8):
        d = 7 * n * (i - 1) + 1
        raw = [7, d]
        for j in (49, 98, 147):
            raw += [j * n - d, j * n + d]
        sets.append(_fold(order, raw))
    relations = tuple(
        ThetaRelation(j * n, i, (i + j) % 7) for i in range(7) for j in range(1, 7)
    )
    return FamilyInstance(order, 7, tuple(sets), relations, FamilyClaim.TYPE2)


def family_m7_general(n: int, p_list: tuple[int, ...]) -> FamilyInstance:
    """family_m7 with the anchor jump 7 replaced by extra jumps 7*p_i."""
    if n < 1:
        raise InvalidFamilyParams(f"n must be positive, got {n}")
    _check_p_list(p_list)
    order = 343 * n
    extra = [7 * p for p in p_list]
    sets = []
    for i in range(1, 8):
        d = 7 * n * (i - 1) + 1
        raw = [d]
        for j in (49, 98, 147):
            raw += [j * n - d, j * n + d]
        sets.append(_fold(order, raw + extra))
    relations = tuple(
        ThetaRelation(j * n, i, (i + j) % 7) for i in range(7) for j in range(1, 7)
    )
    return FamilyInstance(order, 7, tuple(sets), relations, FamilyClaim.TYPE1_OR_TYPE2)


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, int(p ** 0.5) + 1, 2))


def family_general_p(p: int, n: int, x: int, y: int) -> FamilyInstance:
    """Order n*p^3 p-cycle for any odd prime p.

    The i-th member is built around d_i = (i-1)*x*p*n + x + y*p; theta at
    step jn shifts member i to member i+j mod p.  Every member keeps the
    anchor jump p.
    """
    if not _is_odd_prime(p):
        raise InvalidFamilyParams(f"p must be an odd prime, got {p}")
    if n < 1:
        raise InvalidFamilyParams(f"n must be positive, got {n}")
    if not 1 <= x <= p - 1:
        raise InvalidFamilyParams(f"x={x} outside [1, {p - 1}]")
    if not 0 <= y <= n * p - 1:
        raise InvalidFamilyParams(f"y={y} outside [0, {n * p - 1}]")
    if not 1 <= x + y * p <= n * p * p - 1:
        raise InvalidFamilyParams(f"x + y*p = {x + y * p} outside [1, {n * p * p - 1}]")
    order = n * p ** 3
    sets = []
    for i in range(1, p + 1):
        d = (i - 1) * x * p * n + x + y * p
        raw = [p, d]
        for j in range(1, p):
            raw += [j * n * p * p - d, j * n * p * p + d]
        raw += [order - d, order - p]
        sets.append(_fold(order, raw))
    relations = tuple(
        ThetaRelation(j * n, i, (i + j) % p) for i in range(p) for j in range(1, p)
    )
    return FamilyInstance(order, p, tuple(sets), relations, FamilyClaim.TYPE2)


def family_verify(instance: FamilyInstance) -> FamilyVerification:
    """Re-derive every claim of a family instance from scratch.

    Checks, in order: every declared rotation relation maps its source
    onto its target exactly; pairwise multiplier witnesses decide the
    type1/type2 resolution; for a type2 resolution, the Type-2 set of the
    first member is exactly the family and its group order is the family
    size.  Any failed check raises VerificationFailure.
    """
    graphs = instance.graphs
    for rel in instance.relations:
        params = ThetaParams(instance.order, instance.m, rel.t % (instance.order // instance.m))
        image = detect_circulant(theta_image(params, graphs[rel.source]))
        if image != instance.sets[rel.target]:
            raise VerificationFailure(
                f"theta at t={rel.t} maps member {rel.source} to "
                f"{tuple(image) if image else None}, not member {rel.target}"
            )
    pairs: dict[tuple[int, int], tuple[int, ...]] = {}
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            pairs[(i, j)] = tuple(sorted(type1_witnesses(graphs[i], graphs[j])))
    witnessed = [ij for ij, w in pairs.items() if w]
    if instance.claim == FamilyClaim.TYPE2 and witnessed:
        raise VerificationFailure(
            f"claimed Type-2 family has multiplier witnesses on pairs {witnessed}"
        )
    if witnessed and len(witnessed) != len(pairs):
        raise VerificationFailure(
            f"only pairs {witnessed} are multiplier-related; family is neither "
            "uniformly type1 nor type2"
        )
    s = t2_set(instance.order, instance.m, graphs[0])
    if witnessed:
        return FamilyVerification(
            instance, "type1", pairs, s.members, t2_group(s).quotient_order
        )

    if set(s.members) != set(graphs):
        raise VerificationFailure(
            f"Type-2 set of {graphs[0]} is {[str(g) for g in s.members]}, "
            "not the family"
        )
    group = t2_group(s)
    if group.quotient_order != len(graphs):
        raise VerificationFailure(
            f"Type-2 group order {group.quotient_order} != family size {len(graphs)}"
        )
    return FamilyVerification(instance, "type2", pairs, s.members, group.quotient_order)
