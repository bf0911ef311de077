"""Multiplier (Type-1) isomorphisms of circulant graphs.

Multiplying every vertex by a unit x of Z_n is a graph isomorphism
C_n(R) -> C_n(xR).  The distinct images form the Type-1 set of the graph,
the units witnessing each image partition the unit group, and composition
of multipliers makes the Type-1 set an Abelian group.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import CirculantGraph, JumpSet, reflexive_reduce
from .errors import NotAUnit, OrderMismatch


@dataclass(frozen=True)
class UnitGroup:
    """The multiplicative group of units of Z_n."""

    n: int
    units: tuple[int, ...]

    def __len__(self):
        return len(self.units)


@dataclass
class Type1Set:
    """All multiplier images of a base graph, with their witnesses.

    members are ordered lexicographically on jump sequences; witness maps
    each member to the sorted units producing it.
    """

    base: CirculantGraph
    members: tuple[CirculantGraph, ...]
    witness: dict[CirculantGraph, tuple[int, ...]]


@dataclass
class Type1Group:
    """Group structure on a Type-1 set under multiplier composition.

    representatives[i] is the smallest unit mapping the base onto
    members[i]; table[i][j] is the member index of the composed image.
    """

    carrier: Type1Set
    representatives: tuple[int, ...]
    stabilizer: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.carrier.members)


def units(n: int) -> UnitGroup:
    """Units of Z_n, ascending."""
    if n < 2:
        raise ValueError(f"unit group needs n >= 2, got {n}")
    return UnitGroup(n, tuple(x for x in range(1, n) if gcd(n, x) == 1))


def phi_apply(n: int, x: int, r: JumpSet) -> JumpSet:
    """Image of a jump set under multiplication by the unit x."""
    if r.n != n:
        raise OrderMismatch(f"jump set is for order {r.n}, not {n}")
    if gcd(n, x % n) != 1:
        raise NotAUnit(f"{x} is not a unit mod {n}")
    image = reflexive_reduce(n, (x * j % n for j in r.jumps))
    # a unit multiple never collapses two folded jumps
    assert len(image) == len(r)
    return image


def type1_set(g: CirculantGraph) -> Type1Set:
    """Sweep every unit and collect the distinct multiplier images."""
    buckets: dict[JumpSet, list[int]] = {}
    for x in units(g.n).units:
        buckets.setdefault(phi_apply(g.n, x, g.r), []).append(x)
    members = tuple(CirculantGraph(g.n, js) for js in sorted(buckets))
    witness = {m: tuple(buckets[m.r]) for m in members}
    assert sum(len(w) for w in witness.values()) == len(units(g.n))
    return Type1Set(base=g, members=members, witness=witness)


def type1_witnesses(g: CirculantGraph, h: CirculantGraph) -> frozenset[int]:
    """Units x with xR = S, i.e. witnesses that h is a multiplier image of g."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    return frozenset(
        x for x in units(g.n).units if phi_apply(g.n, x, g.r) == h.r
    )


def type1_group(g: CirculantGraph) -> Type1Group:
    """Composition group on the Type-1 set of g.

    Well-definedness comes from the witness sets being cosets of the
    stabilizer, which is re-checked here rather than assumed.
    """
    ts = type1_set(g)
    n = g.n
    base = CirculantGraph(n, g.r)
    stabilizer = ts.witness[base]
    stab_set = set(stabilizer)
    # the stabilizer must be a subgroup of the units ...
    assert 1 in stab_set
    for a in stabilizer:
        for b in stabilizer:
            assert a * b % n in stab_set, (a, b)
    # ... and every witness set one of its cosets
    reps = tuple(min(ts.witness[m]) for m in ts.members)
    for m, rep in zip(ts.members, reps):
        assert set(ts.witness[m]) == {rep * s % n for s in stabilizer}, m

    index = {m.r: i for i, m in enumerate(ts.members)}
    table = tuple(
        tuple(index[phi_apply(n, a * b % n, g.r)] for b in reps) for a in reps
    )
    _check_abelian(table, index[base.r])
    return Type1Group(carrier=ts, representatives=reps, stabilizer=stabilizer, table=table)


def type1_set_equality(g: CirculantGraph, h: CirculantGraph) -> bool:
    """Whether g and h generate the same Type-1 set.

    Membership of h in the Type-1 set of g, equality of the two sets, and
    membership of g in the Type-1 set of h are equivalent; the equivalence
    is re-checked on every call.
    """
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    mine = type1_set(g)
    member = h in mine.members
    theirs = type1_set(h)
    if member:
        assert set(mine.members) == set(theirs.members)
        assert g in theirs.members
    else:
        assert not set(mine.members) & set(theirs.members)
        assert g not in theirs.members
    return member


def _check_abelian(table: tuple[tuple[int, ...], ...], identity: int) -> None:
    """Assert the composition table is an Abelian group with the given identity."""
    k = len(table)
    elems = set(range(k))
    for row in table:
        assert set(row) <= elems
    assert all(table[identity][j] == j for j in range(k))
    for i in range(k):
        assert any(table[i][j] == identity for j in range(k)), i
        for j in range(k):
            assert table[i][j] == table[j][i]
            for l in range(k):
                assert table[table[i][j]][l] == table[i][table[j][l]]
