"""Orbit sets and groups of the rotation transform.

Sweeping every rotation step t in [0, n/m) produces the V set of a graph.
The steps whose images are circulant partners of the base (identity or
Type-2) form a subgroup of Z_{n/m}; quotienting by the period at which the
image graph repeats gives the Type-2 group, whose order is the number of
distinct Type-2 partners plus the base.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from .core import CirculantGraph, JumpSet
from .errors import (
    BudgetExceeded,
    InvalidThetaParams,
    OrderMismatch,
    SubgroupViolation,
)
from .theta import (
    LabeledGraph,
    TClassification,
    ThetaParams,
    Verdict,
    check_theta_params,
    classify_t,
    theta_image,
)

DEFAULT_CENSUS_BUDGET = 10_000_000


@dataclass
class VSet:
    """Full rotation sweep of a base graph.

    rows[t] classifies the image at step t; raw labeled images are pure
    functions of (t, base) and are recomputed on demand via raw_image.
    graph_period is the smallest positive t whose image equals the base
    again, or n/m when none does.  findings collects empirical anomalies
    (symmetry shortcut disagreements, period violations) without failing.
    """

    base: CirculantGraph
    m: int
    rows: tuple[TClassification, ...]
    distinct: tuple[CirculantGraph, ...]
    graph_period: int
    findings: tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return self.base.n

    def raw_image(self, t: int) -> LabeledGraph:
        return theta_image(ThetaParams(self.n, self.m, t), self.base)


@dataclass
class Type2Set:
    """The base graph together with its distinct Type-2 partners.

    t2_indices are the sweep steps classified Identity or Type2; members
    keep the base first, then partners in order of first appearance.
    """

    base: CirculantGraph
    m: int
    members: tuple[CirculantGraph, ...]
    t2_indices: tuple[int, ...]
    vset: VSet


@dataclass
class OrbitGroup:
    """Additive group on sweep indices with graph-valued labels.

    indices form a subgroup of Z_modulus generated by generator; labels
    give the image jump set at each index (None when not circulant).
    Quotienting the indices by the label period yields quotient_table over
    the representatives below the period; quotient_order is its size.
    """

    modulus: int
    generator: int
    indices: tuple[int, ...]
    period: int
    labels: dict[int, JumpSet | None]
    quotient_reps: tuple[int, ...]
    quotient_table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.indices)

    @property
    def quotient_order(self) -> int:
        return len(self.quotient_reps)


@dataclass
class AppendedJumpReport:
    """Evidence that a base without an m-divisible jump has no Type-2 partner."""

    applicable: bool
    reason: str
    base: CirculantGraph | None = None
    appended: CirculantGraph | None = None
    verdicts: tuple[TClassification, ...] = ()
    passed: bool = False


@dataclass(frozen=True)
class CensusRecord:
    """One discovered Type-2 class, keyed by its least member."""

    base: CirculantGraph
    members: tuple[CirculantGraph, ...]
    group_order: int
    t2_equals_v: bool


@dataclass
class CensusSummary:
    n: int
    m: int
    sizes: tuple[int, ...]
    examined: int
    classes: int
    t2_equals_v: int


@dataclass
class CensusResult:
    records: tuple[CensusRecord, ...]
    summary: CensusSummary


def v_set(n: int, m: int, g: CirculantGraph) -> VSet:
    """Classify every rotation step of g for the divisor m."""
    if g.n != n:
        raise OrderMismatch(f"graph has order {g.n}, not {n}")
    validity = check_theta_params(n, m, g.r)
    if not validity.valid:
        raise InvalidThetaParams(
            f"(n={n}, m={m}) inadmissible for {g}: {', '.join(validity.reasons)}",
            validity.reasons,
        )
    steps = n // m
    rows = tuple(classify_t(ThetaParams(n, m, t), g) for t in range(steps))
    assert rows[0].verdict == Verdict.IDENTITY

    distinct: list[CirculantGraph] = []
    for row in rows:
        if row.image is not None:
            img = CirculantGraph(n, row.image)
            if img not in distinct:
                distinct.append(img)

    period = next((t for t in range(1, steps) if rows[t].verdict == Verdict.IDENTITY), steps)
    findings = [
        f"t={row.t}: 0-neighborhood symmetric but image not circulant"
        for row in rows
        if row.symmetry_mismatch
    ]
    identity_ts = {row.t for row in rows if row.verdict == Verdict.IDENTITY}
    if identity_ts != set(range(0, steps, period)):
        findings.append(
            f"identity steps {sorted(identity_ts)} are not the multiples of {period}"
        )
    return VSet(g, m, rows, tuple(distinct), period, tuple(findings))


def v_group(v: VSet) -> OrbitGroup:
    """The full sweep as a group on Z_{n/m} with graph labels."""
    modulus = v.n // v.m
    labels = {row.t: row.image for row in v.rows}
    return _orbit_group(modulus, tuple(range(modulus)), v.graph_period, labels)


def t2_set(n: int, m: int, g: CirculantGraph) -> Type2Set:
    """Base plus distinct Type-2 partners from the full sweep."""
    v = v_set(n, m, g)
    members = [g]
    for row in v.rows:
        if row.verdict == Verdict.TYPE2:
            img = CirculantGraph(n, row.image)
            if img not in members:
                members.append(img)
    indices = tuple(
        row.t for row in v.rows if row.verdict in (Verdict.IDENTITY, Verdict.TYPE2)
    )
    return Type2Set(g, m, tuple(members), indices, v)


def t2_group(s: Type2Set) -> OrbitGroup:
    """Group structure on the Type-2 step indices, quotiented by the period.

    Raises SubgroupViolation when the indices fail to be a subgroup of
    Z_{n/m}: that would falsify the structure this library is built on, so
    it is reported rather than repaired.
    """
    modulus = s.base.n // s.m
    idx = set(s.t2_indices)
    if 0 not in idx:
        raise SubgroupViolation("step 0 missing from Type-2 indices")
    for a in idx:
        if (modulus - a) % modulus not in idx:
            raise SubgroupViolation(f"negation of {a} missing from Type-2 indices")
        for b in idx:
            if (a + b) % modulus not in idx:
                raise SubgroupViolation(f"{a}+{b} escapes the Type-2 indices")
    labels = {
        row.t: row.image
        for row in s.vset.rows
        if row.t in idx
    }
    group = _orbit_group(modulus, s.t2_indices, s.vset.graph_period, labels)
    assert group.quotient_order == len(s.members)
    return group


def _orbit_group(
    modulus: int,
    indices: tuple[int, ...],
    period: int,
    labels: dict[int, JumpSet | None],
) -> OrbitGroup:
    generator = indices[1] if len(indices) > 1 else 0
    if generator:
        generated = set()
        k = 0
        while k not in generated:
            generated.add(k)
            k = (k + generator) % modulus
        assert generated == set(indices)
    reps = tuple(i for i in indices if i < period)
    table = []
    rep_pos = {r: i for i, r in enumerate(reps)}
    for a in reps:
        row = []
        for b in reps:
            c = (a + b) % modulus % period
            assert c in rep_pos, (a, b)
            row.append(rep_pos[c])
        table.append(tuple(row))
    _verify_group_axioms(tuple(table))
    # labels must repeat with the period
    for i in indices:
        j = (i + period) % modulus
        if j in labels:
            assert labels[i] == labels[j], f"label period broken at {i}"
    return OrbitGroup(
        modulus=modulus,
        generator=generator,
        indices=tuple(indices),
        period=period,
        labels=labels,
        quotient_reps=reps,
        quotient_table=tuple(table),
    )


def _verify_group_axioms(table: tuple[tuple[int, ...], ...]) -> None:
    k = len(table)
    elems = set(range(k))
    for row in table:
        assert set(row) <= elems
    assert all(table[0][j] == j for j in range(k))
    for i in range(k):
        assert any(table[i][j] == 0 for j in range(k)), i
        for j in range(k):
            assert table[i][j] == table[j][i]
            for l in range(k):
                assert table[table[i][j]][l] == table[i][table[j][l]]


def t2_set_equality(g: CirculantGraph, h: CirculantGraph, m: int) -> bool:
    """Whether g and h have the same Type-2 set w.r.t. m.

    Type-2 sets of a fixed (n, m) are equal or disjoint; both directions
    are re-checked on every call.
    """
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    mine = t2_set(g.n, m, g)
    member = h in mine.members
    theirs = t2_set(h.n, m, h)
    if member:
        assert set(mine.members) == set(theirs.members)
        assert g in theirs.members
    else:
        assert not set(mine.members) & set(theirs.members)
        assert g not in theirs.members
    return member


def appended_jump_check(
    n: int, m: int, jump: int, base: CirculantGraph
) -> AppendedJumpReport:
    """No-anchor bases admit no Type-2 partner even when base + jump does.

    Applicable when jump is divisible by m, absent from the base, none of
    the base jumps is divisible by m, and the augmented graph has a
    non-trivial Type-2 set.  The sweep of the bare base is returned as
    evidence: every circulant image must be the base itself or carry a
    multiplier witness, so nothing resembling a Type-2 partner appears.
    """
    if base.n != n:
        return AppendedJumpReport(False, f"base has order {base.n}, not {n}")
    if m < 2 or n % (m ** 3) != 0:
        return AppendedJumpReport(False, f"(n={n}, m={m}) fails m > 1 with m^3 | n")
    folded = min(jump % n, (n - jump) % n)
    if folded % m != 0 or folded == 0:
        return AppendedJumpReport(False, f"appended jump {jump} is not divisible by {m}")
    if folded in base.jumps:
        return AppendedJumpReport(False, f"jump {jump} already present in {base}")
    if any(j % m == 0 for j in base.jumps):
        return AppendedJumpReport(False, f"base {base} already has a jump divisible by {m}")
    augmented = CirculantGraph(n, JumpSet(n, tuple(sorted(base.jumps + (folded,)))))
    aug_t2 = t2_set(n, m, augmented)
    if len(aug_t2.members) < 2:
        return AppendedJumpReport(
            False, f"augmented graph {augmented} has no Type-2 partner"
        )
    verdicts = tuple(classify_t(ThetaParams(n, m, t), base) for t in range(n // m))
    # the base has no jump divisible by m, so classify_t can never say
    # Type2 outright; an unexplained circulant image surfaces as
    # Unclassified and counts as a failure here
    passed = all(
        row.verdict not in (Verdict.TYPE2, Verdict.UNCLASSIFIED)
        for row in verdicts
    )
    return AppendedJumpReport(
        True, "", base=base, appended=augmented, verdicts=verdicts, passed=passed
    )


def census(
    n: int,
    m: int,
    sizes: Iterable[int],
    jump_predicate: Callable[[tuple[int, ...]], bool] | None = None,
    budget: int = DEFAULT_CENSUS_BUDGET,
) -> CensusResult:
    """Enumerate canonical jump sets and collect their Type-2 classes.

    Only sets holding a jump divisible by m are swept.  Classes with more
    than one member are reported once each, keyed by the lexicographically
    least member.  The enumeration space is bounded upfront by budget.
    """
    sizes = tuple(sorted(set(sizes)))
    if m < 2 or n % (m ** 3) != 0:
        raise InvalidThetaParams(
            f"(n={n}, m={m}) fails m > 1 with m^3 | n", ()
        )
    half = n // 2
    space = sum(comb(half, k) for k in sizes if k <= half)
    if space > budget:
        raise BudgetExceeded(
            f"{space} candidate sets exceed the budget of {budget}"
        )
    records: list[CensusRecord] = []
    seen: set[tuple[tuple[int, ...], ...]] = set()
    examined = 0
    coincidences = 0
    for k in sizes:
        for combo in itertools.combinations(range(1, half + 1), k):
            if not any(j % m == 0 for j in combo):
                continue
            if jump_predicate is not None and not jump_predicate(combo):
                continue
            g = CirculantGraph(n, JumpSet(n, combo))
            s = t2_set(n, m, g)
            examined += 1
            all_partner = all(
                row.verdict in (Verdict.IDENTITY, Verdict.TYPE2)
                for row in s.vset.rows
            )
            if all_partner:
                coincidences += 1
            if len(s.members) < 2:
                continue
            key = tuple(sorted(x.jumps for x in s.members))
            if key in seen:
                continue
            seen.add(key)
            ordered = tuple(CirculantGraph(n, JumpSet(n, js)) for js in key)
            group = t2_group(s)
            records.append(
                CensusRecord(
                    base=ordered[0],
                    members=ordered,
                    group_order=group.quotient_order,
                    t2_equals_v=all_partner,
                )
            )
    summary = CensusSummary(
        n=n,
        m=m,
        sizes=sizes,
        examined=examined,
        classes=len(records),
        t2_equals_v=coincidences,
    )
    return CensusResult(tuple(records), summary)
