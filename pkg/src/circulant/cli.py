"""Command line interface.

JSON envelopes on stdout are the contract: fixed key order, sorted sets,
byte-identical across runs for the same inputs.  Table and csv formats are
projections of the same data.  Findings (empirical anomalies worth a look,
never errors) go to stderr.

Exit codes: 0 success, 2 invalid input, 3 invalid rotation parameters,
4 invalid family parameters, 5 verification failure, 6 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .core import CirculantGraph, make_circulant, symmetric_closure
from .errors import (
    BudgetExceeded,
    CirculantError,
    InvalidFamilyParams,
    InvalidThetaParams,
    VerificationFailure,
)
from .families import (
    FamilyInstance,
    FamilyVerification,
    family_general_p,
    family_m2,
    family_m2_general,
    family_m3,
    family_m3_general,
    family_m5,
    family_m5_general,
    family_m7,
    family_m7_general,
    family_verify,
)
from .groups import DEFAULT_CENSUS_BUDGET, OrbitGroup, census, t2_group, t2_set, v_group, v_set
from .oracle import (
    BRUTE_FORCE_CAP,
    brute_force_isomorphic,
    gcd_signature_check,
    spectral_fingerprint,
)
from .theta import Verdict, check_theta_params, classification_table
from .type1 import type1_group, type1_set, type1_witnesses

BUDGET_ENV = "CIRCULANT_CENSUS_BUDGET"

_DISPLAY = {
    Verdict.NON_CIRCULANT: "NS",
    Verdict.IDENTITY: "Yes (Identity)",
    Verdict.TYPE1: "T1",
    Verdict.TYPE2: "Yes (Type-2)",
    Verdict.UNCLASSIFIED: "Yes (unclassified)",
}


def _graph_json(g: CirculantGraph) -> dict:
    return {"n": g.n, "jumps": list(g.jumps)}


def _orbit_group_json(group: OrbitGroup) -> dict:
    return {
        "modulus": group.modulus,
        "generator": group.generator,
        "order": group.quotient_order,
        "labels": [
            {
                "t": t,
                "jumps": list(group.labels[t]) if group.labels[t] is not None else None,
            }
            for t in group.indices
        ],
    }


def _parse_jumps(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v != ""]
    except ValueError as exc:
        raise CirculantError(f"cannot parse jump list {text!r}") from exc


def _parse_t_range(text: str, upper: int) -> list[int]:
    text = text.replace(" ", "")
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",")]


def _emit(args, envelope: dict, rows=None) -> None:
    findings = envelope.get("findings", [])
    for note in findings:
        print(f"finding: {note}", file=sys.stderr)
    if args.format == "json":
        text = json.dumps(envelope, indent=2)
    elif args.format == "csv":
        text = _render_csv(rows if rows is not None else envelope)
    else:
        text = _render_table(rows if rows is not None else envelope)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _render_table(rows) -> str:
    if isinstance(rows, dict):
        rows = [rows]
    if not rows:
        return "(empty)"
    headers = list(rows[0])
    cells = [[_cell(r[h]) for h in headers] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for c in cells:
        lines.append("  ".join(v.rjust(w) for v, w in zip(c, widths)).rstrip())
    return "\n".join(lines)


def _render_csv(rows) -> str:
    if isinstance(rows, dict):
        rows = [rows]
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
    writer.writeheader()
    for r in rows:
        writer.writerow({k: _cell(v) for k, v in r.items()})
    return buf.getvalue().rstrip("\n")


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if v is None:
        return "-"
    return str(v)


def cmd_reduce(args) -> int:
    g = make_circulant(args.n, _parse_jumps(args.set))
    envelope = {
        "command": "reduce",
        "inputs": {"n": args.n, "values": _parse_jumps(args.set)},
        "result": _graph_json(g),
        "findings": [],
    }
    _emit(args, envelope, [_graph_json(g)])
    return 0


def cmd_t1set(args) -> int:
    g = make_circulant(args.n, _parse_jumps(args.set))
    group = type1_group(g)
    ts = group.carrier
    members = [
        {"jumps": list(m.jumps), "multipliers": list(ts.witness[m])} for m in ts.members
    ]
    envelope = {
        "command": "t1set",
        "inputs": {"n": args.n, "set": list(g.jumps)},
        "result": {
            "base": _graph_json(g),
            "members": members,
            "group": {
                "order": group.order,
                "stabilizer": list(group.stabilizer),
                "representatives": list(group.representatives),
                "table": [list(row) for row in group.table],
            },
        },
        "findings": [],
    }
    _emit(args, envelope, members)
    return 0


def cmd_t2set(args) -> int:
    g = make_circulant(args.n, _parse_jumps(args.set))
    s = t2_set(args.n, args.m, g)
    group = t2_group(s)
    envelope = {
        "command": "t2set",
        "inputs": {"n": args.n, "m": args.m, "set": list(g.jumps)},
        "result": {
            "base": _graph_json(g),
            "members": [_graph_json(x) for x in s.members],
            "t2_indices": list(s.t2_indices),
            "graph_period": s.vset.graph_period,
            "group": _orbit_group_json(group),
        },
        "findings": list(s.vset.findings),
    }
    _emit(args, envelope, [_graph_json(x) for x in s.members])
    return 0


def cmd_vset(args) -> int:
    g = make_circulant(args.n, _parse_jumps(args.set))
    v = v_set(args.n, args.m, g)
    group = v_group(v)
    rows = [
        {
            "t": row.t,
            "verdict": row.verdict.value,
            "jumps": list(row.image) if row.image is not None else None,
        }
        for row in v.rows
    ]
    envelope = {
        "command": "vset",
        "inputs": {"n": args.n, "m": args.m, "set": list(g.jumps)},
        "result": {
            "base": _graph_json(g),
            "rows": rows,
            "distinct": [_graph_json(x) for x in v.distinct],
            "graph_period": v.graph_period,
            "group": {
                "modulus": group.modulus,
                "generator": group.generator,
                "order": group.order,
            },
        },
        "findings": list(v.findings),
    }
    _emit(args, envelope, rows)
    return 0


def cmd_table(args) -> int:
    g = make_circulant(args.n, _parse_jumps(args.set))
    steps = args.n // args.m
    t_values = _parse_t_range(args.t, steps) if args.t else list(range(steps))
    for t in t_values:
        if not 0 <= t < steps:
            raise InvalidThetaParams(f"step t={t} outside [0, {steps - 1}]", ())
    table = classification_table(args.n, args.m, g, t_values, threads=args.threads)
    closure = sorted(symmetric_closure(g).values)
    rows = []
    findings = []
    for entry in table:
        cls = entry.classification
        rows.append(
            {
                "t": entry.t,
                "values": list(entry.transformed),
                "verdict": cls.verdict.value,
                "display": _DISPLAY[cls.verdict],
                "image": list(cls.image) if cls.image is not None else None,
                "witnesses": list(cls.witnesses),
            }
        )
        if cls.symmetry_mismatch:
            findings.append(
                f"t={entry.t}: 0-neighborhood symmetric but image not circulant"
            )
    envelope = {
        "command": "table",
        "inputs": {"n": args.n, "m": args.m, "set": list(g.jumps), "t": t_values},
        "result": {"columns": closure, "rows": rows},
        "findings": findings,
    }
    flat = [
        {"t": r["t"], **{str(c): v for c, v in zip(closure, r["values"])}, "circulant?": r["display"]}
        for r in rows
    ]
    _emit(args, envelope, flat)
    return 0


def cmd_family(args) -> int:
    instance = _build_family(args)
    verification = family_verify(instance)
    envelope = {
        "command": "family",
        "inputs": _family_inputs(args),
        "result": _family_json(instance, verification),
        "findings": [],
    }
    _emit(args, envelope, [{"member": i, "jumps": list(s)} for i, s in enumerate(instance.sets)])
    return 0


def _build_family(args) -> FamilyInstance:
    kind = args.kind
    p_list = tuple(_parse_jumps(args.p_list)) if args.p_list else ()
    if kind == "m2":
        return family_m2(args.family_n, args.s)
    if kind == "m2-general":
        return family_m2_general(args.family_n, args.s, p_list, args.y)
    if kind == "m3":
        return family_m3(args.family_n)
    if kind == "m3-general":
        return family_m3_general(args.family_n, p_list)
    if kind == "m5":
        return family_m5(args.family_n)
    if kind == "m5-general":
        return family_m5_general(args.family_n, p_list)
    if kind == "m7":
        return family_m7(args.family_n)
    if kind == "m7-general":
        return family_m7_general(args.family_n, p_list)
    if kind == "general-p":
        return family_general_p(args.p, args.family_n, args.x, args.y)
    raise InvalidFamilyParams(f"unknown family kind {kind!r}")


def _family_inputs(args) -> dict:
    inputs = {"kind": args.kind, "n": args.family_n}
    for name in ("s", "p", "x", "y"):
        value = getattr(args, name)
        if value is not None:
            inputs[name] = value
    if args.p_list:
        inputs["p_list"] = _parse_jumps(args.p_list)
    return inputs


def _family_json(instance: FamilyInstance, verification: FamilyVerification) -> dict:
    return {
        "order": instance.order,
        "m": instance.m,
        "sets": [list(s) for s in instance.sets],
        "relations": [[r.t, r.source, r.target] for r in instance.relations],
        "claim": instance.claim.value,
        "verification": {
            "resolved": verification.resolved,
            "t2_members": [_graph_json(x) for x in verification.t2_members],
            "group_order": verification.group_order,
        },
    }


def cmd_iso(args) -> int:
    g = make_circulant(args.n, _parse_jumps(args.a))
    h = make_circulant(args.n, _parse_jumps(args.b))
    result: dict = {"a": _graph_json(g), "b": _graph_json(h)}
    if g == h:
        result["relation"] = "equal"
        return _finish_iso(args, result)
    wits = sorted(type1_witnesses(g, h))
    if wits:
        result["relation"] = "type1"
        result["multipliers"] = wits
        return _finish_iso(args, result)
    m_candidates = (
        [args.m] if args.m else list(check_theta_params(args.n, 2, g.r).admissible_m)
    )
    for m in m_candidates:
        validity = check_theta_params(args.n, m, g.r)
        if not validity.valid:
            if args.m:
                raise InvalidThetaParams(
                    f"(n={args.n}, m={m}) inadmissible: {', '.join(validity.reasons)}",
                    validity.reasons,
                )
            continue
        steps = [
            row.t
            for row in t2_set(args.n, m, g).vset.rows
            if row.verdict == Verdict.TYPE2 and row.image == h.r
        ]
        if steps:
            result["relation"] = "type2"
            result["m"] = m
            result["t"] = steps
            return _finish_iso(args, result)
    if not gcd_signature_check(g, h) or spectral_fingerprint(g) != spectral_fingerprint(h):
        result["relation"] = "not-isomorphic"
        result["evidence"] = "invariant mismatch"
        return _finish_iso(args, result)
    if args.n > args.cap:
        result["relation"] = "inconclusive"
        result["evidence"] = f"order above brute-force cap {args.cap}"
        return _finish_iso(args, result)
    witness = brute_force_isomorphic(g, h, cap=args.cap)
    if witness is None:
        result["relation"] = "not-isomorphic"
        result["evidence"] = "exhaustive search refutation"
    else:
        result["relation"] = "isomorphic-unclassified"
        result["mapping"] = list(witness.mapping)
    return _finish_iso(args, result)


def _finish_iso(args, result: dict) -> int:
    envelope = {
        "command": "iso",
        "inputs": {"n": args.n, "a": result["a"]["jumps"], "b": result["b"]["jumps"]},
        "result": result,
        "findings": [],
    }
    _emit(args, envelope, [{"relation": result["relation"]}])
    return 0


def cmd_census(args) -> int:
    sizes = _parse_t_range(args.sizes, args.n // 2 + 1)
    budget = args.budget
    result = census(args.n, args.m, sizes, budget=budget)
    lines = []
    for record in result.records:
        lines.append(
            {
                "type": "class",
                "base": _graph_json(record.base),
                "members": [_graph_json(x) for x in record.members],
                "group_order": record.group_order,
                "t2_equals_v": record.t2_equals_v,
            }
        )
    summary = {
        "type": "summary",
        "n": result.summary.n,
        "m": result.summary.m,
        "sizes": list(result.summary.sizes),
        "examined": result.summary.examined,
        "classes": result.summary.classes,
        "t2_equals_v": result.summary.t2_equals_v,
    }
    if args.format == "json":
        text = "\n".join(json.dumps(x) for x in lines + [summary])
    else:
        rows = [
            {
                "base": " ".join(map(str, r["base"]["jumps"])),
                "members": len(r["members"]),
                "group_order": r["group_order"],
                "t2_equals_v": r["t2_equals_v"],
            }
            for r in lines
        ] or [{"base": "(none)", "members": 0, "group_order": "-", "t2_equals_v": "-"}]
        text = _render_table(rows) + f"\nexamined={summary['examined']} classes={summary['classes']} t2_equals_v={summary['t2_equals_v']}"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant",
        description="Circulant graph isomorphism toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "table", "csv"), default="json")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument("--threads", type=int, default=1, help="sweep worker threads")

    p = sub.add_parser("reduce", help="fold jump values to canonical form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, help="comma-separated jump values")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("t1set", help="multiplier images and their group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True)
    common(p)
    p.set_defaults(func=cmd_t1set)

    p = sub.add_parser("t2set", help="rotation partners and their group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--set", required=True)
    common(p)
    p.set_defaults(func=cmd_t2set)

    p = sub.add_parser("vset", help="full rotation sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--set", required=True)
    common(p)
    p.set_defaults(func=cmd_vset)

    p = sub.add_parser("table", help="per-step transformed jumps and verdicts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--t", help="steps to show, e.g. 0..6 or 0,2,4 (default all)")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("family", help="generate and verify a parametric family")
    p.add_argument("--kind", required=True, choices=(
        "m2", "m2-general", "m3", "m3-general", "m5", "m5-general",
        "m7", "m7-general", "general-p",
    ))
    p.add_argument("--n", dest="family_n", type=int, required=True, help="family parameter n")
    p.add_argument("--s", type=int, help="odd-jump parameter for m2 kinds")
    p.add_argument("--p", type=int, help="odd prime for general-p")
    p.add_argument("--x", type=int, help="multiplier parameter for general-p")
    p.add_argument("--y", type=int, help="offset parameter (m2-general, general-p)")
    p.add_argument("--p-list", help="comma-separated extra jump multipliers")
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("iso", help="classify the relation between two graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--m", type=int, help="restrict the rotation divisor")
    p.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP, help="brute-force order cap")
    common(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("census", help="sweep all jump sets of given sizes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--sizes", required=True, help="e.g. 3 or 3,4 or 3..4")
    p.add_argument(
        "--budget",
        type=int,
        default=int(os.environ.get(BUDGET_ENV, DEFAULT_CENSUS_BUDGET)),
        help="maximum number of candidate sets",
    )
    common(p)
    p.set_defaults(func=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidThetaParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvalidFamilyParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except VerificationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    except (CirculantError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
