"""JSON and text forms of case tables.

JSON layout::

    {"degrees": [3, 3, 4], "monic": false, "algorithm": "sylvester",
     "cases": [{"delta": [3, 0], "r": Poly, "R": Poly,
                "conditions": [{"poly": Poly, "nonzero": true}, ...]}]}

    Poly = {"terms": [{"c": "-12", "x": 1, "a": [[0, 3, 2], [1, 4, 1]]}]}

Integer coefficients are decimal strings so that no JSON parser rounds them.
``conditions`` is always present for the recursive baseline (its guards are
not order-based) and for other tables only when explicitly requested.
"""

from __future__ import annotations

import json
from typing import Any

from .polyring import ParamId, ParamPoly, XPoly
from .subres import DegreeVector
from .sylvester_gcd import CaseTable, GcdCase

__all__ = [
    "poly_to_json",
    "poly_from_json",
    "table_to_json",
    "table_from_json",
    "dumps",
    "loads",
    "table_to_text",
]


def poly_to_json(p: XPoly | ParamPoly) -> dict:
    if isinstance(p, ParamPoly):
        terms = ((0, exps, c) for exps, c in p.terms())
    else:
        terms = p.terms()
    return {
        "terms": [
            {"c": str(c), "x": k, "a": [[pid[0], pid[1], e] for pid, e in exps]}
            for k, exps, c in terms
        ]
    }


def _terms_by_power(obj: dict) -> dict[int, list]:
    out: dict[int, list] = {}
    for t in obj["terms"]:
        exps = tuple((ParamId(i, j), e) for i, j, e in t["a"])
        out.setdefault(int(t["x"]), []).append((exps, int(t["c"])))
    return out


def poly_from_json(obj: dict) -> XPoly:
    by_power = _terms_by_power(obj)
    return XPoly.from_dict({k: ParamPoly.from_terms(v) for k, v in by_power.items()})


def param_poly_from_json(obj: dict) -> ParamPoly:
    by_power = _terms_by_power(obj)
    if set(by_power) - {0}:
        raise ValueError("a guard polynomial must not contain x")
    return ParamPoly.from_terms(by_power.get(0, []))


def table_to_json(table: CaseTable, explicit_conditions: bool = False) -> dict[str, Any]:
    cases = []
    for i, case in enumerate(table.cases):
        entry = {
            "delta": list(case.delta),
            "r": poly_to_json(case.r),
            "R": poly_to_json(case.R),
        }
        if table.explicit or explicit_conditions:
            entry["conditions"] = [
                {"poly": poly_to_json(p), "nonzero": nz} for p, nz in table.guard(i)
            ]
        cases.append(entry)
    return {
        "degrees": list(table.degrees),
        "monic": table.monic,
        "algorithm": table.algorithm,
        "cases": cases,
    }


def table_from_json(obj: dict[str, Any]) -> CaseTable:
    explicit = obj["algorithm"] == "recursive"
    cases = []
    for c in obj["cases"]:
        conds: tuple = ()
        if explicit:
            conds = tuple(
                (param_poly_from_json(g["poly"]), bool(g["nonzero"])) for g in c["conditions"]
            )
        cases.append(
            GcdCase(tuple(c["delta"]), param_poly_from_json(c["r"]), poly_from_json(c["R"]), conds)
        )
    return CaseTable(
        DegreeVector(tuple(obj["degrees"])),
        bool(obj["monic"]),
        tuple(cases),
        obj["algorithm"],
        explicit=explicit,
    )


def dumps(table: CaseTable, explicit_conditions: bool = False, indent: int | None = 1) -> str:
    return json.dumps(table_to_json(table, explicit_conditions), indent=indent)


def loads(text: str) -> CaseTable:
    return table_from_json(json.loads(text))


def table_to_text(table: CaseTable, explicit_conditions: bool = False) -> str:
    lines = [
        f"degrees: {','.join(map(str, table.degrees))}",
        f"algorithm: {table.algorithm}",
        f"monic: {str(table.monic).lower()}",
        f"cases: {len(table)}",
    ]
    for i, case in enumerate(table.cases):
        lines.append(f"[{i + 1}] delta=({','.join(map(str, case.delta))})")
        if table.explicit or explicit_conditions:
            for p, nz in table.guard(i):
                lines.append(f"  {'!=' if nz else '=='} 0: {p}")
        else:
            word = "if" if i == 0 else "else if"
            lines.append(f"  {word} r != 0: {case.r}")
        lines.append(f"  gcd: {case.R}")
    return "\n".join(lines) + "\n"
