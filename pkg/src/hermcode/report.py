"""JSON / CSV / text rendering of library results.

JSON and CSV are the stable formats; text is for people and may change.
Every emitter is a pure function of its input, so output is byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources
from typing import Any, Sequence

from .curve import CurvePoint
from .onepoint import LinearCode
from .picard import LemmaReport
from .prospector import AsymptoticProfile, ProspectReport
from .zeta import ZetaProfile

FORMATS = ("json", "csv", "text")


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def dump_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else _cell(v) for v in row])
    return buf.getvalue()


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def load_schema(kind: str) -> dict:
    text = resources.files("hermcode.schemas").joinpath(f"{kind}.schema.json").read_text()
    return json.loads(text)


def point_str(P: CurvePoint) -> str:
    if P.is_infinity:
        return "inf"
    F = P.x.field
    return f"{F.coeff_string(P.x.value)},{F.coeff_string(P.y.value)}"


def _matrix_rows(code: LinearCode) -> list[list[str]]:
    F = code.field
    return [[F.coeff_string(e.value) for e in row] for row in code.rows]


# -- zeta -----------------------------------------------------------------------


def zeta_payload(p: ZetaProfile) -> dict:
    return {
        "kind": "zeta",
        "q": p.q,
        "genus": p.genus,
        "l_polynomial": list(p.l_polynomial),
        "class_number": p.class_number,
        "A": list(p.a),
        "bounds": [
            {
                "k": b.k,
                "A_k": b.a_k,
                "exponent": b.exponent,
                "bound_numerator": b.bound_numerator,
                "bound_denominator": b.bound_denominator,
                "holds": b.holds,
            }
            for b in p.bounds
        ],
    }


ZETA_HEADER = ("k", "A_k", "exponent", "bound_numerator", "bound_denominator", "holds")


def zeta_csv(p: ZetaProfile) -> str:
    return dump_csv(
        ZETA_HEADER,
        [(b.k, b.a_k, b.exponent, b.bound_numerator, b.bound_denominator, b.holds) for b in p.bounds],
    )


def zeta_text(p: ZetaProfile) -> str:
    lines = [
        f"Hermitian curve over F_{p.q**2}: genus {p.genus}",
        f"L(T) coefficients: {list(p.l_polynomial)}",
        f"class number h = {p.class_number}",
        "",
        f"{'k':>4}  {'A_k':>24}  {'h q^(2k+2-2g)':>28}  holds",
    ]
    for b in p.bounds:
        lines.append(f"{b.k:>4}  {b.a_k:>24}  {b.bound:>28}  {'yes' if b.holds else 'NO'}")
    return "\n".join(lines) + "\n"


# -- one-point codes -----------------------------------------------------------------


def code_payload(
    code: LinearCode,
    *,
    genus: int,
    band: tuple[int, int] | None,
    distance: Any = None,
    include_matrix: bool = False,
) -> dict:
    F = code.field
    payload: dict[str, Any] = {
        "kind": "code",
        "q": code.q,
        "field": {"cardinality": F.cardinality, "modulus": F.modulus_string()},
        "n": code.n,
        "k": code.k,
        "t": code.design_degree,
        "genus": genus,
        "goppa_d_lower": code.d_lower,
        "yang_kumar_band": list(band) if band else None,
        "d_exact": None,
        "witness": None,
        "enumerated": None,
    }
    if distance is not None:
        payload["d_exact"] = distance.d
        payload["witness"] = [F.coeff_string(e.value) for e in distance.witness]
        payload["enumerated"] = distance.enumerated
    if include_matrix:
        payload["generator_matrix"] = [
            {"monomial": label, "entries": entries} for label, entries in zip(code.row_labels, _matrix_rows(code))
        ]
    return payload


def code_csv(code: LinearCode, monomials: Sequence[Any]) -> str:
    q = code.q
    header = ["monomial", "a", "b", "pole_order"] + [f"p{j}" for j in range(code.n)]
    rows = [
        [str(mono), mono.a, mono.b, mono.pole_order(q)] + entries
        for mono, entries in zip(monomials, _matrix_rows(code))
    ]
    return dump_csv(header, rows)


def code_text(payload: dict) -> str:
    lines = [
        f"one-point Hermitian code over F_{payload['q'] ** 2} (t = {payload['t']})",
        f"[n, k] = [{payload['n']}, {payload['k']}], genus {payload['genus']}",
        f"Goppa bound d >= {payload['goppa_d_lower']}",
    ]
    if payload["yang_kumar_band"]:
        lo, hi = payload["yang_kumar_band"]
        lines.append(f"true distance lies in [{lo}, {hi})")
    if payload["d_exact"] is not None:
        lines.append(f"exact minimum distance d = {payload['d_exact']} ({payload['enumerated']} messages)")
    for row in payload.get("generator_matrix", []):
        lines.append(f"  {row['monomial']:>10}: " + " ".join(row["entries"]))
    return "\n".join(lines) + "\n"


# -- prospect ------------------------------------------------------------------------

PROSPECT_HEADER = ("l", "t", "s", "k", "d_lower", "goppa_d_lower", "improvement", "criterion")


def prospect_payload(r: ProspectReport) -> dict:
    return {
        "kind": "prospect",
        "q": r.q,
        "n": r.n,
        "genus": r.genus,
        "class_number": r.class_number,
        "criterion": r.criterion,
        "k_min": r.k_min,
        "t_max": r.t_max,
        "l_max": r.l_max,
        "best_improvement": r.best_improvement,
        "reference_improvement": r.reference_improvement,
        "rows": [{h: getattr(row, h) for h in PROSPECT_HEADER} for row in r.rows],
    }


def prospect_csv(r: ProspectReport) -> str:
    return dump_csv(PROSPECT_HEADER, [[getattr(row, h) for h in PROSPECT_HEADER] for row in r.rows])


def prospect_text(r: ProspectReport) -> str:
    lines = [
        f"q = {r.q}, n = {r.n}, g = {r.genus}, h = {r.class_number}",
        f"criterion {r.criterion}, k >= {r.k_min}, 0 <= t <= {r.t_max}, 1 <= l <= {r.l_max}",
        "",
        "  ".join(f"{h:>13}" for h in PROSPECT_HEADER),
    ]
    for row in r.rows:
        lines.append("  ".join(f"{getattr(row, h)!s:>13}" for h in PROSPECT_HEADER))
    if not r.rows:
        lines.append("(no parameters satisfy the criterion)")
    lines.append("")
    best = r.best_improvement
    lines.append(
        f"best improvement over the Goppa bound: {best if best is not None else 'none'}; "
        f"earlier Hermitian constructions reach about g - q = {r.reference_improvement}"
    )
    return "\n".join(lines) + "\n"


# -- asymptotic ----------------------------------------------------------------------

ASYMPTOTIC_FIELDS = (
    "q", "n", "genus", "ratio", "alpha", "theta", "entropy", "margin", "theta_star", "l", "t", "s", "k",
    "d_lower", "goppa_d_lower", "k_plus_d_lower", "improvement", "predicted_improvement", "k_positive",
    "theta_in_unit_interval", "prop23_at_choice", "exact_at_choice",
)  # fmt: skip


def asymptotic_payload(p: AsymptoticProfile) -> dict:
    payload = {"kind": "asymptotic"}
    payload.update({f: getattr(p, f) for f in ASYMPTOTIC_FIELDS})
    payload["improvement_gap"] = p.improvement_gap
    return payload


def asymptotic_csv(p: AsymptoticProfile) -> str:
    return dump_csv(ASYMPTOTIC_FIELDS, [[getattr(p, f) for f in ASYMPTOTIC_FIELDS]])


def asymptotic_text(p: AsymptoticProfile) -> str:
    lines = [
        f"q = {p.q}, n = {p.n}, g = {p.genus}, alpha = {p.alpha:.6g} (n * alpha = {p.ratio:g})",
        f"H2(alpha) = {p.entropy:.9f}, theta* = {p.theta_star:.9f}, theta = {p.theta:.9f}",
        f"margin at theta = {p.margin:.3e}",
        f"l = {p.l}, t = {p.t}, s = {p.s}, k = {p.k}, d >= {p.d_lower}, k + d >= {p.k_plus_d_lower}",
        f"improvement over Goppa = {p.improvement} (g - 4 = {p.predicted_improvement}, gap {p.improvement_gap})",
        f"k >= 1: {'yes' if p.k_positive else 'NO (the guaranteed code is trivial)'}",
        f"theta in (0, 1): {'yes' if p.theta_in_unit_interval else 'no'}",
    ]
    return "\n".join(lines) + "\n"


# -- verify-lemma --------------------------------------------------------------------


def lemma_payload(r: LemmaReport) -> dict:
    payload: dict[str, Any] = {
        "kind": "verify-lemma",
        "q": 2,
        "eval_set": [point_str(P) for P in r.eval_set],
        "n": r.n,
        "s": r.s,
        "m": r.m,
        "hit_classes": r.hit_classes,
        "class_number": r.class_number,
        "class": None,
        "divisor": None,
        "translation": None,
        "basis": [f.describe() for f in r.basis],
        "generator_matrix": None,
        "k": r.k,
        "k_expected": r.k_expected,
        "d_exact": r.d_exact,
        "d_required": r.d_required,
        "status": "no-unhit-class" if r.found is None else ("pass" if r.passed else "fail"),
    }
    if r.found is not None:
        payload["class"] = {"degree": r.found.degree, "point": point_str(r.found.point)}
        payload["divisor"] = [{"point": point_str(P), "multiplicity": c} for P, c in r.divisor.terms]
        payload["translation"] = None if r.translation is None else point_str(r.translation)
        payload["generator_matrix"] = _matrix_rows(r.code)
    return payload


LEMMA_HEADER = ("n", "s", "m", "hit_classes", "class_number", "class_point", "k", "d_exact", "d_required", "status")


def lemma_csv(r: LemmaReport) -> str:
    p = lemma_payload(r)
    cls = p["class"]["point"] if p["class"] else None
    return dump_csv(
        LEMMA_HEADER,
        [[p["n"], p["s"], p["m"], p["hit_classes"], p["class_number"], cls, p["k"], p["d_exact"], p["d_required"],
          p["status"]]],
    )  # fmt: skip


def lemma_text(r: LemmaReport) -> str:
    lines = [
        "curve y^2 + y = x^3 over F_4 (genus 1, h = 9)",
        "evaluation set: " + ", ".join(repr(P) for P in r.eval_set),
        f"s = {r.s}, m = {r.m}: {r.hit_classes} of {r.class_number} classes hit",
    ]
    if r.found is None:
        lines.append("every class is hit; nothing to construct")
        return "\n".join(lines) + "\n"
    lines.append(f"chosen class: degree {r.found.degree}, point {r.found.point!r}")
    lines.append(f"divisor G = {r.divisor!r}")
    if r.translation is not None:
        lines.append(f"(basis translated by {r.translation!r})")
    lines.append("basis of L(G):")
    lines.extend(f"  {f}" for f in r.basis)
    lines.append(f"[n, k, d] = [{r.n}, {r.k}, {r.d_exact}]; need k = {r.k_expected}, d >= {r.d_required}")
    lines.append("PASS" if r.passed else "FAIL")
    return "\n".join(lines) + "\n"
