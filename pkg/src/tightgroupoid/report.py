"""JSON report documents and DOT export.

Serialized output is byte stable for fixed inputs: keys are sorted,
collections are emitted in sorted order, and wall-clock timings stay out
of the payload unless explicitly requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .criteria import Analysis
from .germs import GermGroupoid
from .semigroup import InverseSemigroup

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ReportDocument:
    """Instance metadata plus the verdict payload, JSON ready."""

    payload: dict
    timing: dict | None = None


def _names(sg: InverseSemigroup, items) -> list:
    return [sg.name_of(i) for i in sorted(items)]


def _hausdorff_witness(sg, witness):
    return {"covers": {sg.name_of(s): _names(sg, cov)
                       for s, cov in sorted(witness.get("covers", {}).items())}}


def _top_free_witness(sg, witness):
    out = {}
    if "failures" in witness:
        out["failures"] = [
            {"s": sg.name_of(w["s"]), "e": sg.name_of(w["e"]),
             "uncovered": sg.name_of(w["uncovered"])}
            for w in witness["failures"]
        ]
    if "fixed_covers" in witness:
        out["fixed_covers"] = {
            f"s={sg.name_of(s)} e={sg.name_of(e)}": _names(sg, cov)
            for (s, e), cov in sorted(witness["fixed_covers"].items())
        }
    return out


def _minimal_witness(sg, witness):
    out = {}
    if "failures" in witness:
        out["failures"] = [
            {"e": sg.name_of(w["e"]), "f": sg.name_of(w["f"]),
             "uncovered": sg.name_of(w["uncovered"])}
            for w in witness["failures"]
        ]
    if "conjugate_covers" in witness:
        out["conjugate_covers"] = {
            f"e={sg.name_of(e)} f={sg.name_of(f)}": [
                {"cover": sg.name_of(c), "via": sg.name_of(s)}
                for c, s in pairs
            ]
            for (e, f), pairs in sorted(witness["conjugate_covers"].items())
        }
    return out


def _contraction_witness(sg, witness):
    crit = witness.get("criterion", {})
    out = {"action_reason": witness.get("action_reason"),
           "groupoid_reason": witness.get("groupoid_reason")}
    if "e" in crit:
        out["refuted_at"] = sg.name_of(crit["e"])
    if "families" in crit:
        out["families"] = {
            sg.name_of(e): {"s": sg.name_of(s),
                            "family": _names(sg, family),
                            "f0": sg.name_of(f0)}
            for e, (s, family, f0) in sorted(crit["families"].items())
        }
    return out


def build_document(analysis: Analysis, name: str,
                   timing: dict | None = None) -> ReportDocument:
    sg = analysis.semigroup
    rep = analysis.report
    payload = {
        "schema_version": SCHEMA_VERSION,
        "instance": {
            "name": name,
            "elements": sg.size,
            "idempotents": len(sg.idempotents),
            "spectrum_size": len(analysis.spectrum.points),
            "groupoid": {
                "arrows": len(analysis.groupoid.arrows),
                "units": len(analysis.groupoid.units),
            },
            "e_star_unitary": sg.is_e_star_unitary(),
        },
        "properties": {
            "hausdorff": {"criterion": rep.hausdorff.criterion,
                          "direct": rep.hausdorff.direct},
            "essentially_principal": {
                "criterion": rep.essentially_principal.criterion,
                "direct": rep.essentially_principal.direct},
            "minimal": {"criterion": rep.minimal.criterion,
                        "direct": rep.minimal.direct},
            "locally_contracting": {
                "criterion": rep.locally_contracting.criterion,
                "direct": rep.locally_contracting.direct},
        },
        "cstar_flags": dict(rep.cstar_flags),
        "conclusions": list(rep.conclusions),
        "witnesses": {
            "hausdorff": _hausdorff_witness(sg, rep.hausdorff.witness),
            "essentially_principal": _top_free_witness(
                sg, rep.essentially_principal.witness),
            "minimal": _minimal_witness(sg, rep.minimal.witness),
            "locally_contracting": _contraction_witness(
                sg, rep.locally_contracting.witness),
        },
    }
    return ReportDocument(payload, timing)


def error_payload(name: str, code: str, message: str, **instance) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "instance": {"name": name, **instance},
        "error": {"code": code, "message": message},
    }


def emit_report(doc: ReportDocument, include_timing: bool = False) -> str:
    payload = dict(doc.payload)
    if include_timing and doc.timing is not None:
        payload["timing"] = doc.timing
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def emit_dot(gpd: GermGroupoid, graph_name: str = "germs") -> str:
    """One node per unit, one labeled edge per non-unit arrow; labels are
    the canonical representatives."""
    sg = gpd.semigroup
    act = gpd.action
    lines = [f"digraph {json.dumps(graph_name)} {{"]
    for x in range(act.points):
        lines.append(f'  u{x} [shape=circle, label={json.dumps(act.label_of(x))}];')
    for i, (s, x) in enumerate(gpd.arrows):
        if i in gpd.units:
            continue
        label = f"[{sg.name_of(s)}, {act.label_of(x)}]"
        lines.append(
            f"  u{gpd.source[i]} -> u{gpd.target[i]} [label={json.dumps(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
