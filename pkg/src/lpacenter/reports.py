"""Machine-readable reports and their text renderings.

Report dictionaries are built in a fixed key and element order, so JSON
output is byte-stable for a fixed input and schema version.
"""

from __future__ import annotations

import json
from typing import Optional

from . import lattice
from .algebra import AlgebraElement
from .center import center_component_basis, center_zero_basis, nonzero_center_degrees
from .cycles import cycles_without_exits, has_finite_entries
from .graphs import Graph
from .rings import Ring
from .steinberg import is_central

ANALYZE_SCHEMA = "lpacenter.analyze/1"
CENTER_SCHEMA = "lpacenter.center/1"
VERIFY_SCHEMA = "lpacenter.verify/1"


def element_json(a: AlgebraElement, verified: Optional[bool] = None,
                 by_involution: bool = False) -> dict:
    out = {"text": a.to_text(), "terms": a.to_json()}
    if verified is not None:
        out["verified"] = verified
    if by_involution:
        out["by_involution"] = True
    return out


def build_analyze_report(g: Graph, cap: Optional[int] = None) -> dict:
    pairs = []
    for H in lattice.hereditary_saturated_sets(g, cap):
        b = lattice.breaking_vertices(g, H)
        holds = lattice.satisfies_condition_f(g, H)
        pairs.append({
            "H": sorted(H, key=g.vertex_position),
            "B_H": sorted(b, key=g.vertex_position),
            "condition_F": holds,
            "compact": holds,  # compactness of the (H, B_H) pair
        })
    classes = []
    for cc in cycles_without_exits(g):
        classes.append({
            "vertices": sorted(cc.vertex_set(g), key=g.vertex_position),
            "length": cc.length,
            "rotations": [g.render_path(d) for d in cc.rotations],
            "finite_entries": has_finite_entries(g, cc),
        })
    return {
        "schema_version": ANALYZE_SCHEMA,
        "vertices": [{"name": v, "kind": g.classify(v).value} for v in g.vertices],
        "hereditary_saturated": pairs,
        "exit_free_cycles": classes,
    }


def build_center_report(g: Graph, ring: Ring, max_degree: int,
                        cap: Optional[int] = None) -> dict:
    degree0 = []
    for pair, elem in zip(lattice.minimal_compact_pairs(g, cap),
                          center_zero_basis(g, ring, cap)):
        entry = element_json(elem, verified=is_central(elem))
        entry["pair"] = {"H": sorted(pair.h, key=g.vertex_position),
                         "B_H": sorted(pair.s, key=g.vertex_position)}
        degree0.append(entry)
    lengths = sorted(nonzero_center_degrees(g))
    components: dict[str, list] = {}
    for n in range(1, max_degree + 1):
        if not any(n % l == 0 for l in lengths):
            continue
        components[str(n)] = [element_json(a, verified=is_central(a))
                              for a in center_component_basis(g, ring, n)]
        components[str(-n)] = [element_json(a, verified=is_central(a),
                                            by_involution=True)
                               for a in center_component_basis(g, ring, -n)]
    all_verified = all(e["verified"] for e in degree0)
    all_verified = all_verified and all(
        e["verified"] for elems in components.values() for e in elems)
    return {
        "schema_version": CENTER_SCHEMA,
        "ring": ring.name,
        "max_degree": max_degree,
        "degree0": degree0,
        "lengths": lengths,
        "components": components,
        "verified": all_verified,
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def render_analyze_text(report: dict) -> str:
    lines = []
    lines.append("vertices:")
    for v in report["vertices"]:
        lines.append(f"  {v['name']}: {v['kind']}")
    lines.append("hereditary saturated sets:")
    for p in report["hereditary_saturated"]:
        H = "{" + ", ".join(p["H"]) + "}"
        B = "{" + ", ".join(p["B_H"]) + "}"
        verdict = "holds" if p["condition_F"] else "fails"
        lines.append(f"  H = {H}  B_H = {B}  finiteness condition {verdict}")
    lines.append("exit-free cycle classes:")
    if not report["exit_free_cycles"]:
        lines.append("  none")
    for c in report["exit_free_cycles"]:
        entries = "finite" if c["finite_entries"] else "infinite"
        lines.append(f"  [{c['rotations'][0]}] length {c['length']}, "
                     f"entry paths {entries}")
    return "\n".join(lines) + "\n"


def render_center_text(report: dict) -> str:
    lines = [f"ring: {report['ring']}"]
    lines.append("degree 0 basis:")
    if not report["degree0"]:
        lines.append("  (empty)")
    for e in report["degree0"]:
        mark = "ok" if e["verified"] else "FAILED"
        lines.append(f"  {e['text']}   [central: {mark}]")
    lengths = ", ".join(str(l) for l in report["lengths"]) or "none"
    lines.append(f"contributing cycle lengths: {lengths}")
    for n in sorted((int(k) for k in report["components"]), key=lambda x: (abs(x), -x)):
        elems = report["components"][str(n)]
        lines.append(f"degree {n}:")
        for e in elems:
            mark = "ok" if e["verified"] else "FAILED"
            suffix = " (by involution symmetry)" if e.get("by_involution") else ""
            lines.append(f"  {e['text']}   [central: {mark}]{suffix}")
    return "\n".join(lines) + "\n"
