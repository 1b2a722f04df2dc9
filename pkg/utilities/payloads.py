"""JSON-ready dicts for the report envelope. Integers stay integers; field residues become decimal strings."""
import json

from frames.strata import sigma
from utilities import colors


def params_payload(params):
    return {"d": params.d, "n": params.n}


def stratum_payload(s):
    return [s.p, s.q]


def envelope(settings, command, params, seed, prime, payload):
    return {
        "tool_version": settings.tool_version,
        "command": command,
        "params": params,
        "seed": seed,
        "prime": prime,
        "payload": payload,
    }


def dumps(document):
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def component_report_payload(report, rows):
    return {
        "components": [
            {"stratum": stratum_payload(r.stratum), "dimension": r.dimension, "count": r.count}
            for r in report.components
        ],
        "total_count": report.total_count,
        "variety_dimension": report.variety_dimension,
        "is_irreducible": report.is_irreducible,
        "principal_dimension": report.principal_dimension,
        "strata": [
            {
                "stratum": stratum_payload(row.stratum),
                "dimension": row.dimension,
                "codimension": row.codimension,
                "segment": row.segment.value if row.segment else None,
                "maximal": row.maximal,
                "components": row.components,
            }
            for row in rows
        ],
    }


def property_payload(report):
    return {
        "complete_intersection": report.complete_intersection,
        "gorenstein": report.gorenstein,
        "cohen_macaulay": report.cohen_macaulay,
        "equidimensional": report.equidimensional,
        "domain": report.domain,
        "normal_domain": report.normal_domain,
        "ufd": report.ufd.value,
        "reduced": report.reduced.value,
        "justifications": list(report.justifications),
    }


def invariants_payload(invariants):
    return {
        "in_variety": invariants.in_variety,
        "rank": invariants.rank,
        "rk_ani": invariants.rk_ani,
        "rk_iso": invariants.rk_iso,
        "anisotropic_columns": sorted(invariants.anisotropic_column_set),
    }


def certificate_payload(certificate):
    if certificate is None:
        return None
    return {
        "params": params_payload(certificate.params),
        "stratum": stratum_payload(certificate.stratum),
        "point": certificate.point.to_json(),
        "jacobian_rank": certificate.jacobian_rank,
        "required_bound": certificate.required_bound,
        "passed": certificate.passed,
    }


def threshold_payload(triple):
    return {"n": triple.n, "d_ci": triple.d_ci, "d_prime": triple.d_prime, "d_ufd": triple.d_ufd}


def lss_payload(certificate):
    return {
        "vertex_count": certificate.vertex_count,
        "edge_count": certificate.edge_count,
        "d": certificate.d,
        "radical_ci": certificate.radical_ci,
        "normal_domain": certificate.normal_domain,
        "ufd": certificate.ufd,
        "minimal_d": threshold_payload(certificate.minimal_d),
    }


def poset_payload(graph):
    return {
        "nodes": [
            {"stratum": stratum_payload(s), "dimension": sigma(graph.params, s), "maximal": s in graph.maximal}
            for s in sorted(graph.below.nodes)
        ],
        "hasse_edges": [[stratum_payload(a), stratum_payload(b)] for a, b in sorted(graph.hasse.edges)],
        "below_edges": [[stratum_payload(a), stratum_payload(b)] for a, b in sorted(graph.below.edges)],
        "unknown": [[stratum_payload(a), stratum_payload(b)] for a, b in graph.unknown],
        "maximal": [stratum_payload(s) for s in graph.maximal],
    }


def poset_dot(graph):
    """Graphviz digraph of the Hasse diagram; maximal strata are filled."""
    def node_id(s):
        return f"s{s.p}_{s.q}"

    lines = [f'digraph "V({graph.params.d},{graph.params.n})" {{', "  rankdir=BT;"]
    for s in sorted(graph.below.nodes):
        label = f"{s.p},{s.q} | {sigma(graph.params, s)}"
        style = ""
        if s in graph.maximal:
            style = f', style=filled, fillcolor="{colors.to_hex(colors.maximal)}"'
        lines.append(f'  {node_id(s)} [label="{label}"{style}];')
    for a, b in sorted(graph.hasse.edges):
        lines.append(f'  {node_id(a)} -> {node_id(b)} [color="{colors.to_hex(colors.below)}"];')
    for a, b in graph.unknown:
        lines.append(
            f'  {node_id(a)} -> {node_id(b)} [style=dashed, constraint=false, color="{colors.to_hex(colors.unknown)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
