from frames.strata import ComponentReport, FrameSpaceParams, PosetGraph
from frames.thresholds import LssCertificate, PropertyReport


def yes_no(flag):
    return "yes" if flag else "no"


def get_params_variables(params: FrameSpaceParams):
    return {
        "d": params.d,
        "n": params.n,
        "generators": params.generators,
        "ambientdimension": params.ambient_dimension,
        "expecteddimension": params.expected_dimension,
    }


def get_component_variables(report: ComponentReport):
    lines = [
        f"  S{record.stratum}  dim {record.dimension}  components {record.count}"
        for record in report.components
    ]
    return {
        "componentlines": "\n".join(lines),
        "totalcount": report.total_count,
        "varietydimension": report.variety_dimension,
        "irreducible": yes_no(report.is_irreducible),
        "principaldimension": report.principal_dimension if report.principal_dimension is not None else "/",
    }


def get_stratum_table_variables(rows):
    header = f"  {'(p,q)':<9}{'sigma':>7}{'codim':>7}  {'boundary':<9}{'maximal':<9}{'components':>10}"
    lines = [header]
    for row in rows:
        segment = row.segment.value if row.segment else "-"
        lines.append(
            f"  {str(row.stratum):<9}{row.dimension:>7}{row.codimension:>7}  "
            f"{segment:<9}{yes_no(row.maximal):<9}{row.components:>10}"
        )
    return {"stratatable": "\n".join(lines), "stratacount": len(rows)}


def get_property_variables(report: PropertyReport):
    return {
        "ci": yes_no(report.complete_intersection),
        "gorenstein": yes_no(report.gorenstein),
        "cohenmacaulay": yes_no(report.cohen_macaulay),
        "equidimensional": yes_no(report.equidimensional),
        "domain": yes_no(report.domain),
        "normal": yes_no(report.normal_domain),
        "ufd": report.ufd.value,
        "reduced": report.reduced.value,
        "justifications": "\n".join(f"  - {note}" for note in report.justifications),
    }


def get_matrix_variables(matrix):
    rows = matrix.to_json()
    width = max((len(x) for row in rows for x in row), default=1)
    lines = ["  [" + " ".join(x.rjust(width) for x in row) + "]" for row in rows]
    return {"matrix": "\n".join(lines) if lines else "  []"}


def get_invariants_variables(invariants):
    return {
        "invariety": yes_no(invariants.in_variety),
        "rank": invariants.rank,
        "rkani": invariants.rk_ani,
        "rkiso": invariants.rk_iso,
    }


def get_certificate_variables(certificate):
    if certificate is None:
        return {
            "certificate": "  not issued: the frame is off V(d,n), or its stratum is off the upper boundary and R(d,n) is not a complete intersection",
        }
    relation, status = (">=", "passed") if certificate.passed else ("<", "FAILED")
    return {
        "certificate": (
            f"  stratum {certificate.stratum}: Jacobian rank {certificate.jacobian_rank}"
            f" {relation} {certificate.required_bound} required: {status}"
        ),
    }


def get_lss_variables(certificate: LssCertificate):
    triple = certificate.minimal_d
    return {
        "vertexcount": certificate.vertex_count,
        "edgecount": certificate.edge_count,
        "d": certificate.d,
        "radicalci": yes_no(certificate.radical_ci),
        "normaldomain": yes_no(certificate.normal_domain),
        "ufd": yes_no(certificate.ufd),
        "dci": triple.d_ci,
        "dprime": triple.d_prime,
        "dufd": triple.d_ufd,
    }


def get_threshold_variables(triples):
    lines = [f"  {'n':>4}{'D_CI':>7}{'D_prime':>9}{'D_UFD':>7}"]
    for t in triples:
        lines.append(f"  {t.n:>4}{t.d_ci:>7}{t.d_prime:>9}{t.d_ufd:>7}")
    return {"thresholdtable": "\n".join(lines), "rowcount": len(triples)}


def get_poset_variables(graph: PosetGraph):
    hasse = sorted(graph.hasse.edges)
    return {
        "maximal": ", ".join(str(s) for s in graph.maximal),
        "hasselines": "\n".join(f"  {a} < {b}" for a, b in hasse) or "  (none)",
        "unknownlines": "\n".join(f"  {a} ? {b}" for a, b in graph.unknown) or "  (none)",
        "belowcount": graph.below.number_of_edges(),
        "unknowncount": len(graph.unknown),
    }


def get_grid_variables(certificates, d_max, n_max):
    failed = [c for c in certificates if not c.passed]
    lines = [
        f"  (d,n)=({c.params.d},{c.params.n}) {c.stratum}: rank {c.jacobian_rank} < {c.required_bound}"
        for c in failed
    ]
    return {
        "dmax": d_max,
        "nmax": n_max,
        "cellcount": len(certificates),
        "passedcount": len(certificates) - len(failed),
        "failedcount": len(failed),
        "failedlines": "\n".join(lines) or "  (none)",
    }


def get_identity_variables(check):
    return {
        "r": check.r,
        "n": check.n,
        "passes": check.passes,
        "total": check.total,
    }


def get_chain_variables(chain):
    return {
        "n": chain.n,
        "q": chain.q,
        "squaresdim": chain.squares_dim,
        "predicted": chain.predicted_rank,
        "halfrank": chain.half_rank,
        "fullrank": chain.full_rank,
        "closedform": chain.closed_form,
        "holds": yes_no(chain.holds),
    }


def get_all_variables(params, rows, report):
    variables = {}
    variables.update(get_params_variables(params))
    variables.update(get_stratum_table_variables(rows))
    variables.update(get_component_variables(report))
    return variables
