from frames.thresholds import build_graph, certify_lss, threshold_triple
from utilities import get_lss_variables, payloads, read_edge_list, send_report


class Lss:
    name = "lss"
    description = "Certify LSS(d, G) for a graph given as an edge list."

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        parser.add_argument("graph", help="edge-list file: one 'u v' pair per line, '#' comments")
        parser.add_argument("--d", type=int, default=None)
        parser.add_argument("--vertices", type=int, default=None,
                            help="number of vertices (default: largest label)")
        self.app.add_format_argument(parser)

    def run(self, args, stdout=None):
        vertex_count, edges = read_edge_list(args.graph, args.vertices)
        params = {"graph": args.graph, "vertices": vertex_count, "d": args.d}
        if args.d is not None:
            certificate = certify_lss(vertex_count, edges, args.d)
            payload = payloads.lss_payload(certificate)
            template, variables = "lss", get_lss_variables(certificate)
        else:
            graph = build_graph(vertex_count, edges)
            triple = threshold_triple(vertex_count)
            payload = {
                "vertex_count": vertex_count,
                "edge_count": graph.number_of_edges(),
                "minimal_d": payloads.threshold_payload(triple),
            }
            template = "lss_minimal"
            variables = {
                "vertexcount": vertex_count,
                "edgecount": graph.number_of_edges(),
                "dci": triple.d_ci,
                "dprime": triple.d_prime,
                "dufd": triple.d_ufd,
            }
        send_report(self.app, args, params=params, payload=payload,
                    template=template, variables=variables, stream=stdout)
        return 0


def setup(app):
    app.add_command(Lss(app))
