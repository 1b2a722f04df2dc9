from frames.strata import poset_graph
from utilities import get_params_variables, get_poset_variables, payloads, send_message, send_report


class Poset:
    name = "poset"
    description = "Known degeneration relations between strata (text, json or Graphviz dot)."

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        self.app.add_params_arguments(parser)
        self.app.add_format_argument(parser, choices=("text", "json", "dot"))

    def run(self, args, stdout=None):
        params = self.app.params(args)
        graph = poset_graph(params)
        if args.format == "dot":
            send_message(payloads.poset_dot(graph), stdout)
            return 0
        variables = get_params_variables(params)
        variables.update(get_poset_variables(graph))
        send_report(
            self.app, args,
            params=payloads.params_payload(params),
            payload=payloads.poset_payload(graph),
            template="poset",
            variables=variables,
            stream=stdout,
        )
        return 0


def setup(app):
    app.add_command(Poset(app))
