from frames.thresholds import classify_ring
from utilities import get_params_variables, get_property_variables, payloads, send_report


class Classify:
    name = "classify"
    description = "Ring-theoretic properties of R(d,n) with their justifications."

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        self.app.add_params_arguments(parser)
        self.app.add_format_argument(parser)

    def run(self, args, stdout=None):
        params = self.app.params(args)
        report = classify_ring(params)
        variables = get_params_variables(params)
        variables.update(get_property_variables(report))
        send_report(
            self.app, args,
            params=payloads.params_payload(params),
            payload=payloads.property_payload(report),
            template="classify",
            variables=variables,
            stream=stdout,
        )
        return 0


def setup(app):
    app.add_command(Classify(app))
