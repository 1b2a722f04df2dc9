from frames.strata import component_report, stratum_table
from utilities import get_all_variables, payloads, send_report


class Analyze:
    name = "analyze"
    description = "Irreducible components and the full stratum table of V(d,n)."

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        self.app.add_params_arguments(parser)
        self.app.add_format_argument(parser)

    def run(self, args, stdout=None):
        params = self.app.params(args)
        rows = stratum_table(params)
        report = component_report(params)
        send_report(
            self.app, args,
            params=payloads.params_payload(params),
            payload=payloads.component_report_payload(report, rows),
            template="analyze",
            variables=get_all_variables(params, rows, report),
            stream=stdout,
        )
        return 0


def setup(app):
    app.add_command(Analyze(app))
