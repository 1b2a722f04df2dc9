from frames.thresholds import prime_ufd_differences, threshold_table
from utilities import get_threshold_variables, payloads, send_report


class Thresholds:
    name = "thresholds"
    description = "Table of D_CI(n), D_prime(n) and D_UFD(n)."

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        parser.add_argument("--n-from", type=int, default=2)
        parser.add_argument("--n-to", type=int, required=True)
        parser.add_argument("--differences", action="store_true",
                            help="only the n where D_prime and D_UFD differ")
        self.app.add_format_argument(parser)

    def run(self, args, stdout=None):
        if args.differences:
            triples = [t for t in prime_ufd_differences(args.n_to) if t.n >= args.n_from]
        else:
            triples = threshold_table(args.n_from, args.n_to)
        send_report(
            self.app, args,
            params={"n_from": args.n_from, "n_to": args.n_to, "differences": args.differences},
            payload={"thresholds": [payloads.threshold_payload(t) for t in triples]},
            template="thresholds",
            variables=get_threshold_variables(triples),
            stream=stdout,
        )
        return 0


def setup(app):
    app.add_command(Thresholds(app))
