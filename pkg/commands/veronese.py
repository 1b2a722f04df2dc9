from errors.exceptions import UsageError
from frames.veronese import check_chain_identity, check_generic_identity
from utilities import get_chain_variables, get_identity_variables, send_report


class Veronese:
    name = "veronese"
    description = "Span of squares of general linear forms, or the doubled-frame rank identity with --q."

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True, help="number of forms (or frame vectors with --q)")
        parser.add_argument("--r", type=int, default=None, help="number of variables")
        parser.add_argument("--q", type=int, default=None, help="check [B; nu B] in V(2q, n) instead")
        self.app.add_field_arguments(parser)
        self.app.add_format_argument(parser)

    def run(self, args, stdout=None):
        ctx = self.app.context(args.prime)
        if args.q is not None:
            chain = check_chain_identity(ctx, args.n, args.q, args.seed)
            payload = {
                "n": chain.n, "q": chain.q, "squares_dim": chain.squares_dim,
                "predicted_rank": chain.predicted_rank, "half_rank": chain.half_rank,
                "full_rank": chain.full_rank, "closed_form": chain.closed_form, "holds": chain.holds,
            }
            send_report(self.app, args, params={"n": args.n, "q": args.q}, payload=payload,
                        template="veronese_chain", variables=get_chain_variables(chain), stream=stdout)
            return 0 if chain.holds else 2
        if args.r is None:
            raise UsageError("veronese needs --r, or --q for the doubled-frame check")
        check = check_generic_identity(ctx, args.r, args.n, args.trials, args.seed)
        payload = {"r": check.r, "n": check.n, "passes": check.passes, "total": check.total}
        send_report(self.app, args, params={"r": args.r, "n": args.n}, payload=payload,
                    template="veronese", variables=get_identity_variables(check), stream=stdout)
        return 0


def setup(app):
    app.add_command(Veronese(app))
