import logging

from errors.exceptions import UsageError
from frames.exactfield import FrameMatrix, frame_invariants
from frames.strata import StratumIndex, raw_in_boundary
from frames.witness import certifiable, certify_smooth, sample_stratum_point, smooth_point_chain
from utilities import (
    get_certificate_variables, get_invariants_variables, get_matrix_variables,
    get_params_variables, payloads, send_log, send_report,
)

logger = logging.getLogger(__name__)


class Witness:
    name = "witness"
    description = "A frame in a given stratum, its invariants and (on the boundary) a smoothness certificate."

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        self.app.add_params_arguments(parser)
        parser.add_argument("--p", type=int, default=None, help="anisotropic rank")
        parser.add_argument("--q", type=int, default=None, help="isotropic rank")
        parser.add_argument("--matrix", default=None,
                            help="certify this d x n matrix instead, e.g. '[[1,0],[0,1]]'")
        self.app.add_field_arguments(parser)
        self.app.add_format_argument(parser)

    def _frame(self, args, params, ctx):
        if args.matrix is not None:
            A = FrameMatrix.from_rows(ctx, args.matrix, cols=params.n)
            if A.entries.shape != (params.d, params.n):
                raise UsageError(f"--matrix has shape {A.entries.shape}, expected {(params.d, params.n)}")
            return A, "matrix"
        if args.p is None or args.q is None:
            raise UsageError("witness needs --p and --q, or --matrix")
        return sample_stratum_point(params, StratumIndex(args.p, args.q), ctx, args.seed), "sample"

    def run(self, args, stdout=None):
        if args.trials < 1:
            raise UsageError("--trials must be at least 1")
        params = self.app.params(args)
        ctx = self.app.context(args.prime)
        A, source = self._frame(args, params, ctx)
        invariants = frame_invariants(A)

        certificate = None
        if invariants.in_variety and certifiable(params, StratumIndex(*invariants.stratum)):
            certificate = certify_smooth(params, A)
            on_boundary = raw_in_boundary(params.d, params.n, *invariants.stratum)
            if not certificate.passed and source == "sample" and on_boundary:
                logger.debug(f"sampled frame not smooth at {certificate.stratum}, building the chain witness")
                chained = smooth_point_chain(params, certificate.stratum, ctx, args.seed, args.trials)
                if chained.passed:
                    A, source, certificate = chained.point, "smooth point chain", chained
                    invariants = frame_invariants(A)

        p, q = invariants.stratum if invariants.in_variety else (args.p, args.q)
        variables = get_params_variables(params)
        variables.update({"p": p if p is not None else "-", "q": q if q is not None else "-", "source": source})
        variables.update(get_matrix_variables(A))
        variables.update(get_invariants_variables(invariants))
        variables.update(get_certificate_variables(certificate))
        payload = {
            "source": source,
            "frame": A.to_json(),
            "invariants": payloads.invariants_payload(invariants),
            "certificate": payloads.certificate_payload(certificate),
        }
        send_report(self.app, args, params=payloads.params_payload(params), payload=payload,
                    template="witness", variables=variables, stream=stdout)

        if certificate is not None and not certificate.passed:
            send_log(variables, "log_certificate_failed", level=logging.WARNING)
            return 2
        return 0


def setup(app):
    app.add_command(Witness(app))
