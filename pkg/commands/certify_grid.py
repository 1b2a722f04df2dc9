import logging

from errors.exceptions import UsageError
from frames.witness import certify_grid
from utilities import get_grid_variables, payloads, send_log, send_report


class CertifyGrid:
    name = "certify-grid"
    description = "Build and certify a smooth point on every boundary stratum over a (d, n) grid."

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        parser.add_argument("--d-max", type=int, required=True)
        parser.add_argument("--n-max", type=int, required=True)
        parser.add_argument("--workers", type=int, default=1, help="worker processes")
        self.app.add_field_arguments(parser)
        self.app.add_format_argument(parser)

    def run(self, args, stdout=None):
        if args.trials < 1 or args.workers < 1:
            raise UsageError("--trials and --workers must be at least 1")
        ctx = self.app.context(args.prime)
        certificates = certify_grid(args.d_max, args.n_max, ctx, args.seed, args.trials, args.workers)
        variables = get_grid_variables(certificates, args.d_max, args.n_max)
        failed = [c for c in certificates if not c.passed]
        payload = {
            "cell_count": len(certificates),
            "passed_count": len(certificates) - len(failed),
            "cells": [
                {
                    "params": payloads.params_payload(c.params),
                    "stratum": payloads.stratum_payload(c.stratum),
                    "jacobian_rank": c.jacobian_rank,
                    "required_bound": c.required_bound,
                    "passed": c.passed,
                }
                for c in certificates
            ],
            "failed": [payloads.certificate_payload(c) for c in failed],
        }
        send_report(self.app, args, params={"d_max": args.d_max, "n_max": args.n_max},
                    payload=payload, template="certify_grid", variables=variables, stream=stdout)
        send_log(variables, "log_grid_summary", level=logging.WARNING if failed else logging.INFO)
        return 2 if failed else 0


def setup(app):
    app.add_command(CertifyGrid(app))
