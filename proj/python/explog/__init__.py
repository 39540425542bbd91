"""Closed forms and numeric checks for exp-log integrals."""

import json

from ._explog import (
    Constant,
    ParseError,
    UnboundGenerator,
    UnsupportedIntegrand,
    constant_from_json,
    constants,
    digamma,
    eval_In,
    gamma_deriv_at,
    hurwitz_zeta,
    parse_constant,
    parse_integrand,
    psi_deriv_at,
    run_cli,
)

__all__ = [
    "Constant",
    "ParseError",
    "UnboundGenerator",
    "UnsupportedIntegrand",
    "CommandError",
    "catalog",
    "constant_from_json",
    "constants",
    "digamma",
    "eval_In",
    "evaluate",
    "gamma_deriv_at",
    "hurwitz_zeta",
    "parse_constant",
    "parse_integrand",
    "psi_deriv_at",
    "run_cli",
    "verify",
    "weight",
]


class CommandError(RuntimeError):
    def __init__(self, code, report):
        self.code = code
        self.report = report
        super().__init__(report.get("error", {}).get("message", f"exit code {code}"))


def _json_command(args):
    code, out, err = run_cli([*args, "--json"])
    report = json.loads(out) if out.strip() else {"error": {"message": err.strip()}}
    if code == 2:
        raise CommandError(code, report)
    return code, report


def evaluate(integrand, paper_style=False):
    """Closed form of an integrand, as the JSON report of `explog eval`."""
    args = ["eval", integrand] + (["--paper-style"] if paper_style else [])
    return _json_command(args)[1]


def verify(integrand, tol=1e-10):
    """Closed form against quadrature. Returns (passed, report)."""
    code, report = _json_command(["verify", integrand, "--tol", repr(tol)])
    return code == 0, report


def catalog(mu=None, max_n=None):
    """Runs the formula table. Returns (all_passed, rows)."""
    args = ["catalog"]
    for value in mu or []:
        args += ["--mu", repr(value)]
    if max_n is not None:
        args += ["--max-n", str(max_n)]
    code, report = _json_command(args)
    return code == 0, report


def weight(max_n=10):
    """Grade of I_n for n <= max_n. Returns (all_passed, rows)."""
    code, report = _json_command(["weight", "--max-n", str(max_n)])
    return code == 0, report
