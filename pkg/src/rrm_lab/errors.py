"""Exception types shared across the package.

Exit-code mapping used by the CLI: ValidationError -> 2, NumericsError -> 3,
argparse usage failures -> 64.
"""


class RRMLabError(Exception):
    """Base class for package errors."""


class ValidationError(RRMLabError):
    """Bad input: domain violation, malformed table, out-of-range parameter."""


class NumericsError(RRMLabError):
    """Numerical failure: non-convergence, bracket failure, blow-up."""
