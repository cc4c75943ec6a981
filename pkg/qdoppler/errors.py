"""Exception hierarchy shared by every qdoppler sub-package.

Argument and configuration problems derive from ``ValueError``; numerical
breakdowns derive from ``ArithmeticError``. The command line maps the two
families to different exit codes.
"""


class QDopplerError(Exception):
    pass


# ---------------------------------------------------------------------------- #
# argument / configuration errors
# ---------------------------------------------------------------------------- #
class InvalidArgumentError(QDopplerError, ValueError):
    pass


class InvalidChannelError(InvalidArgumentError):
    """Channel matrices violate complete positivity."""


class InvalidProbeError(InvalidArgumentError):
    pass


class DegenerateDurationError(InvalidArgumentError):
    """The probe duration vanishes (separable joint spectrum, K = 1)."""


class InvalidGridError(InvalidArgumentError):
    pass


class ConfigError(QDopplerError, ValueError):
    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__('\n'.join(self.errors))


# ---------------------------------------------------------------------------- #
# numerical errors
# ---------------------------------------------------------------------------- #
class NumericalError(QDopplerError, ArithmeticError):
    pass


class PureStateError(NumericalError):
    """Covariance term requested on a state at the pure-state boundary."""


class ConsistencyError(NumericalError):
    pass


class OracleFailure(NumericalError):
    pass


class MixednessError(OracleFailure):
    """Finite-difference fidelity refused on a (near) pure state."""


class SweepPointError(NumericalError):
    def __init__(self, params, cause):
        self.params = dict(params)
        self.cause = cause
        text = ', '.join(f'{k}={v!r}' for k, v in self.params.items())
        super().__init__(f'sweep point ({text}) failed: {type(cause).__name__}: {cause}')
