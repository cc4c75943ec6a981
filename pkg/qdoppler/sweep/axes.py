import numpy as np

from ..errors import InvalidArgumentError
from ..utils import Registry

AXES = Registry('axes')


def _identity(value):
    return float(value)


@AXES.register_module()
class Linspace:
    def __init__(self, start, stop, num, resolve=_identity):
        if int(num) != num or num < 1:
            raise InvalidArgumentError(f'num must be a positive integer, got {num}')
        self.start, self.stop, self.num = resolve(start), resolve(stop), int(num)

    def values(self):
        return np.linspace(self.start, self.stop, self.num)


@AXES.register_module()
class Logspace:
    """Geometric spacing between ``start`` and ``stop`` (the values, not exponents)."""

    def __init__(self, start, stop, num, resolve=_identity):
        if int(num) != num or num < 1:
            raise InvalidArgumentError(f'num must be a positive integer, got {num}')
        self.start, self.stop, self.num = resolve(start), resolve(stop), int(num)
        if self.start <= 0 or self.stop <= 0:
            raise InvalidArgumentError(f'log axis needs positive bounds, got {self.start}, {self.stop}')

    def values(self):
        return np.geomspace(self.start, self.stop, self.num)


@AXES.register_module()
class Values:
    def __init__(self, values, resolve=_identity):
        self._values = [resolve(v) for v in values]

    def values(self):
        return np.array(self._values, dtype=float)


def build_axis(spec, resolve=_identity):
    """Scalar, list, or ``{NAME: Logspace, start: .., stop: .., num: ..}`` to an array."""
    if spec is None:
        return None
    if isinstance(spec, dict):
        axis = AXES.build(spec, default_args=dict(resolve=resolve))
    elif isinstance(spec, (list, tuple)):
        axis = Values(spec, resolve=resolve)
    else:
        axis = Values([spec], resolve=resolve)
    values = axis.values()
    if values.size == 0:
        raise InvalidArgumentError('axis is empty')
    return values
