"""Angular frequencies written either as numbers (rad/s) or as ratios of references.

    <coef>*<ref>/<div>    e.g. ``wc/100``, ``3*wp/100``, ``3*sigma_p``, ``wp``

``wc`` is the signal carrier, ``wp = 2 wc`` the pump, ``sigma_p`` the pump
bandwidth (only meaningful for ``eps``).
"""
import math
import re

from ..errors import InvalidArgumentError

REFERENCES = ('wc', 'wp', 'sigma_p')

_PATTERN = re.compile(
    r'^\s*(?:(?P<coef>[-+0-9.eE]+)\s*\*\s*)?(?P<ref>[A-Za-z_]+)\s*(?:/\s*(?P<div>[-+0-9.eE]+))?\s*$')


def _number(text, what):
    try:
        return float(text)
    except ValueError:
        raise InvalidArgumentError(f'{what} "{text}" is not a number') from None


def parse_frequency(value, refs):
    """Resolve ``value`` against ``refs`` (a mapping of reference name to rad/s)."""
    if isinstance(value, bool):
        raise InvalidArgumentError(f'frequency must be a number or ratio string, got {value!r}')
    if isinstance(value, (int, float)):
        result = float(value)
    elif isinstance(value, str):
        try:
            result = float(value)
        except ValueError:
            match = _PATTERN.match(value)
            if match is None:
                raise InvalidArgumentError(f'cannot parse frequency "{value}" (expected e.g. "wc/100")') from None
            ref = match.group('ref')
            if ref not in REFERENCES:
                raise InvalidArgumentError(f'unknown frequency reference "{ref}" in "{value}"; use one of {REFERENCES}')
            if ref not in refs:
                raise InvalidArgumentError(f'reference "{ref}" is not available in "{value}"')
            coef = _number(match.group('coef'), 'coefficient') if match.group('coef') else 1.
            div = _number(match.group('div'), 'divisor') if match.group('div') else 1.
            if div == 0:
                raise InvalidArgumentError(f'division by zero in "{value}"')
            result = coef * refs[ref] / div
    else:
        raise InvalidArgumentError(f'frequency must be a number or ratio string, got {value!r}')
    if not math.isfinite(result) or result <= 0:
        raise InvalidArgumentError(f'frequency "{value}" must resolve to a positive value, got {result}')
    return result
