import math
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple, Union

import numpy as np

from alphalomax.src.core.exceptions.ParameterException import ParameterException

SWEEP_VARIABLES = ('snr_db', 'alpha', 'lambda', 'gamma', 'u')

# grid points closer than this (relative to step) to stop are kept
_STOP_SLACK = 1e-9


@dataclass(frozen=True)
class SweepSpec:
    """
    One swept variable over start, start + step, ..., stop (inclusive); every other input
    is held in fixed.
    """
    variable: str
    start: float
    step: float
    stop: float
    fixed: Dict[str, float]
    decimals: Optional[int] = None

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ParameterException('Unknown sweep variable: {}'.format(self.variable),
                                     'Use one of {}'.format(', '.join(SWEEP_VARIABLES)))
        if not self.step > 0:
            raise ParameterException('Sweep step must be > 0, got {}'.format(self.step))
        if not self.start <= self.stop:
            raise ParameterException('Sweep start {} exceeds stop {}'.format(self.start, self.stop))
        if self.variable in self.fixed:
            raise ParameterException('{} is both swept and fixed'.format(self.variable))

    @property
    def values(self) -> np.ndarray:
        count = int(math.floor((self.stop - self.start) / self.step + _STOP_SLACK)) + 1
        values = self.start + self.step * np.arange(count)
        if self.decimals is not None:
            values = np.round(values, self.decimals)
        return values

    def rows(self) -> Iterator[Dict[str, float]]:
        for value in self.values:
            row = dict(self.fixed)
            row[self.variable] = float(value)
            yield row


def parse_range(text: str) -> Tuple[float, float, float, Optional[int]]:
    """
    'start:step:stop' to its three numbers and the number of decimals written in start and
    step (None when either uses exponent notation).

    EXAMPLE:
        '0:0.05:6' -> (0.0, 0.05, 6.0, 2)
    """
    parts = str(text).split(':')
    if len(parts) != 3:
        raise ParameterException('Malformed range "{}"'.format(text), 'Ranges are written start:step:stop')
    try:
        start, step, stop = (float(part) for part in parts)
    except ValueError:
        raise ParameterException('Malformed range "{}"'.format(text), 'Ranges are written start:step:stop')
    return start, step, stop, _decimals(parts[0], parts[1])


def _decimals(*texts: str) -> Optional[int]:
    digits = 0
    for text in texts:
        text = text.strip()
        if 'e' in text.lower():
            return None
        if '.' in text:
            digits = max(digits, len(text.split('.')[1]))
    return digits


def is_range(value: Union[str, float, None]) -> bool:
    return isinstance(value, str) and ':' in value


def build_sweep(inputs: Dict[str, Union[str, float, None]], default_variable: str, default_range: str) -> SweepSpec:
    """
    Sweep from raw option values: at most one value may be a start:step:stop range, the
    others are numbers. Without a range the default variable is swept over default_range, or
    held at its own value when one is given. Options left as None are dropped.
    """
    ranges = [name for name, value in inputs.items() if is_range(value)]
    if len(ranges) > 1:
        raise ParameterException('Only one variable can be swept, got ranges for {}'.format(', '.join(ranges)))

    variable = ranges[0] if ranges else default_variable
    fixed = {name: _number(name, value) for name, value in inputs.items()
             if name != variable and value is not None}

    if not ranges and inputs.get(default_variable) is not None:
        value = _number(default_variable, inputs[default_variable])
        return SweepSpec(variable, value, 1.0, value, fixed)

    start, step, stop, decimals = parse_range(inputs[variable] if ranges else default_range)
    return SweepSpec(variable, start, step, stop, fixed, decimals)


def _number(name: str, value) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ParameterException('Option {} must be a number, got "{}"'.format(name, value))
