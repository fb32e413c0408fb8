# src/ext_int.py
"""Integers extended with a negative-infinity element.

`NEG_INF` absorbs addition and loses every comparison against a finite
integer, so the builtins `max`, `sorted` and `+` work on mixed values.
"""

from functools import total_ordering
from typing import Iterable, Union

from .config import NEG_INF_JSON


@total_ordering
class _NegInfinity:
    """Singleton sentinel below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'NEG_INF'

    def __str__(self) -> str:
        return '-inf'

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash('vacc-tree:neg-inf')

    def __lt__(self, other) -> bool:
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __reduce__(self):
        return (_NegInfinity, ())


NEG_INF = _NegInfinity()

ExtInt = Union[int, _NegInfinity]


def is_finite(x: ExtInt) -> bool:
    """True for ordinary integers, False for NEG_INF."""
    return x is not NEG_INF


def ext_max(values: Iterable[ExtInt]) -> ExtInt:
    """Maximum of the values; NEG_INF for an empty iterable (max of the empty set)."""
    best: ExtInt = NEG_INF
    for v in values:
        if v is not NEG_INF and (best is NEG_INF or v > best):
            best = v
    return best


def to_json_value(x: ExtInt):
    """JSON-safe form: the integer itself, or the string '-inf'."""
    return NEG_INF_JSON if x is NEG_INF else x
