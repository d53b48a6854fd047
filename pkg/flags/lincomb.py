"""Exact rational linear combinations of flags and the lifting map."""

import logging
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from core.config import MAX_FLAG_LEVEL
from core.errors import LevelOverflowError, PreconditionError, TypeMismatchError
from flags.flag import Flag, enumerate_flags, flag_profile, identity_flag
from flags.types import TypeSigma

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class LinComb:
    """Element of the flag space of one type at one level.

    Adding combinations of different levels lifts the lower one first, so
    mixed-level expressions such as ``2*K3 + K4`` read as in the algebra.
    """

    __slots__ = ("flag_type", "level", "_terms")

    def __init__(self, flag_type: TypeSigma, level: int, terms: Optional[Mapping[Flag, Scalar]] = None):
        self.flag_type = flag_type
        self.level = level
        clean: Dict[Flag, Fraction] = {}
        for flag, coefficient in (terms or {}).items():
            if flag.flag_type != flag_type:
                raise TypeMismatchError(f"Flag of type {flag.flag_type.name} in a {flag_type.name} combination")
            if flag.level != level:
                raise PreconditionError(f"Flag of order {flag.level} in a level-{level} combination")
            coefficient = Fraction(coefficient)
            if coefficient:
                clean[flag] = clean.get(flag, Fraction(0)) + coefficient
        self._terms = {flag: c for flag, c in clean.items() if c}

    @classmethod
    def of(cls, flag: Flag, coefficient: Scalar = 1) -> "LinComb":
        return cls(flag.flag_type, flag.level, {flag: coefficient})

    @classmethod
    def one(cls, flag_type: TypeSigma) -> "LinComb":
        return cls.of(identity_flag(flag_type))

    @property
    def terms(self) -> Dict[Flag, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Flag, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (kv[0].graph.edge_count, kv[0].graph.rows)))

    def coefficient(self, flag: Flag) -> Fraction:
        return self._terms.get(flag, Fraction(0))

    def __getitem__(self, flag: Flag) -> Fraction:
        return self.coefficient(flag)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _aligned(self, other: "LinComb") -> Tuple["LinComb", "LinComb"]:
        if self.flag_type != other.flag_type:
            raise TypeMismatchError(
                f"Cannot combine types {self.flag_type.name} and {other.flag_type.name}"
            )
        level = max(self.level, other.level)
        return lift(self, level), lift(other, level)

    def __add__(self, other: "LinComb") -> "LinComb":
        left, right = self._aligned(other)
        terms = dict(left._terms)
        for flag, c in right._terms.items():
            terms[flag] = terms.get(flag, Fraction(0)) + c
        return LinComb(self.flag_type, left.level, terms)

    def __neg__(self) -> "LinComb":
        return LinComb(self.flag_type, self.level, {f: -c for f, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, factor: Scalar) -> "LinComb":
        factor = Fraction(factor)
        return LinComb(self.flag_type, self.level, {f: c * factor for f, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, LinComb):
            from flags.operators import product
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.flag_type == other.flag_type and self.level == other.level and self._terms == other._terms

    def __hash__(self):
        return hash((self.flag_type, self.level, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{c}*{f!r}" for f, c in self.items())
        return f"LinComb({self.flag_type.name}, level={self.level}, [{inner}])"


def lift(f: LinComb, level: int) -> LinComb:
    """Re-express ``f`` at a higher level through the chain rule.

    Raises:
        LevelOverflowError: if ``level`` is below level(f) or above the cap
    """
    if level < f.level or level > MAX_FLAG_LEVEL:
        raise LevelOverflowError(f"Cannot lift a level-{f.level} combination to level {level}")
    if level == f.level:
        return f
    terms: Dict[Flag, Fraction] = {}
    total = comb(level - f.flag_type.arity, f.level - f.flag_type.arity)
    for host in enumerate_flags(f.flag_type, level):
        profile = flag_profile(host, f.level)
        value = sum((c * profile.get(flag, 0) for flag, c in f._terms.items()), Fraction(0))
        if value:
            terms[host] = value / total
    return LinComb(f.flag_type, level, terms)

