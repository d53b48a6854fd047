"""Flag products, averaging operators, evaluation and identity checking."""

import logging
from fractions import Fraction
from itertools import permutations
from math import comb, perm
from typing import Dict, Tuple

from core.canonical import canonical_labeled
from core.config import MAX_FLAG_LEVEL
from core.density import DensityVector
from core.errors import (
    LevelOverflowError,
    PreconditionError,
    TypeMismatchError,
    UnsupportedAveragingError,
)
from flags.flag import Flag, enumerate_flags, pair_profile
from flags.lincomb import LinComb, lift
from flags.types import SUPPORTED_AVERAGING, TYPE_0, TypeSigma

logger = logging.getLogger(__name__)


def product(f: LinComb, g: LinComb) -> LinComb:
    """Bilinear flag product; the result lives at level(f) + level(g) - arity.

    Raises:
        TypeMismatchError: if the factors have different types
        LevelOverflowError: if the product level exceeds the cap
    """
    if f.flag_type != g.flag_type:
        raise TypeMismatchError(f"Cannot multiply types {f.flag_type.name} and {g.flag_type.name}")
    arity = f.flag_type.arity
    level = f.level + g.level - arity
    if level > MAX_FLAG_LEVEL:
        raise LevelOverflowError(f"Product level {level} exceeds {MAX_FLAG_LEVEL}")
    left, right = f.terms, g.terms
    total = comb(level - arity, f.level - arity)
    terms: Dict[Flag, Fraction] = {}
    for host in enumerate_flags(f.flag_type, level):
        value = Fraction(0)
        for (x, y), count in pair_profile(host, f.level).items():
            if x in left and y in right:
                value += left[x] * right[y] * count
        if value:
            terms[host] = value / total
    return LinComb(f.flag_type, level, terms)


def _check_averaging(source: TypeSigma, target: TypeSigma):
    if (source.name, target.name) not in SUPPORTED_AVERAGING:
        raise UnsupportedAveragingError(f"No averaging operator from {source.name} to {target.name}")
    if source.graph.induced(range(target.arity)) != target.graph:
        raise UnsupportedAveragingError(
            f"Type {target.name} is not a label prefix of type {source.name}"
        )


def unlabel_factor(flag: Flag, target: TypeSigma) -> Tuple[Flag, Fraction]:
    """Forget labels beyond ``target``'s and the probability that re-drawing them recovers ``flag``."""
    kept = tuple(range(target.arity))
    dropped = flag.flag_type.arity - target.arity
    free = [v for v in range(flag.level) if v >= target.arity]
    hits = 0
    for extra in permutations(free, dropped):
        labels = kept + extra
        if flag.graph.induced(labels) != flag.flag_type.graph:
            continue
        if canonical_labeled(flag.graph, labels) == flag.graph:
            hits += 1
    forgotten = Flag(canonical_labeled(flag.graph, kept), target)
    return forgotten, Fraction(hits, perm(len(free), dropped))


def average(f: LinComb, source: TypeSigma, target: TypeSigma) -> LinComb:
    """Averaging operator from type ``source`` down to type ``target``.

    Raises:
        TypeMismatchError: if ``f`` is not of type ``source``
        UnsupportedAveragingError: for type pairs outside 1→0, E→0, E→1, σ→0
    """
    if f.flag_type != source:
        raise TypeMismatchError(f"Expected type {source.name}, got {f.flag_type.name}")
    _check_averaging(source, target)
    terms: Dict[Flag, Fraction] = {}
    for flag, coefficient in f.terms.items():
        forgotten, q = unlabel_factor(flag, target)
        if q:
            terms[forgotten] = terms.get(forgotten, Fraction(0)) + coefficient * q
    return LinComb(target, f.level, terms)


def evaluate(f: LinComb, vector: DensityVector):
    """Value of a type-0 combination under a density vector of at least its level."""
    if f.flag_type != TYPE_0:
        raise TypeMismatchError(f"Only type-0 combinations can be evaluated, got {f.flag_type.name}")
    if f.level > vector.level:
        raise PreconditionError(f"Combination level {f.level} exceeds vector level {vector.level}")
    lifted = lift(f, vector.level)
    zero = Fraction(0) if vector.exact else 0.0
    total = zero
    for flag, coefficient in lifted.terms.items():
        value = vector.values.get(flag.graph, zero)
        total += coefficient * value if vector.exact else float(coefficient) * value
    return total


def is_identity(lhs: LinComb, rhs: LinComb) -> Tuple[bool, LinComb]:
    """Lift both sides to their common level and test the difference for exact zero."""
    difference = lhs - rhs
    return difference.is_zero(), difference
