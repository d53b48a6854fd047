"""Flags: graphs with an ordered tuple of labeled vertices realizing a type."""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Dict, List, Sequence, Tuple

from core.canonical import canonical_labeled
from core.config import MAX_FLAG_LEVEL
from core.enumeration import enumerate_graphs
from core.errors import OrderLimitError, PreconditionError, TypeMismatchError
from core.graph import Graph
from flags.types import TYPE_0, TypeSigma

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flag:
    """Canonical flag; the labeled vertices occupy positions 0..arity-1 in label order."""
    graph: Graph
    flag_type: TypeSigma

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(range(self.flag_type.arity))

    @property
    def level(self) -> int:
        return self.graph.order

    @property
    def unlabeled(self) -> Tuple[int, ...]:
        return tuple(range(self.flag_type.arity, self.graph.order))

    def __repr__(self) -> str:
        return f"Flag({self.flag_type.name}, order={self.level}, edges={self.graph.edges()})"


def make_flag(graph: Graph, labels: Sequence[int], flag_type: TypeSigma) -> Flag:
    """Canonical flag for ``graph`` with ``labels`` realizing ``flag_type``.

    Raises:
        PreconditionError: if the labels are not distinct or do not induce the type
    """
    labels = tuple(labels)
    if len(labels) != flag_type.arity or len(set(labels)) != len(labels):
        raise PreconditionError(f"Type {flag_type.name} needs {flag_type.arity} distinct labels, got {labels}")
    if any(not 0 <= v < graph.order for v in labels):
        raise PreconditionError(f"Labels {labels} outside a {graph.order}-vertex graph")
    if graph.induced(labels) != flag_type.graph:
        raise PreconditionError(f"Labels {labels} do not induce type {flag_type.name}")
    return Flag(canonical_labeled(graph, labels), flag_type)


def graph_flag(graph: Graph) -> Flag:
    return make_flag(graph, (), TYPE_0)


def identity_flag(flag_type: TypeSigma) -> Flag:
    return Flag(flag_type.graph, flag_type)


def _check_level(flag_type: TypeSigma, level: int):
    if not flag_type.arity <= level <= MAX_FLAG_LEVEL:
        raise OrderLimitError(
            f"Flags of type {flag_type.name} exist for levels {flag_type.arity}..{MAX_FLAG_LEVEL}, got {level}"
        )


def _sort_key(flag: Flag):
    return flag.graph.edge_count, flag.graph.rows


@lru_cache(maxsize=None)
def _enumerate_flags(flag_type: TypeSigma, level: int) -> Tuple[Flag, ...]:
    if level == 0:
        return (identity_flag(flag_type),)
    found: Dict[Flag, None] = {}
    for g in enumerate_graphs(level):
        if flag_type.arity == 0:
            found.setdefault(Flag(g, flag_type), None)
            continue
        for labels in permutations(range(level), flag_type.arity):
            if g.induced(labels) == flag_type.graph:
                found.setdefault(Flag(canonical_labeled(g, labels), flag_type), None)
    flags = sorted(found, key=_sort_key)
    logger.debug(f"{len(flags)} flags of type {flag_type.name} on {level} vertices")
    return tuple(flags)


def enumerate_flags(flag_type: TypeSigma, level: int) -> List[Flag]:
    """One representative per flag-isomorphism class of ``flag_type`` on ``level`` vertices."""
    _check_level(flag_type, level)
    return list(_enumerate_flags(flag_type, level))


def _sub_flag(host: Flag, chosen: Sequence[int]) -> Flag:
    vertices = host.labels + tuple(chosen)
    induced = host.graph.induced(vertices)
    return Flag(canonical_labeled(induced, host.labels), host.flag_type)


@lru_cache(maxsize=50_000)
def flag_profile(host: Flag, level: int) -> Dict[Flag, int]:
    """Counts of sub-flags on ``level`` vertices over all unlabeled-vertex choices."""
    counts: Counter = Counter()
    for chosen in combinations(host.unlabeled, level - host.flag_type.arity):
        counts[_sub_flag(host, chosen)] += 1
    return dict(counts)


@lru_cache(maxsize=50_000)
def pair_profile(host: Flag, first_level: int) -> Dict[Tuple[Flag, Flag], int]:
    """Counts of (first, second) sub-flag pairs over splits of the unlabeled vertices."""
    counts: Counter = Counter()
    unlabeled = host.unlabeled
    for chosen in combinations(unlabeled, first_level - host.flag_type.arity):
        rest = tuple(v for v in unlabeled if v not in chosen)
        counts[(_sub_flag(host, chosen), _sub_flag(host, rest))] += 1
    return dict(counts)


def flag_density(f: Flag, g: Flag) -> Fraction:
    """Probability that random unlabeled vertices of ``g`` extend its labels to a copy of ``f``."""
    if f.flag_type != g.flag_type:
        raise TypeMismatchError(f"Cannot compare flags of types {f.flag_type.name} and {g.flag_type.name}")
    if f.level > g.level:
        raise PreconditionError(f"Flag of order {f.level} cannot sit inside order {g.level}")
    arity = f.flag_type.arity
    total = comb(g.level - arity, f.level - arity)
    return Fraction(flag_profile(g, f.level).get(f, 0), total)


def pair_density(f1: Flag, f2: Flag, host: Flag) -> Fraction:
    """p(f1, f2; host) over uniformly random splits of the unlabeled vertices of ``host``."""
    if not f1.flag_type == f2.flag_type == host.flag_type:
        raise TypeMismatchError("Pair density needs three flags of the same type")
    arity = host.flag_type.arity
    if host.level != f1.level + f2.level - arity:
        raise PreconditionError(
            f"Host order {host.level} != {f1.level} + {f2.level} - {arity}"
        )
    total = comb(host.level - arity, f1.level - arity)
    return Fraction(pair_profile(host, f1.level).get((f1, f2), 0), total)


def contains_anti_path(flag: Flag) -> bool:
    """Whether some unlabeled vertex is non-adjacent to the first two labels."""
    return any(flag.graph.rows[v] & 0b11 == 0 for v in flag.unlabeled)
