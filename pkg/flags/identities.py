"""Named flags and the exact identity suite of the triangle-minimization argument.

Every identity here is checked with rational arithmetic at the smallest common
level of its two sides; a check passes only when the difference is exactly zero.
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Optional

from core.canonical import are_isomorphic
from core.enumeration import enumerate_graphs
from core.errors import PreconditionError
from core.graph import Graph, complement, complete_graph, from_edges, path_graph, star_graph
from extremal.configurations import g1_g2
from flags.flag import Flag, contains_anti_path, enumerate_flags, graph_flag, make_flag
from flags.lincomb import LinComb, lift
from flags.operators import average, is_identity
from flags.types import TYPE_0, TYPE_1, TYPE_E, TYPES, TypeSigma

logger = logging.getLogger(__name__)

SUITE_MAX_LEVEL = 5

# type-0 graphs
RHO = graph_flag(complete_graph(2))
K3 = graph_flag(complete_graph(3))
K4 = graph_flag(complete_graph(4))
K5 = graph_flag(complete_graph(5))
ANTI_PATH = graph_flag(from_edges(3, [(0, 1)]))
ANTI_CLAW = graph_flag(complement(star_graph(3)))

# vertex-rooted flags
EDGE_ROOT = make_flag(complete_graph(2), (0,), TYPE_1)
K3_ROOT = make_flag(complete_graph(3), (0,), TYPE_1)

# edge-rooted flags
K3_EDGE = make_flag(complete_graph(3), (0, 1), TYPE_E)
ANTI_PATH_EDGE = make_flag(from_edges(3, [(0, 1)]), (0, 1), TYPE_E)


def lc(flag: Flag, coefficient=1) -> LinComb:
    return LinComb.of(flag, coefficient)


def all_flags(flag_type: TypeSigma, level: int) -> LinComb:
    """Sum of every flag of ``flag_type`` on ``level`` vertices."""
    return LinComb(flag_type, level, {f: 1 for f in enumerate_flags(flag_type, level)})


@dataclass
class IdentityResult:
    name: str
    passed: bool
    level: int
    difference: LinComb
    detail: str = ""


def _check(name: str, lhs: LinComb, rhs: LinComb, detail: str = "") -> IdentityResult:
    passed, difference = is_identity(lhs, rhs)
    if not passed:
        logger.warning(f"Identity {name} fails with {len(difference)} nonzero terms")
    return IdentityResult(name, passed, difference.level, difference, detail)


def triangle_edge_expansion() -> IdentityResult:
    """3[[e K3^1]]_1 + 3[[anti-path^E K3^E]]_E = 2 K3 + K4 + (1/4) anti-claw."""
    lhs = (
        average(lc(EDGE_ROOT) * lc(K3_ROOT), TYPE_1, TYPE_0).scale(3)
        + average(lc(ANTI_PATH_EDGE) * lc(K3_EDGE), TYPE_E, TYPE_0).scale(3)
    )
    rhs = lc(K3, 2) + lc(K4) + lc(ANTI_CLAW, Fraction(1, 4))
    return _check("triangle_edge_expansion", lhs, rhs)


def edge_square_expansion() -> IdentityResult:
    """(1/3) anti-path + 2[[e^2]]_1 = K2 + K3."""
    e = lc(EDGE_ROOT)
    lhs = lc(ANTI_PATH, Fraction(1, 3)) + average(e * e, TYPE_1, TYPE_0).scale(2)
    rhs = lc(RHO) + lc(K3)
    return _check("edge_square_expansion", lhs, rhs)


def averaging_anchors() -> List[IdentityResult]:
    return [
        _check("average_edge_root", average(lc(EDGE_ROOT), TYPE_1, TYPE_0), lc(RHO)),
        _check(
            "average_anti_path_edge",
            average(lc(ANTI_PATH_EDGE), TYPE_E, TYPE_0),
            lc(ANTI_PATH, Fraction(1, 3)),
        ),
        _check("average_triangle_edge_to_vertex", average(lc(K3_EDGE), TYPE_E, TYPE_1), lc(K3_ROOT)),
        _check("average_edge_unit_to_vertex", average(LinComb.one(TYPE_E), TYPE_E, TYPE_1), lc(EDGE_ROOT)),
    ]


def sum_to_one(max_level: int = SUITE_MAX_LEVEL) -> List[IdentityResult]:
    """Lifting each type's unit flag gives every flag with coefficient one."""
    results = []
    for flag_type in TYPES.values():
        for level in range(max(flag_type.arity, 1), max_level + 1):
            results.append(
                _check(
                    f"sum_to_one[{flag_type.name},{level}]",
                    lift(LinComb.one(flag_type), level),
                    all_flags(flag_type, level),
                )
            )
    return results


def pair_partition_sum() -> List[IdentityResult]:
    """Summing the pair densities over both factors gives one for every host."""
    results = []
    for flag_type, level in ((TYPE_0, 2), (TYPE_1, 2), (TYPE_E, 3)):
        host_level = 2 * level - flag_type.arity
        results.append(
            _check(
                f"pair_partition_sum[{flag_type.name},{level}]",
                all_flags(flag_type, level) * all_flags(flag_type, level),
                all_flags(flag_type, host_level),
            )
        )
    return results


def averaging_transitivity(level: int = 4) -> IdentityResult:
    """Averaging E to 1 and then 1 to 0 equals averaging E to 0, flag by flag."""
    failing: Optional[IdentityResult] = None
    for flag in enumerate_flags(TYPE_E, level):
        two_step = average(average(lc(flag), TYPE_E, TYPE_1), TYPE_1, TYPE_0)
        one_step = average(lc(flag), TYPE_E, TYPE_0)
        result = _check("averaging_transitivity", two_step, one_step, detail=repr(flag))
        if not result.passed:
            failing = result
            break
    if failing:
        return failing
    return IdentityResult("averaging_transitivity", True, level, LinComb(TYPE_0, level))


@dataclass(frozen=True)
class FETriple:
    """Flags (central, boundary, other) entering f^E = (1/2)central - (1/2)boundary - other."""
    central: Flag
    boundary: Flag
    other: Flag
    p4_shaped: bool = False

    def f_e(self) -> LinComb:
        half = Fraction(1, 2)
        return lc(self.central, half) - lc(self.boundary, half) - lc(self.other)


def f_edge_expansion_sides(f_e: LinComb):
    """Both sides of 2[[e K3^1]]_1 - [[f^E]]_E = (4/3)K3 + (2/3)K4 - (1/3) anti-claw."""
    lhs = average(lc(EDGE_ROOT) * lc(K3_ROOT), TYPE_1, TYPE_0).scale(2) - average(f_e, TYPE_E, TYPE_0)
    rhs = lc(K3, Fraction(4, 3)) + lc(K4, Fraction(2, 3)) - lc(ANTI_CLAW, Fraction(1, 3))
    return lhs, rhs


def _label_degrees(flag: Flag) -> List[int]:
    return sorted(flag.graph.degree(v) for v in flag.labels)


def is_p4_pair(central: Flag, boundary: Flag) -> bool:
    """Both flags are the 4-vertex path, labeled on its middle and on an end edge."""
    p4 = path_graph(4)
    return (
        are_isomorphic(central.graph, p4)
        and are_isomorphic(boundary.graph, p4)
        and _label_degrees(central) == [2, 2]
        and _label_degrees(boundary) == [1, 2]
    )


def resolve_fE(level: int = 4) -> List[FETriple]:
    """All flag triples on ``level`` vertices for which the f^E expansion holds exactly.

    The boundary and other flags must contain an unlabeled vertex missing both
    labels. An empty list is a finding, not an error.
    """
    flags = enumerate_flags(TYPE_E, level)
    averaged: Dict[Flag, LinComb] = {f: average(lc(f), TYPE_E, TYPE_0) for f in flags}
    lhs, rhs = f_edge_expansion_sides(LinComb(TYPE_E, level))
    # [[f^E]] must equal 2[[e K3^1]] - rhs
    target = lhs - rhs
    anti = [f for f in flags if contains_anti_path(f)]
    half = Fraction(1, 2)
    found = []
    for central, boundary, other in cartesian(flags, anti, anti):
        candidate = averaged[central].scale(half) - averaged[boundary].scale(half) - averaged[other]
        if candidate == target:
            found.append(FETriple(central, boundary, other, is_p4_pair(central, boundary)))
    logger.info(
        f"Resolved {len(found)} f^E triples over {len(flags)} edge flags",
        extra={'context': json.dumps({
            'flags': len(flags),
            'triples': len(found),
            'p4_shaped': sum(t.p4_shaped for t in found),
        })}
    )
    return found


def f_edge_expansion(triple: FETriple, index: int = 0) -> IdentityResult:
    lhs, rhs = f_edge_expansion_sides(triple.f_e())
    return _check(f"f_edge_expansion[{index}]", lhs, rhs, detail="p4" if triple.p4_shaped else "")


@dataclass
class SlackReport:
    """Coefficients of the level-5 slack expression for one f^E."""
    coefficients: Dict[Graph, Fraction] = field(default_factory=dict)
    negatives: List[Graph] = field(default_factory=list)

    @property
    def dominated(self) -> bool:
        return not self.negatives

    @property
    def min_coefficient(self) -> Fraction:
        return min(self.coefficients.values())


def id6_expression(f_e: LinComb) -> LinComb:
    """[[f^E K3^E]]_E - [[(K3^1)^2]]_1 - (1/60)(G1+G2) + (1/2)K4 + (1/3)rho K3 + (1/6)K5."""
    if f_e.flag_type != TYPE_E or f_e.level != 4:
        raise PreconditionError(f"f^E must be an edge-type combination on 4 vertices, got {f_e.flag_type.name} at level {f_e.level}")
    g1, g2 = g1_g2()
    k3_root = lc(K3_ROOT)
    return (
        average(f_e * lc(K3_EDGE), TYPE_E, TYPE_0)
        - average(k3_root * k3_root, TYPE_1, TYPE_0)
        - (lc(graph_flag(g1)) + lc(graph_flag(g2))).scale(Fraction(1, 60))
        + lc(K4, Fraction(1, 2))
        + (lc(RHO) * lc(K3)).scale(Fraction(1, 3))
        + lc(K5, Fraction(1, 6))
    )


def check_id6(f_e: LinComb) -> SlackReport:
    """Coefficient of every 5-vertex graph in the slack expression, negatives flagged."""
    expression = lift(id6_expression(f_e), 5)
    report = SlackReport()
    for g in enumerate_graphs(5):
        coefficient = expression[graph_flag(g)]
        report.coefficients[g] = coefficient
        if coefficient < 0:
            report.negatives.append(g)
    if report.negatives:
        logger.warning(f"Slack expression has {len(report.negatives)} negative coefficients")
    return report


def identity_suite(max_level: int = SUITE_MAX_LEVEL) -> List[IdentityResult]:
    """Every exact identity check, including one expansion check per resolved f^E triple."""
    results = [triangle_edge_expansion(), edge_square_expansion()]
    results.extend(averaging_anchors())
    results.extend(sum_to_one(max_level))
    results.extend(pair_partition_sum())
    results.append(averaging_transitivity())
    for index, triple in enumerate(resolve_fE()):
        results.append(f_edge_expansion(triple, index))
    failed = [r.name for r in results if not r.passed]
    logger.info(f"Identity suite: {len(results) - len(failed)}/{len(results)} passed")
    if failed:
        logger.warning(f"Failing identities: {failed}")
    return results
