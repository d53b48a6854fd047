"""Command dispatch: each command builds a Report of checks, findings and data."""

import json
import logging
import math
import time
from math import comb
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from core.config import (CURVE_TOLERANCE, DERIVATIVE_TOLERANCE, MAX_JOIN_ORDER, NUMERIC_TOLERANCE,
                         RATIO_TOLERANCE)
from core.enumeration import enumerate_graphs
from core.errors import EXIT_OK, EXIT_VERIFICATION_FAILED, PreconditionError
from core.graph import triangle_count, turan_graph
from core.graph6 import encode_graph6, read_graph6_file, write_graph6_file
from extremal.configurations import g1_g2, verify_5comb
from extremal.curves import (c_of, curve_checks, curve_table, goodman_bound, h3, h_r, kr_recursion_residual,
                             t_of)
from extremal.family import HFamilySpec, construct_H, h_statistics
from extremal.joins import (clique_densities, compare_join_forms, construction_convergence, edge_weighted_gap,
                            phi_member, vertex_linearity_gap)
from flags.flag import Flag
from flags.identities import check_id6, f_edge_expansion, identity_suite, resolve_fE
from flags.serialization import lincomb_to_payload
from report.commands import Command, default_parameters
from report.schemas import Report, RunConfig
from report.writers import write_report
from search.brute import brute_curve
from search.edit_distance import edit_distance_to_family
from search.growth import grow_trianglefree, random_trianglefree
from search.local_search import local_min
from search.ratios import minimize_ratios, perturbation_probe
from search.stability import stability_probe

logger = logging.getLogger(__name__)

Handler = Callable[[Dict[str, Any], RunConfig], Report]

SHAPE_TOLERANCE = 1e-6


def _flag_payload(flag: Flag) -> Dict[str, Any]:
    return {"graph6": encode_graph6(flag.graph, canonicalize=False), "labels": list(flag.labels)}


def _fe_section(report: Report, with_expansion: bool):
    triples = resolve_fE()
    report.add("resolve_fE_nonempty", bool(triples), detail=f"{len(triples)} triples")
    entries = []
    for index, triple in enumerate(triples):
        f_e = triple.f_e()
        if with_expansion:
            expansion = f_edge_expansion(triple, index)
            report.add(expansion.name, expansion.passed, detail=expansion.detail)
        slack = check_id6(f_e)
        if not slack.dominated:
            report.findings.append(
                f"triple {index}: slack expression has {len(slack.negatives)} negative coefficients "
                f"(min {slack.min_coefficient})"
            )
        entries.append({
            "central": _flag_payload(triple.central),
            "boundary": _flag_payload(triple.boundary),
            "other": _flag_payload(triple.other),
            "p4_shaped": triple.p4_shaped,
            "f_e": lincomb_to_payload(f_e).model_dump(by_alias=True),
            "slack_dominated": slack.dominated,
            "slack_min": str(slack.min_coefficient),
            "slack_negatives": [encode_graph6(g) for g in slack.negatives],
            "slack": {encode_graph6(g): str(c) for g, c in slack.coefficients.items()},
        })
    report.data["triples"] = entries


def run_identities(params: Dict[str, Any], config: RunConfig) -> Report:
    report = Report(command=Command.IDENTITIES.value, parameters=params)
    differences = {}
    for result in identity_suite(params["max_level"]):
        report.add(result.name, result.passed, detail=result.detail)
        if not result.passed:
            differences[result.name] = lincomb_to_payload(result.difference).model_dump(by_alias=True)
    report.data["differences"] = differences
    _fe_section(report, with_expansion=False)
    g1, g2 = g1_g2()
    report.add("five_vertex_cases", verify_5comb(), detail=f"G1 has {g1.edge_count} edges, G2 has {g2.edge_count}")
    return report


def run_resolve_fe(params: Dict[str, Any], config: RunConfig) -> Report:
    report = Report(command=Command.RESOLVE_FE.value, parameters=params)
    _fe_section(report, with_expansion=True)
    return report


def run_hcurve(params: Dict[str, Any], config: RunConfig) -> Report:
    report = Report(command=Command.HCURVE.value, parameters=params)
    report.rows = curve_table(params["start"], params["stop"], params["steps"])
    worst = curve_checks([row["a"] for row in report.rows])
    report.add("c_residual", worst["c_residual"] < CURVE_TOLERANCE, CURVE_TOLERANCE, worst["c_residual"])
    report.add("explicit_gap", worst["explicit_gap"] < CURVE_TOLERANCE, CURVE_TOLERANCE, worst["explicit_gap"])
    report.add("derivative_gap", worst["derivative_gap"] < DERIVATIVE_TOLERANCE, DERIVATIVE_TOLERANCE,
               worst["derivative_gap"])
    report.add("link_max_gap", worst["link_max_gap"] < NUMERIC_TOLERANCE, NUMERIC_TOLERANCE, worst["link_max_gap"])
    report.add("c_range", worst["c_range_violations"] == 0, value=worst["c_range_violations"])
    h = [row["h3"] for row in report.rows]
    report.add("h3_nondecreasing", all(y >= x - CURVE_TOLERANCE for x, y in zip(h, h[1:])), CURVE_TOLERANCE)
    report.add("goodman_below_h3", all(row["goodman"] <= row["h3"] + CURVE_TOLERANCE for row in report.rows),
               CURVE_TOLERANCE)
    return report


def run_brute(params: Dict[str, Any], config: RunConfig) -> Report:
    n, r = params["n"], params["r"]
    report = Report(command=Command.BRUTE.value, parameters=params)
    points = brute_curve(n, r, threads=config.threads)
    for p in points:
        report.rows.append({
            "n": n,
            "m": p.m,
            "min_count": p.min_count,
            "density_num": p.density.numerator,
            "density_den": p.density.denominator,
            "goodman": goodman_bound(r, p.m, n),
        })
    counts = [p.min_count for p in points]
    report.add("monotone", all(y >= x for x, y in zip(counts, counts[1:])))
    violations = [p.m for p in points if p.min_count < math.ceil(goodman_bound(r, p.m, n) - NUMERIC_TOLERANCE)]
    report.add("goodman_sweep", not violations, detail=f"violations at m={violations}" if violations else "")
    if r == 3:
        mantel = all((p.min_count == 0) == (p.m <= n * n // 4) for p in points)
        report.add("mantel", mantel)
        m = n * n // 4 + 1
        by_m = {p.m: p.min_count for p in points}
        if n >= 4 and m in by_m:
            report.add("rademacher", by_m[m] == n // 2, value=by_m[m], detail=f"m={m}, expected {n // 2}")
    witnesses = {str(p.m): [encode_graph6(g) for g in p.witnesses] for p in points}
    report.data["witnesses"] = witnesses
    if config.output and config.command is Command.BRUTE:
        path = Path(f"{config.output}.g6")
        write_graph6_file(path, [g for p in points for g in p.witnesses])
        logger.info(f"Witnesses written to {path}")
    return report


def run_construct(params: Dict[str, Any], config: RunConfig) -> Report:
    a = params["a"]
    report = Report(command=Command.CONSTRUCT.value, parameters=params)
    target = h3(a)
    for n in params["ns"]:
        stats = h_statistics(HFamilySpec(a, n), params["max_clique"])
        edge_gap = abs(float(stats.edge_density) - a)
        triangle_gap = abs(float(stats.triangle_density) - target)
        report.rows.append({
            "a": a,
            "n": n,
            "parts": "-".join(str(p) for p in stats.parts),
            "edges": stats.edges,
            "triangles": stats.triangles,
            "edge_density": float(stats.edge_density),
            "triangle_density": float(stats.triangle_density),
        })
        report.add(f"edge_density[{n}]", edge_gap <= 3 / n, 3 / n, edge_gap)
        report.add(f"triangle_density[{n}]", triangle_gap <= 6 / n, 6 / n, triangle_gap)
        if n <= 16:
            report.data[f"graph6[{n}]"] = encode_graph6(construct_H(HFamilySpec(a, n)))
    return report


def run_join(params: Dict[str, Any], config: RunConfig) -> Report:
    a, level, n = params["a"], params["level"], params["n"]
    report = Report(command=Command.JOIN.value, parameters=params)
    t, c = t_of(a), c_of(a)
    vector = phi_member(a, level=level)
    report.data["densities"] = {encode_graph6(g): v for g, v in vector.values.items()}
    if level >= 2:
        gap = abs(vector.clique(2) - a)
        report.add("edge_density", gap <= NUMERIC_TOLERANCE, NUMERIC_TOLERANCE, gap)
    for r in range(3, level + 1):
        gap = abs(vector.clique(r) - h_r(a, r))
        report.add(f"clique_density[{r}]", gap <= NUMERIC_TOLERANCE, NUMERIC_TOLERANCE, gap)
    cliques = clique_densities(vector, level)
    for r in range(3, min(level, t + 2) + 1):
        residual = abs(kr_recursion_residual(cliques, t, c, r))
        report.add(f"clique_recursion[{r}]", residual <= NUMERIC_TOLERANCE, NUMERIC_TOLERANCE, residual)
    if t + 2 <= level:
        vanish = abs(vector.clique(t + 2))
        report.add(f"clique_vanishes[{t + 2}]", vanish <= NUMERIC_TOLERANCE, NUMERIC_TOLERANCE, vanish)
    convergence = construction_convergence(a, n)
    for order, gap in convergence.gaps.items():
        report.add(f"construction_gap[{order}]", gap * order <= convergence.constant, convergence.constant / order, gap)
    report.add("construction_extrapolation", convergence.extrapolation_ok,
               convergence.constant / min(convergence.gaps), convergence.extrapolated)
    linear = abs(vertex_linearity_gap(a))
    report.add("vertex_linearity", linear <= NUMERIC_TOLERANCE, NUMERIC_TOLERANCE, linear)
    weighted = edge_weighted_gap(a)
    report.add("edge_weighted_inequality", weighted <= NUMERIC_TOLERANCE, NUMERIC_TOLERANCE, weighted)
    comparisons = compare_join_forms(enumerate_graphs(4))
    labeled_bad = [encode_graph6(cmp.graph) for cmp in comparisons if cmp.labeled_mismatch]
    report.add("join_vs_blowup", not labeled_bad, NUMERIC_TOLERANCE, detail=",".join(labeled_bad))
    literal_bad = [encode_graph6(cmp.graph) for cmp in comparisons if cmp.literal_mismatch]
    if literal_bad:
        report.findings.append(f"literal join normalization disagrees with the blow-up on {literal_bad}")
    report.data["join_forms"] = [
        {"graph6": encode_graph6(cmp.graph), "labeled": cmp.labeled, "literal": cmp.literal, "blowup": cmp.blowup}
        for cmp in comparisons
    ]
    return report


def _expected_ratio_shape(a: float) -> List[float]:
    t, c = t_of(a), c_of(a)
    parts = [c] * t + [1 - t * c]
    return sorted((p for p in parts if p > 1e-10), reverse=True)


def ratio_checks(report: Report, a: float, starts: int, seed: int, eps: float, suffix: str = ""):
    point = minimize_ratios(a, starts=starts, seed=seed)
    gap = abs(point.objective - h3(a) / 6)
    report.add(f"ratio_objective{suffix}", gap <= RATIO_TOLERANCE, RATIO_TOLERANCE, gap)
    expected = _expected_ratio_shape(a)
    width = max(len(expected), len(point.parts))
    padded = point.parts + [0.0] * (width - len(point.parts))
    reference = expected + [0.0] * (width - len(expected))
    shape_gap = max([abs(x - y) for x, y in zip(padded, reference)] + [point.c0])
    report.add(f"ratio_shape{suffix}", shape_gap <= SHAPE_TOLERANCE, SHAPE_TOLERANCE, shape_gap)
    return point


def run_ratios(params: Dict[str, Any], config: RunConfig) -> Report:
    a = params["a"]
    report = Report(command=Command.RATIOS.value, parameters=params)
    point = ratio_checks(report, a, params["starts"], config.seed, params["eps"])
    report.data["point"] = {"c0": point.c0, "parts": point.parts, "objective": point.objective,
                            "expected": h3(a) / 6}
    if len(point.parts) >= 3:
        probe = perturbation_probe(point, a, params["eps"])
        report.data["perturbation"] = probe
        report.add("perturbation_increases", bool(probe) and min(probe.values()) > 0,
                   value=min(probe.values()) if probe else None)
    return report


def run_grow(params: Dict[str, Any], config: RunConfig) -> Report:
    if not params.get("input"):
        raise PreconditionError("grow needs a graph6 input file")
    report = Report(command=Command.GROW.value, parameters=params)
    grown = []
    try:
        graphs = read_graph6_file(params["input"])
    except OSError as exc:
        raise PreconditionError(f"Cannot read {params['input']}: {exc}") from exc
    for index, g in enumerate(graphs):
        s = params["s"] if params["s"] is not None else g.order * g.order // 4
        result = grow_trianglefree(g, s)
        report.add(f"triangle_free[{index}]", triangle_count(result.graph) == 0)
        report.add(f"edge_count[{index}]", result.graph.edge_count == s, value=result.graph.edge_count)
        grown.append(result.graph)
        report.rows.append({"index": index, "n": g.order, "start_edges": g.edge_count, "target": s,
                            "edits": result.edits, "added": result.added, "removed": result.removed})
        report.data[str(index)] = {"graph6": encode_graph6(result.graph, canonicalize=False), "steps": result.steps}
    if config.output:
        write_graph6_file(Path(f"{config.output}.g6"), grown, canonicalize=False)
    return report


def run_stability(params: Dict[str, Any], config: RunConfig) -> Report:
    report = Report(command=Command.STABILITY.value, parameters=params)
    probe = stability_probe(params["n"], params["t"], params["delta"], params["m"])
    for entry in probe.entries:
        report.rows.append({"graph6": encode_graph6(entry.graph), "triangles": entry.triangles,
                            "distance": entry.distance, "normalized": str(entry.normalized())})
    report.data.update({"m": probe.m, "threshold": probe.threshold, "collected": len(probe.entries),
                        "max_distance": str(probe.max_distance)})
    report.findings.append(
        f"{len(probe.entries)} graphs within the threshold; max normalized distance {probe.max_distance}"
    )
    return report


def run_report_all(params: Dict[str, Any], config: RunConfig) -> Report:
    report = Report(command=Command.REPORT_ALL.value, parameters=params)
    sections: List[Tuple[str, Handler, Dict[str, Any]]] = [
        ("identities", run_identities, default_parameters(Command.IDENTITIES)),
        ("hcurve", run_hcurve, {"start": 0.5005, "stop": 0.99, "steps": 1000}),
        ("stability", run_stability, default_parameters(Command.STABILITY)),
    ]
    for n in range(4, params["brute_max_n"] + 1):
        sections.append((f"brute[{n}]", run_brute, {"n": n, "r": 3}))
    for a in (0.7, 0.8):
        sections.append((f"construct[{a}]", run_construct, {**default_parameters(Command.CONSTRUCT), "a": a}))
    for a in (0.55, 0.7, 0.76, 0.8):
        level = min(max(5, t_of(a) + 2), MAX_JOIN_ORDER)
        sections.append((f"join[{a}]", run_join, {"a": a, "level": level, "n": 400}))
    for name, handler, section_params in sections:
        started = time.perf_counter()
        report.merge(handler(section_params, config), name)
        logger.info(f"Section {name} done in {time.perf_counter() - started:.2f}s")

    ratios = Report(command=Command.RATIOS.value)
    for a in np.linspace(0.05, 0.9, params["ratio_points"]):
        ratio_checks(ratios, float(a), 8, config.seed, 0.01, suffix=f"[{float(a):.4f}]")
    report.merge(ratios, "ratios")

    search = Report(command="search")
    _search_checks(search, params, config)
    report.merge(search, "search")
    return report


def _search_checks(report: Report, params: Dict[str, Any], config: RunConfig):
    n = params["local_n"]
    for a in (0.7, 0.8):
        m = round(a * comb(n, 2))
        result = local_min(n, m, iters=params["local_iters"], seed=config.seed, threads=config.threads)
        density = float(result.density)
        report.add(f"local_min[{a}]", density <= h3(a) + 0.03, 0.03, density - h3(a))
        report.add(f"local_min_seeded[{a}]", result.count <= result.seeded_count, value=result.count)
        floor = h3(a) - 3 / n
        report.add(f"local_min_floor[{a}]", density >= floor, 3 / n, density - floor)
        report.data[f"local_min[{a}]"] = {"count": result.count, "seeded": result.seeded_count,
                                          "restart": result.restart, "accepted": result.accepted}

    bracket = edit_distance_to_family(turan_graph(4, 12), 0.7)
    report.add("family_member_distance", bracket.upper == 0, value=float(bracket.upper))

    rng = np.random.default_rng(config.seed)
    bad = []
    worst_ratio = 0.0
    for case in range(params["growth_cases"]):
        size = int(rng.integers(5, 61))
        start = random_trianglefree(size, int(rng.integers(0, size * size // 8 + 1)), rng)
        extra = int(rng.integers(0, max(1, int(0.005 * size * size)) + 1))
        s = min(start.edge_count + extra, size * size // 4)
        result = grow_trianglefree(start, s)
        if triangle_count(result.graph) or result.graph.edge_count != s:
            bad.append(case)
        worst_ratio = max(worst_ratio, result.edits / (size * size))
    report.add("growth_suite", not bad, detail=f"failing cases {bad}" if bad else "")
    report.add("growth_edit_budget", worst_ratio <= 0.05, 0.05, worst_ratio)
    report.data["growth_worst_edit_ratio"] = worst_ratio


HANDLERS: Dict[Command, Handler] = {
    Command.IDENTITIES: run_identities,
    Command.HCURVE: run_hcurve,
    Command.BRUTE: run_brute,
    Command.CONSTRUCT: run_construct,
    Command.JOIN: run_join,
    Command.RATIOS: run_ratios,
    Command.GROW: run_grow,
    Command.STABILITY: run_stability,
    Command.RESOLVE_FE: run_resolve_fe,
    Command.REPORT_ALL: run_report_all,
}


def execute(config: RunConfig) -> Report:
    started = time.perf_counter()
    report = HANDLERS[config.command](config.parameters, config)
    logger.info(
        f"Command {config.command.value} finished in {time.perf_counter() - started:.2f}s",
        extra={'context': json.dumps({'passed': report.passed, 'checks': len(report.checks),
                                      'findings': len(report.findings)})}
    )
    return report


def run(config: RunConfig) -> int:
    """Run one command, write its report and return the exit code."""
    report = execute(config)
    write_report(report, config.format, config.output)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED
