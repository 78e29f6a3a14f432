"""Batch verification suites with reproducible JSON reports.

Every suite is a pure function of its config: the same seed, sample
count, and size limits always produce a byte-identical report. Each
failing record carries a shell command that regenerates the instance
and reruns the check.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from . import __version__
from .extraction import (
    check_certificate,
    degree_square_census,
    extract_general,
    extract_large_alpha,
    extract_regular,
    extract_triple,
)
from .generators import (
    RNG_NAME,
    SplitMix64,
    cycle_power,
    random_c4free,
    w5_blowup,
)
from .graph import (
    Graph,
    GraphInputError,
    _scan_induced_c4,
    build_graph,
    classify_set,
    common_neighbors,
    find_induced_c4,
    greedy_maximal_independent_set,
    has_induced_c4_naive,
    is_clique,
    max_clique_exact,
)
from .structure import alpha2_decompose, clique_from_certificate, verify_certificate

SUITE_NAMES = (
    "cycle-powers",
    "bounds-general",
    "bounds-triple",
    "large-alpha",
    "structure",
    "checker-equiv",
)


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    seed: int
    samples: int
    max_n: int
    oracle_limit: int = 48
    epsilon: Fraction = Fraction(1, 2)

    def echo(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "max_n": self.max_n,
            "oracle_limit": self.oracle_limit,
            "epsilon": str(self.epsilon),
            "rng": RNG_NAME,
        }


@dataclass
class Report:
    suite: str
    config: dict
    records: list[dict] = field(default_factory=list)
    passed: int = 0
    failed: int = 0
    tool_version: str = __version__
    format_version: int = 1

    def add(self, record: dict) -> None:
        if record["pass"]:
            self.passed += 1
        else:
            assert "repro" in record, "failing records must carry a repro command"
            self.failed += 1
        self.records.append(record)

    def all_passed(self) -> bool:
        return self.failed == 0

    def to_json_dict(self) -> dict:
        assert self.passed + self.failed == len(self.records)
        return {
            "format_version": self.format_version,
            "suite": self.suite,
            "config": self.config,
            "records": self.records,
            "passed": self.passed,
            "failed": self.failed,
            "tool_version": self.tool_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def run_suite(config: SuiteConfig) -> Report:
    runners = {
        "cycle-powers": _run_cycle_powers,
        "bounds-general": _run_bounds_general,
        "bounds-triple": _run_bounds_triple,
        "large-alpha": _run_large_alpha,
        "structure": _run_structure,
        "checker-equiv": _run_checker_equiv,
    }
    if config.suite not in runners:
        raise GraphInputError(
            f"unknown suite {config.suite!r}; choose from {', '.join(SUITE_NAMES)}"
        )
    report = Report(suite=config.suite, config=config.echo())
    runners[config.suite](config, report)
    return report


def _ceil(value: Fraction) -> int:
    return math.ceil(value)


def _oracle_omega(g: Graph, limit: int) -> Optional[int]:
    if g.n > limit:
        return None
    return len(max_clique_exact(g, limit=limit))


# ---------------------------------------------------------------------------
# Random corpus shared by the bound suites
# ---------------------------------------------------------------------------


def _random_corpus(config: SuiteConfig) -> Iterator[tuple[dict, Graph]]:
    """Seeded stream of C4-free instances with minimum degree >= 1.

    Sizes are drawn from 5..max_n. Most instances are sparse (target
    average degree 1..6, where repair work is small); one in five is
    medium (p = 1/2) or dense (p = 9/10), which survives repair with a
    high minimum degree and makes the bounds non-vacuous. Draws with an
    isolated vertex are discarded and redrawn.
    """
    rng = SplitMix64(config.seed)
    produced = 0
    while produced < config.samples:
        n = 5 + rng.next_below(max(config.max_n - 4, 1))
        style = rng.next_below(10)
        if style < 8:
            avg_deg = 1 + rng.next_below(min(6, n - 1))
            p = Fraction(avg_deg, max(n - 1, 1))
        elif style == 8:
            p = Fraction(1, 2)
        else:
            p = Fraction(9, 10)
        inst_seed = rng.next_u64()
        g = random_c4free(n, p, inst_seed)
        if g.min_degree() < 1:
            continue
        params = {"kind": "random", "n": n, "p": str(p), "seed": inst_seed}
        produced += 1
        yield params, g


def _random_repro(params: dict, extract_cmd: str) -> str:
    gen = (
        f"c4free gen random --n {params['n']} --p {params['p']} "
        f"--seed {params['seed']}"
    )
    return f"{gen} | {extract_cmd} -"


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def _run_cycle_powers(config: SuiteConfig, report: Report) -> None:
    max_k = (config.max_n - 1) // 4
    if max_k < 1:
        raise GraphInputError("cycle-powers needs max_n >= 5")
    for k in range(1, max_k + 1):
        g = cycle_power(k)
        cert = extract_regular(g)
        omega = _oracle_omega(g, config.oracle_limit)
        ok = (
            cert.verified
            and check_certificate(g, cert)
            and cert.size == k + 1
            and (omega is None or omega == k + 1)
        )
        record = {
            "id": f"cycle-powers-{k:03d}",
            "generator": {"kind": "cycle-power", "k": k},
            "n": g.n,
            "min_degree": g.min_degree(),
            "method": cert.method,
            "bound": str(cert.guaranteed_bound),
            "clique_size": cert.size,
            "omega": omega,
            "pass": bool(ok),
            "witness_summary": {"route": cert.witness.get("route")},
        }
        if not ok:
            record["repro"] = (
                f"c4free gen cycle-power --k {k} | "
                "c4free clique extract --method regular -"
            )
        report.add(record)


def _run_bounds_general(config: SuiteConfig, report: Report) -> None:
    for idx, (params, g) in enumerate(_random_corpus(config)):
        delta = g.min_degree()
        cert = extract_general(g)
        omega = _oracle_omega(g, config.oracle_limit)
        floor = _ceil(Fraction(delta * delta, 2 * g.n + delta))
        ok = (
            cert.verified
            and check_certificate(g, cert)
            and cert.size >= floor
            and (omega is None or cert.size <= omega)
        )
        record = {
            "id": f"bounds-general-{idx:04d}",
            "generator": params,
            "n": g.n,
            "min_degree": delta,
            "method": cert.method,
            "bound": str(cert.guaranteed_bound),
            "clique_size": cert.size,
            "omega": omega,
            "pass": bool(ok),
            "witness_summary": {"route": cert.witness.get("route")},
        }
        if not ok:
            record["repro"] = _random_repro(
                params, "c4free clique extract --method general"
            )
        report.add(record)


def _run_bounds_triple(config: SuiteConfig, report: Report) -> None:
    produced = 0
    corpus = _random_corpus(
        SuiteConfig(
            suite=config.suite,
            seed=config.seed,
            samples=config.samples * 8,
            max_n=config.max_n,
            oracle_limit=config.oracle_limit,
        )
    )
    for params, g in corpus:
        if produced >= config.samples:
            break
        delta = g.min_degree()
        if Fraction(delta) > Fraction(11 * g.n, 15):
            continue
        produced += 1
        cert = extract_triple(g)
        omega = _oracle_omega(g, config.oracle_limit)
        bound = Fraction(delta) - Fraction(g.n, 3)
        if cert.method == "triple":
            bound_ok = Fraction(cert.size) > bound
        else:
            bound_ok = cert.size >= _ceil(Fraction(2 * g.n, 5))
        ok = (
            cert.verified
            and check_certificate(g, cert)
            and bound_ok
            and (omega is None or cert.size <= omega)
        )
        record = {
            "id": f"bounds-triple-{produced - 1:04d}",
            "generator": params,
            "n": g.n,
            "min_degree": delta,
            "method": cert.method,
            "bound": str(cert.guaranteed_bound),
            "clique_size": cert.size,
            "omega": omega,
            "pass": bool(ok),
            "witness_summary": {"route": cert.witness.get("route")},
        }
        if not ok:
            record["repro"] = _random_repro(
                params, "c4free clique extract --method triple"
            )
        report.add(record)


def _run_large_alpha(config: SuiteConfig, report: Report) -> None:
    for idx, (params, g) in enumerate(_random_corpus(config)):
        s = greedy_maximal_independent_set(g)
        census = degree_square_census(g, s)
        identity_ok = (
            census["sum_deg_sq"] == census["sum_sizes"] + census["sum_pairwise"]
        )
        cs_ok = Fraction(census["sum_deg_sq"]) >= census["cs_floor"]
        cert = extract_large_alpha(g, s, config.epsilon)
        omega = _oracle_omega(g, config.oracle_limit)
        conditional_ok = (not cert.precondition_met) or (
            Fraction(cert.size) >= cert.guaranteed_bound
        )
        ok = (
            identity_ok
            and cs_ok
            and conditional_ok
            and cert.verified
            and check_certificate(g, cert)
            and (omega is None or cert.size <= omega)
        )
        record = {
            "id": f"large-alpha-{idx:04d}",
            "generator": params,
            "n": g.n,
            "min_degree": g.min_degree(),
            "method": cert.method,
            "bound": str(cert.guaranteed_bound),
            "clique_size": cert.size,
            "omega": omega,
            "pass": bool(ok),
            "witness_summary": {
                "t": len(s),
                "identity": identity_ok,
                "cauchy_schwarz": cs_ok,
                "precondition_met": cert.precondition_met,
            },
        }
        if not ok:
            record["repro"] = _random_repro(
                params,
                f"c4free clique extract --method large-alpha "
                f"--epsilon {config.epsilon}",
            )
        report.add(record)


def _structure_instances(config: SuiteConfig) -> Iterator[tuple[dict, Graph]]:
    """Alternating 5-wheel blow-ups and co-bipartite C4-free instances."""
    rng = SplitMix64(config.seed)
    for idx in range(config.samples):
        if idx % 2 == 0:
            sizes = [rng.next_below(4)] + [1 + rng.next_below(4) for _ in range(5)]
            g = w5_blowup(sizes)
            yield {"kind": "w5", "sizes": sizes}, g
        else:
            n = 5 + rng.next_below(max(config.max_n - 4, 1))
            side_mask = rng.next_u64() & ((1 << n) - 1)
            inst_seed = rng.next_u64()
            g = _co_bipartite_c4free(n, side_mask, inst_seed)
            yield {"kind": "co-bipartite", "n": n, "side_mask": side_mask,
                   "seed": inst_seed}, g


def _co_bipartite_c4free(n: int, side_mask: int, seed: int) -> Graph:
    # Complement of a random bipartite graph, then chords are added until
    # no induced 4-cycle remains. Adding the chord (a, c) of a found
    # quadruple keeps both sides cliques, so the complement stays
    # bipartite; missing pairs strictly decrease, so the loop ends.
    rng = SplitMix64(seed)
    half = Fraction(1, 2)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            same_side = bool(side_mask >> u & 1) == bool(side_mask >> v & 1)
            if same_side or rng.chance(half):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    while True:
        witness = _scan_induced_c4(adj, n)
        if witness is None:
            break
        a, c = witness.a, witness.c
        adj[a] |= 1 << c
        adj[c] |= 1 << a
    edge_count = sum(row.bit_count() for row in adj) // 2
    return Graph(n=n, adj=tuple(adj), edge_count=edge_count)


def _run_structure(config: SuiteConfig, report: Report) -> None:
    for idx, (params, g) in enumerate(_structure_instances(config)):
        cert = alpha2_decompose(g)
        valid = verify_certificate(g, cert)
        clique = clique_from_certificate(g, cert)
        floor = _ceil(Fraction(2 * g.n, 5))
        ok = valid and is_clique(g, clique) and len(clique) >= floor
        record = {
            "id": f"structure-{idx:04d}",
            "generator": params,
            "n": g.n,
            "min_degree": g.min_degree(),
            "method": cert.kind,
            "bound": str(Fraction(2 * g.n, 5)),
            "clique_size": len(clique),
            "omega": _oracle_omega(g, config.oracle_limit),
            "pass": bool(ok),
            "witness_summary": {"kind": cert.kind},
        }
        if not ok:
            if params["kind"] == "w5":
                sizes = ",".join(str(s) for s in params["sizes"])
                record["repro"] = f"c4free gen w5 --sizes {sizes} | c4free structure -"
            else:
                record["repro"] = (
                    f"c4free verify --suite structure --seed {config.seed} "
                    f"--samples {config.samples} --max-n {config.max_n}"
                )
        report.add(record)


def _all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield build_graph(n, edges)


def _run_checker_equiv(config: SuiteConfig, report: Report) -> None:
    # Exhaustive phase over every graph on up to six vertices, then a
    # seeded random phase up to twelve. Agreement is checked between the
    # pair-scan detector, the 4-subset enumerator, and the clique
    # characterization of non-adjacent pairs' common neighborhoods.
    for n in range(0, min(6, config.max_n) + 1):
        checked = 0
        disagreements = 0
        for g in _all_graphs(n):
            checked += 1
            if not _detectors_agree(g):
                disagreements += 1
        record = {
            "id": f"checker-equiv-exhaustive-n{n}",
            "generator": {"kind": "exhaustive", "n": n},
            "n": n,
            "min_degree": 0,
            "method": "detector-agreement",
            "bound": "0",
            "clique_size": 0,
            "omega": None,
            "pass": disagreements == 0,
            "witness_summary": {"graphs_checked": checked},
        }
        if disagreements:
            record["repro"] = (
                f"c4free verify --suite checker-equiv --seed {config.seed} "
                f"--samples 0 --max-n {n}"
            )
        report.add(record)

    rng = SplitMix64(config.seed)
    for idx in range(config.samples):
        n = 1 + rng.next_below(min(12, config.max_n))
        p = Fraction(5 + rng.next_below(90), 100)
        inst_seed = rng.next_u64()
        inner = SplitMix64(inst_seed)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if inner.chance(p)
        ]
        g = build_graph(n, edges)
        ok = _detectors_agree(g)
        record = {
            "id": f"checker-equiv-random-{idx:04d}",
            "generator": {"kind": "raw-random", "n": n, "p": str(p), "seed": inst_seed},
            "n": n,
            "min_degree": g.min_degree(),
            "method": "detector-agreement",
            "bound": "0",
            "clique_size": 0,
            "omega": None,
            "pass": bool(ok),
            "witness_summary": {"edges": g.edge_count},
        }
        if not ok:
            record["repro"] = (
                f"c4free verify --suite checker-equiv --seed {config.seed} "
                f"--samples {config.samples} --max-n {config.max_n}"
            )
        report.add(record)


def _detectors_agree(g: Graph) -> bool:
    scan = find_induced_c4(g)
    naive = has_induced_c4_naive(g)
    if (scan is not None) != naive:
        return False
    if scan is not None:
        a, b, c, d = scan
        edges_ok = (
            g.has_edge(a, b)
            and g.has_edge(b, c)
            and g.has_edge(c, d)
            and g.has_edge(d, a)
            and not g.has_edge(a, c)
            and not g.has_edge(b, d)
        )
        if not edges_ok:
            return False
    # C4-freeness iff every non-adjacent pair has a clique common
    # neighborhood.
    pairs_clique = all(
        classify_set(g, common_neighbors(g, u, v)).kind == "clique"
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    )
    return pairs_clique == (scan is None)
