"""Brute-force ground truth, random instances and the cross-validation harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

import numpy as np

from ._enumerate import scan_orientations
from .criteria import eta, min_delta, min_eta, verify_factor, verify_orientation
from .factor import (
    BRUTE_FORCE_EDGE_LIMIT,
    brute_force_parity_factor,
    find_parity_factor,
    find_parity_orientation,
)
from .graph import (
    Bounds,
    Graph,
    SizeLimitError,
    check_bounds,
    components_excluding,
    edge_count_within,
    serialize_graph,
)
from .subdivision import (
    SubdivisionMap,
    factor_to_orientation,
    lift_bounds,
    orientation_to_factor,
    subdivide,
)

STYLES = ("tight", "interval", "mixed")
MAX_VALIDATE_N = 8
MAX_VALIDATE_M = 14


def orientation_exists_brute(
    graph: Graph, bounds: Bounds, count: bool = False, limit: int = BRUTE_FORCE_EDGE_LIMIT
):
    """Enumerate all ``2**m`` orientations.

    Returns the first parity orientation (bit ``i`` of the enumeration mask
    clear means edge ``i`` leaves its first listed endpoint), ``None`` if
    none exists, or with ``count=True`` the number of parity orientations.
    """
    check_bounds(graph, bounds)
    if graph.m > limit:
        raise SizeLimitError(f"brute-force orientation search limited to {limit} edges, got {graph.m}")
    result = scan_orientations(graph, bounds, count=count)
    if count or result is None:
        return result
    return tuple(e[result >> i & 1] for i, e in enumerate(graph.edges))


def relaxed_bounds(sm: SubdivisionMap, bounds: Bounds) -> Bounds:
    """Original bounds on the old vertices, ``(-1, 3)`` on every subdivision vertex."""
    check_bounds(sm.original, bounds)
    m = sm.original.m
    return Bounds(bounds.g + (-1,) * m, bounds.f + (3,) * m)


def odd_count_terms(graph: Graph, bounds: Bounds, s: Iterable[int], t: Iterable[int]) -> dict[str, int]:
    """Both sides of ``q = e(S) + e(T) + r`` for ``S, T`` inside the original vertices.

    ``q`` counts components ``R`` of the subdivided graph minus ``S | T``
    with ``f2(R) + e(R, T)`` odd under :func:`relaxed_bounds`; ``r`` counts
    components ``D`` of ``G - S - T`` with ``f(D) + e(D) + e(D, S)`` odd.
    """
    s, t = frozenset(s), frozenset(t)
    sm = subdivide(graph)
    f2 = relaxed_bounds(sm, bounds)
    q = sum(
        1
        for c in components_excluding(sm.sub_graph, s, t)
        if (f2.f_sum(c.vertices) + c.to_t) % 2 == 1
    )
    _, odd = eta(graph, bounds, s, t)
    return {
        "q": q,
        "e_s": edge_count_within(graph, s),
        "e_t": edge_count_within(graph, t),
        "r": len(odd),
    }


def odd_count_identity_check(graph: Graph, bounds: Bounds, s: Iterable[int], t: Iterable[int]) -> bool:
    terms = odd_count_terms(graph, bounds, s, t)
    return terms["q"] == terms["e_s"] + terms["e_t"] + terms["r"]


def random_instance(
    seed: int,
    n: int,
    edge_density: float,
    bound_style: str = "mixed",
    max_edges: Optional[int] = None,
) -> tuple[Graph, Bounds]:
    """Reproducible random multigraph with normalized parity bounds.

    Each vertex pair gets an edge with probability ``edge_density`` and
    further parallel copies with probability ``edge_density / 3`` each.
    ``tight`` bounds have ``g = f``; ``interval`` bounds span a random
    parity range; ``mixed`` picks one of the two per vertex. Half of the
    vertices anchor their bounds at the out-degree of a hidden random
    orientation, which keeps feasible instances common.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= edge_density <= 1:
        raise ValueError("edge_density must lie in [0, 1]")
    if bound_style not in STYLES:
        raise ValueError(f"bound_style must be one of {STYLES}")
    if max_edges is not None and max_edges < 0:
        raise ValueError("max_edges must be nonnegative")
    rng = np.random.default_rng(seed)

    edges = []
    for u in range(n):
        for w in range(u + 1, n):
            if rng.random() < edge_density:
                edges.append((u, w))
                while rng.random() < edge_density / 3:
                    edges.append((u, w))
    if max_edges is not None and len(edges) > max_edges:
        keep = np.sort(rng.choice(len(edges), size=max_edges, replace=False))
        edges = [edges[i] for i in keep]
    edges = [(w, u) if rng.random() < 0.5 else (u, w) for u, w in edges]
    graph = Graph(n, tuple(edges))

    hidden = [0] * n
    for u, w in edges:
        hidden[u if rng.random() < 0.5 else w] += 1

    g, f = [], []
    for v in range(n):
        d = graph.degree(v)
        anchor = hidden[v] if rng.random() < 0.5 else int(rng.integers(0, d + 1))
        style = bound_style if bound_style != "mixed" else STYLES[int(rng.integers(0, 2))]
        if style == "tight":
            lo = hi = anchor
        else:
            lo = anchor - 2 * int(rng.integers(0, anchor // 2 + 1))
            hi = anchor + 2 * int(rng.integers(0, (d - anchor) // 2 + 1))
        g.append(lo)
        f.append(hi)
    return graph, Bounds(tuple(g), tuple(f))


@dataclass
class ValidationConfig:
    seed: int = 0
    trials: int = 100
    n_max: int = 7
    m_max: int = 12
    style: str = "any"

    def check(self) -> None:
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 1 <= self.n_max <= MAX_VALIDATE_N:
            raise SizeLimitError(f"n_max must lie in [1, {MAX_VALIDATE_N}]")
        if not 0 <= self.m_max <= MAX_VALIDATE_M:
            raise SizeLimitError(f"m_max must lie in [0, {MAX_VALIDATE_M}]")
        if self.style not in STYLES + ("any",):
            raise ValueError(f"style must be one of {STYLES + ('any',)}")


@dataclass
class ValidationReport:
    instances: int = 0
    agreements: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    counterexample: Optional[dict[str, Any]] = None

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    @property
    def ok(self) -> bool:
        return self.agreements == self.instances

    def lines(self) -> list[str]:
        out = [f"instances {self.instances}", f"agreements {self.agreements}"]
        out.extend(f"{k} {self.counts[k]}" for k in sorted(self.counts))
        if self.counterexample is not None:
            for k, v in self.counterexample.items():
                text = str(v).replace("\n", " | ")
                out.append(f"counterexample.{k} {text}")
        return out


def trial_seed(master: int, trial: int) -> int:
    return int(np.random.SeedSequence([master, trial]).generate_state(1)[0])


def check_instance(graph: Graph, bounds: Bounds, rng: np.random.Generator) -> dict[str, Any]:
    """Run every verdict and consistency check on one instance."""
    v: dict[str, Any] = {}
    witness = orientation_exists_brute(graph, bounds)
    v["orient_brute"] = witness is not None
    v["orient_eta"] = min_eta(graph, bounds)[0] >= 0
    result = find_parity_orientation(graph, bounds, certificate_limit=-1)
    v["orient_pipeline"] = result.feasible
    v["orient_witness_ok"] = (
        verify_orientation(graph, bounds, result.orientation).ok if result.feasible else True
    )
    v["orient_cert_ok"] = result.certificate is None or (
        result.certificate.value < 0
        and result.certificate.recheck(graph, bounds) == result.certificate.value
    )

    brute_factor = brute_force_parity_factor(graph, bounds)
    v["factor_brute"] = brute_factor is not None
    v["factor_delta"] = min_delta(graph, bounds)[0] >= 0
    factor = find_parity_factor(graph, bounds)
    v["factor_gadget"] = factor is not None
    v["factor_witness_ok"] = factor is None or verify_factor(graph, bounds, factor).ok

    if witness is not None:
        sm = subdivide(graph)
        image = orientation_to_factor(sm, witness)
        v["round_trip_ok"] = (
            factor_to_orientation(sm, image) == witness
            and verify_factor(sm.sub_graph, lift_bounds(sm, bounds), image).ok
        )

    status = rng.integers(0, 3, size=graph.n)
    s = frozenset(int(i) for i in np.flatnonzero(status == 1))
    t = frozenset(int(i) for i in np.flatnonzero(status == 2))
    v["identity_pair"] = (sorted(s), sorted(t))
    v["identity_ok"] = odd_count_identity_check(graph, bounds, s, t)
    return v


def verdicts_agree(v: dict[str, Any]) -> bool:
    return (
        v["orient_brute"] == v["orient_eta"] == v["orient_pipeline"]
        and v["factor_brute"] == v["factor_delta"] == v["factor_gadget"]
        and v["orient_witness_ok"]
        and v["orient_cert_ok"]
        and v["factor_witness_ok"]
        and v.get("round_trip_ok", True)
        and v["identity_ok"]
    )


def cross_validate(config: ValidationConfig) -> ValidationReport:
    """Check the orientation and factor characterizations against brute force.

    Trial ``i`` draws everything from ``SeedSequence([seed, i])``, so the
    report depends only on the configuration.
    """
    config.check()
    report = ValidationReport()
    for i in range(config.trials):
        seed = trial_seed(config.seed, i)
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, config.n_max + 1))
        density = float(rng.uniform(0.15, 0.95))
        style = config.style if config.style != "any" else STYLES[i % len(STYLES)]
        graph, bounds = random_instance(seed, n, density, style, max_edges=config.m_max)
        v = check_instance(graph, bounds, rng)

        report.instances += 1
        report.bump(f"style.{style}")
        report.bump("orientation_feasible", v["orient_brute"])
        report.bump("factor_feasible", v["factor_brute"])
        report.bump("multigraph", graph.is_multigraph())
        report.bump("isolated_vertices", bool(graph.isolated_vertices()))
        report.bump("orientation_agree", v["orient_brute"] == v["orient_eta"] == v["orient_pipeline"])
        report.bump("factor_agree", v["factor_brute"] == v["factor_delta"] == v["factor_gadget"])
        if "round_trip_ok" in v:
            report.bump("round_trip_checked")
            report.bump("round_trip_ok", v["round_trip_ok"])
        report.bump("identity_checked")
        report.bump("identity_ok", v["identity_ok"])
        if verdicts_agree(v):
            report.agreements += 1
        elif report.counterexample is None:
            report.counterexample = {
                "trial": i,
                "seed": seed,
                "style": style,
                "instance": serialize_graph(graph, bounds).strip(),
                **v,
            }
    return report
