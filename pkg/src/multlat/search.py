"""Lattice family generators and the counterexample search harness.

Family specs are compact strings:

  chain:K          the K-element chain
  boolean:K        the lattice of subsets of {1..K}          (K <= 6)
  divisor:N        the ideal lattice of Z_N
  random:CxS       C seeded random distributive lattices of size <= S (S <= 40)
  fig2 / fig3      the bundled fixtures

An optional trailing ":MULT" picks the multiplication (meet, trivial, ring,
table); the defaults are meet for chain/boolean/random, ring for divisor,
trivial for fig2 and the bundled table for fig3.

The search analyzes each generated instance and records every chi != omega
finding.  A reduced instance with chi != omega is impossible by the reduced
theory, so it aborts the run with SelfCheckError - it is the strongest
self-test available.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import SelfCheckError
from .fixtures import fixture
from .lattice import Lattice, build_lattice
from .multiplication import MultLattice, attach_multiplication
from .report import VERDICT_FAILS, analyze
from .rings import ideal_lattice_zn
from .solvers import (DEFAULT_SOLVER_BUDGET, ORACLE_CAP, brute_force_chromatic,
                      brute_force_clique)
from .zdgraph import mult_zero_divisor_graph

MAX_BOOLEAN_RANK = 6
MAX_RANDOM_SIZE = 40


def chain_lattice(k: int) -> Lattice:
    """The k-element chain c0 < c1 < ... (k >= 1)."""
    if k < 1:
        raise ValueError("chain needs at least one element")
    names = [f"c{i}" for i in range(k)]
    covers = [(f"c{i}", f"c{i + 1}") for i in range(k - 1)]
    return build_lattice(names, covers, "covers")


def boolean_lattice(k: int) -> Lattice:
    """The lattice of subsets of {1..k}, ordered by inclusion (0 <= k <= 6).

    Elements are named "{}", "{1}", "{1,2}", ... and ordered by subset
    bitmask, so the empty set is the bottom and the full set the top.
    """
    if not 0 <= k <= MAX_BOOLEAN_RANK:
        raise ValueError(f"boolean rank must be in 0..{MAX_BOOLEAN_RANK}")

    def name(mask: int) -> str:
        return "{" + ",".join(str(i + 1) for i in range(k) if mask >> i & 1) + "}"

    names = [name(m) for m in range(1 << k)]
    pairs = [(name(m1), name(m2)) for m1 in range(1 << k)
             for m2 in range(1 << k) if m1 & ~m2 == 0]
    return build_lattice(names, pairs, "leq")


def random_poset_down_set_lattice(seed: int, max_size: int) -> Lattice:
    """The down-set lattice of a seeded random poset; always distributive.

    Posets are sampled (3-6 points, random comparabilities) until the
    down-set family has at most ``max_size`` members; the same seed always
    yields the same lattice.
    """
    if not 2 <= max_size <= MAX_RANDOM_SIZE:
        raise ValueError(f"random lattice size must be in 2..{MAX_RANDOM_SIZE}")
    rng = random.Random(seed)
    for _ in range(1000):
        m = rng.randint(3, 6)
        below = [1 << i for i in range(m)]  # below[i]: bitmask of j <= i
        for i in range(m):
            for j in range(i + 1, m):
                if rng.random() < 0.4:
                    below[j] |= below[i]  # impose i < j transitively
        # transitive closure
        for _ in range(m):
            for j in range(m):
                acc = below[j]
                for i in range(m):
                    if acc >> i & 1:
                        acc |= below[i]
                below[j] = acc
        down_sets = {0}
        frontier = [0]
        while frontier:
            d = frontier.pop()
            for x in range(m):
                if not d >> x & 1 and (below[x] & ~d) == (1 << x):
                    nd = d | 1 << x
                    if nd not in down_sets:
                        down_sets.add(nd)
                        frontier.append(nd)
        if len(down_sets) > max_size:
            continue
        masks = sorted(down_sets, key=lambda s: (bin(s).count("1"), s))
        names = ["{" + ",".join(str(i) for i in range(m) if s >> i & 1) + "}"
                 for s in masks]
        pairs = [(names[i], names[j]) for i, s1 in enumerate(masks)
                 for j, s2 in enumerate(masks) if s1 & ~s2 == 0]
        return build_lattice(names, pairs, "leq")
    raise RuntimeError("random poset sampling failed to meet the size bound")


def _default_mult(family: str) -> str:
    return {"divisor": "ring", "fig2": "trivial", "fig3": "table"}.get(family, "meet")


def _with_mult(lat: Lattice, mult: str) -> MultLattice:
    if mult == "ring":
        raise ValueError("ring multiplication only applies to divisor lattices")
    if mult == "table":
        raise ValueError("table multiplication needs an explicit table")
    return attach_multiplication(lat, mult)


def generate(spec: str, mult: str | None = None, seed: int = 0
             ) -> list[tuple[str, MultLattice]]:
    """Expand one family spec into (instance_id, MultLattice) pairs.

    The optional third colon field of the spec overrides ``mult``.  Raises
    ValueError on malformed specs and propagates AxiomViolation when a
    requested multiplication is inadmissible on the generated lattice.
    """
    parts = spec.split(":")
    family = parts[0]
    args = parts[1:]
    known_mults = ("meet", "trivial", "ring", "table")
    if args and args[-1] in known_mults:
        mult = args[-1]
        args = args[:-1]

    if family in ("fig2", "fig3"):
        if args:
            raise ValueError(f"fixture spec takes no arguments: {spec!r}")
        kind = mult or _default_mult(family)
        return [(f"{family}+{kind}", fixture(family, kind))]

    if family == "chain":
        if len(args) != 1:
            raise ValueError(f"chain spec needs one size argument: {spec!r}")
        k = int(args[0])
        kind = mult or "meet"
        return [(f"chain:{k}+{kind}", _with_mult(chain_lattice(k), kind))]

    if family == "boolean":
        if len(args) != 1:
            raise ValueError(f"boolean spec needs one rank argument: {spec!r}")
        k = int(args[0])
        kind = mult or "meet"
        return [(f"boolean:{k}+{kind}", _with_mult(boolean_lattice(k), kind))]

    if family == "divisor":
        if len(args) != 1:
            raise ValueError(f"divisor spec needs one modulus argument: {spec!r}")
        n = int(args[0])
        kind = mult or "ring"
        if kind == "ring":
            return [(f"divisor:{n}+ring", ideal_lattice_zn(n).embedded)]
        return [(f"divisor:{n}+{kind}",
                 _with_mult(ideal_lattice_zn(n).lattice, kind))]

    if family == "random":
        if len(args) != 1 or "x" not in args[0]:
            raise ValueError(f"random spec must look like random:CxS: {spec!r}")
        count_s, size_s = args[0].split("x", 1)
        count, size = int(count_s), int(size_s)
        kind = mult or "meet"
        out = []
        for i in range(count):
            inst_seed = seed * 1_000_003 + i
            lat = random_poset_down_set_lattice(inst_seed, size)
            out.append((f"random:seed={inst_seed},max={size}+{kind}",
                        _with_mult(lat, kind)))
        return out

    raise ValueError(f"unknown family {family!r} in spec {spec!r}")


@dataclass
class SearchResult:
    """Outcome of a counterexample search run."""

    findings: list[dict] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    analyzed: int = 0


def search_counterexamples(families: list[str], budget: int = 1000,
                           seed: int = 0,
                           solver_budget: float | None = DEFAULT_SOLVER_BUDGET
                           ) -> SearchResult:
    """Analyze generated instances and collect every chi != omega finding.

    Instances are processed in config order up to ``budget`` many; per-
    instance solver timeouts are skipped and logged.  Findings on graphs of
    at most 12 vertices are re-verified against the brute-force oracles.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    instances: list[tuple[str, MultLattice]] = []
    for spec in families:
        instances.extend(generate(spec, seed=seed))
    result = SearchResult()
    for instance_id, ml in instances[:budget]:
        report = analyze(ml, instance_id=instance_id,
                         solver_budget=solver_budget)
        result.analyzed += 1
        if report.timed_out:
            result.skipped.append(instance_id)
            continue
        if report.verdict != VERDICT_FAILS:
            continue
        if report.reduced:  # unreachable: analyze() raises first
            raise SelfCheckError(f"{instance_id}: reduced finding escaped")
        verified = None
        if report.vertex_count <= ORACLE_CAP:
            graph = mult_zero_divisor_graph(ml)
            verified = (brute_force_chromatic(graph) == report.chi
                        and brute_force_clique(graph) == report.omega)
            if not verified:
                raise SelfCheckError(
                    f"{instance_id}: solvers disagree with the brute-force "
                    "oracle")
        result.findings.append({
            "instance": instance_id,
            "element_count": report.element_count,
            "vertex_count": report.vertex_count,
            "chi": report.chi,
            "omega": report.omega,
            "reduced": report.reduced,
            "modular": report.modular,
            "oracle_verified": verified,
        })
    return result
