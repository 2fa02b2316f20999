"""Prime semi-ideals, prime ideals, and the theorem/lemma checking suite.

Semi-ideal enumeration is deliberately exhaustive over down-sets (cap
guarded): these objects are defined by quantified conditions and desk-scale
instances permit brute force, so this layer doubles as the oracle for the
counting theorems.

The lemma suite re-checks, instance by instance, the statements that the
reduced theory guarantees.  A failing check on a reduced lattice is an
implementation bug, never an acceptable outcome; the suite therefore reports
failures with concrete witnesses instead of raising.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceeded
from .lattice import (DOWN_SET_CAP, ElementSubset, Lattice, enumerate_down_sets,
                      zero_distributivity_witness)
from .multiplication import (MultLattice, annihilator_map, is_prime_element,
                             is_reduced, maximal_annihilator_elements,
                             minimal_prime_elements)


def prime_semi_ideals(lat: Lattice, cap: int = DOWN_SET_CAP) -> list[ElementSubset]:
    """All prime semi-ideals (non-empty proper prime down-sets), by bitmask."""
    return [d for d in enumerate_down_sets(lat, cap) if d.is_prime]


def minimal_prime_semi_ideals(lat: Lattice, cap: int = DOWN_SET_CAP
                              ) -> list[ElementSubset]:
    """Inclusion-minimal prime semi-ideals, sorted by member bitmask."""
    primes = prime_semi_ideals(lat, cap)
    out = []
    for d in primes:
        if not any(o.mask != d.mask and o.mask & ~d.mask == 0 for o in primes):
            out.append(ElementSubset(lat, d.mask, is_minimal=True))
    return out


def minimal_prime_ideals(lat: Lattice, cap: int = DOWN_SET_CAP
                         ) -> list[ElementSubset]:
    """Inclusion-minimal prime ideals, sorted by member bitmask."""
    primes = [d for d in prime_semi_ideals(lat, cap) if d.is_ideal]
    out = []
    for d in primes:
        if not any(o.mask != d.mask and o.mask & ~d.mask == 0 for o in primes):
            out.append(ElementSubset(lat, d.mask, is_minimal=True))
    return out


@dataclass
class PrimeStructure:
    """Everything the counting theorems talk about, for one instance.

    The semi-ideal and ideal lists are None when the down-set family
    exceeded the enumeration cap (element-level analysis still applies).
    """

    minimal_prime_semi_ideals: list[ElementSubset] | None
    minimal_prime_ideals: list[ElementSubset] | None
    minimal_prime_elements: list[int]
    maximal_annihilators: list[int]
    cap_exceeded: bool = False


def prime_structure(ml: MultLattice, cap: int = DOWN_SET_CAP) -> PrimeStructure:
    """Compute the full prime structure of a multiplicative lattice.

    Down-sets are enumerated once and reused for both the semi-ideal and the
    ideal lists.
    """
    lat = ml.lattice
    try:
        primes = prime_semi_ideals(lat, cap)
        semi = [ElementSubset(lat, d.mask, is_minimal=True) for d in primes
                if not any(o.mask != d.mask and o.mask & ~d.mask == 0 for o in primes)]
        ideals_all = [d for d in primes if d.is_ideal]
        ideals = [ElementSubset(lat, d.mask, is_minimal=True) for d in ideals_all
                  if not any(o.mask != d.mask and o.mask & ~d.mask == 0
                             for o in ideals_all)]
        cap_hit = False
    except CapExceeded:
        semi = None
        ideals = None
        cap_hit = True
    return PrimeStructure(semi, ideals, minimal_prime_elements(ml),
                          maximal_annihilator_elements(ml), cap_hit)


# ---------------------------------------------------------------------------
# Lemma suite


@dataclass
class LemmaCheck:
    """Outcome of one checked statement: pass, fail (with witness), or skip."""

    check_id: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""
    witness: tuple[str, ...] | None = None

    def to_dict(self) -> dict:
        out: dict = {"id": self.check_id, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


@dataclass
class LemmaReport:
    """Ordered collection of lemma checks for one instance."""

    checks: list[LemmaCheck] = field(default_factory=list)

    def add(self, check_id: str, status: str, detail: str = "",
            witness: tuple[str, ...] | None = None) -> None:
        self.checks.append(LemmaCheck(check_id, status, detail, witness))

    @property
    def failed(self) -> list[LemmaCheck]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def all_passed(self) -> bool:
        return not self.failed

    def summary(self) -> dict[str, str]:
        return {c.check_id: c.status for c in self.checks}

    def to_dict(self) -> dict:
        return {"checks": [c.to_dict() for c in self.checks]}


def check_lemma_suite(ml: MultLattice, cap: int = DOWN_SET_CAP,
                      structure: PrimeStructure | None = None) -> LemmaReport:
    """Run every instance-checkable statement of the reduced theory.

    Checks whose hypothesis (reducedness, presence of a nonzero zero divisor)
    is unmet are reported as skipped or vacuously passing rather than
    evaluated out of context.
    """
    lat = ml.lattice
    names = lat.names
    reduced = is_reduced(ml)
    if structure is None:
        structure = prime_structure(ml, cap)
    report = LemmaReport()

    # Reduced lattices are 0-distributive.
    zd_witness = zero_distributivity_witness(lat)
    if reduced:
        if zd_witness is None:
            report.add("reduced_implies_zero_distributive", "pass")
        else:
            report.add("reduced_implies_zero_distributive", "fail",
                       "reduced lattice is not 0-distributive",
                       tuple(names[w] for w in zd_witness))
    else:
        report.add("reduced_implies_zero_distributive", "skip",
                   "hypothesis unmet (not reduced); base lattice is "
                   f"0-distributive: {zd_witness is None}")

    # In a reduced lattice every minimal prime semi-ideal is an ideal, and the
    # minimal prime semi-ideal and minimal prime ideal families coincide.
    if not reduced:
        report.add("minimal_prime_semi_ideals_are_ideals", "skip",
                   "hypothesis unmet (not reduced)")
    elif structure.cap_exceeded:
        report.add("minimal_prime_semi_ideals_are_ideals", "skip",
                   "down-set enumeration exceeded its cap")
    else:
        semi = structure.minimal_prime_semi_ideals or []
        ideals = structure.minimal_prime_ideals or []
        bad = [d for d in semi if not d.is_ideal]
        if bad:
            report.add("minimal_prime_semi_ideals_are_ideals", "fail",
                       "a minimal prime semi-ideal is not join-closed",
                       bad[0].names)
        elif {d.mask for d in semi} != {d.mask for d in ideals}:
            report.add("minimal_prime_semi_ideals_are_ideals", "fail",
                       "semi-ideal and ideal families differ")
        else:
            report.add("minimal_prime_semi_ideals_are_ideals", "pass")

    stars = annihilator_map(ml)
    has_zero_divisor = any(
        ml.product[a][b] == lat.bottom
        for a in range(ml.n) if a != lat.bottom
        for b in range(ml.n) if b != lat.bottom)

    # Maximal annihilator elements are prime.
    if not reduced:
        report.add("maximal_annihilators_are_prime", "skip",
                   "hypothesis unmet (not reduced)")
    else:
        bad_m = [m for m in structure.maximal_annihilators
                 if not is_prime_element(ml, m)]
        if bad_m:
            report.add("maximal_annihilators_are_prime", "fail",
                       "a maximal annihilator element is not prime",
                       (names[bad_m[0]],))
        else:
            report.add("maximal_annihilators_are_prime", "pass",
                       f"{len(structure.maximal_annihilators)} maximal annihilator(s)")

    # Distinct prime annihilators multiply to zero.
    if not reduced:
        report.add("distinct_prime_annihilators_multiply_to_zero", "skip",
                   "hypothesis unmet (not reduced)")
    else:
        violation = None
        for x in range(ml.n):
            if not is_prime_element(ml, stars[x]):
                continue
            for y in range(x + 1, ml.n):
                if (stars[y] != stars[x] and is_prime_element(ml, stars[y])
                        and ml.product[x][y] != lat.bottom):
                    violation = (x, y)
                    break
            if violation:
                break
        if violation:
            report.add("distinct_prime_annihilators_multiply_to_zero", "fail",
                       "elements with distinct prime annihilators have a "
                       "nonzero product",
                       tuple(names[w] for w in violation))
        else:
            report.add("distinct_prime_annihilators_multiply_to_zero", "pass")

    # Ascending chains of annihilators stabilize: immediate in a finite
    # lattice, reported without computation.
    report.add("annihilator_chains_stabilize", "pass", "trivial (finite)")

    # The set of maximal annihilators is finite and its witnesses form a
    # clique in the zero-divisor graph.
    if not reduced:
        report.add("finitely_many_maximal_annihilators", "skip",
                   "hypothesis unmet (not reduced)")
    else:
        witnesses = []
        for m in structure.maximal_annihilators:
            for a in range(ml.n):
                if a != lat.bottom and stars[a] == m:
                    witnesses.append(a)
                    break
        pairwise_zero = all(
            ml.product[a][b] == lat.bottom
            for i, a in enumerate(witnesses) for b in witnesses[i + 1:])
        if pairwise_zero:
            report.add("finitely_many_maximal_annihilators", "pass",
                       f"count = {len(structure.maximal_annihilators)}")
        else:
            report.add("finitely_many_maximal_annihilators", "fail",
                       "witnesses of maximal annihilators are not a clique",
                       tuple(names[w] for w in witnesses))

    # With a nonzero zero divisor, the maximal annihilators are minimal prime
    # elements and meet to 0.
    if not reduced:
        report.add("zero_is_meet_of_minimal_primes", "skip",
                   "hypothesis unmet (not reduced)")
        report.add("minimal_primes_are_annihilators", "skip",
                   "hypothesis unmet (not reduced)")
    elif not has_zero_divisor:
        report.add("zero_is_meet_of_minimal_primes", "pass",
                   "vacuous (no nonzero zero divisors)")
        report.add("minimal_primes_are_annihilators", "pass",
                   "vacuous (no nonzero zero divisors)")
    else:
        maxann = structure.maximal_annihilators
        mpe = set(structure.minimal_prime_elements)
        meet_ok = lat.meet_all(maxann) == lat.bottom if maxann else False
        all_minimal = set(maxann) <= mpe
        if meet_ok and all_minimal:
            report.add("zero_is_meet_of_minimal_primes", "pass")
        else:
            report.add("zero_is_meet_of_minimal_primes", "fail",
                       "maximal annihilators do not meet to 0 as minimal primes",
                       tuple(names[m] for m in maxann))
        star_values = set(stars)
        missing = [p for p in structure.minimal_prime_elements
                   if p not in star_values]
        if missing:
            report.add("minimal_primes_are_annihilators", "fail",
                       "a minimal prime element is not an annihilator",
                       (names[missing[0]],))
        else:
            report.add("minimal_primes_are_annihilators", "pass")

    return report
