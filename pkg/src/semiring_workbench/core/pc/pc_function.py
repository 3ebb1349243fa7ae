# Copyright 2025 Semiring Workbench Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import logging
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from semiring_workbench.core.condition_report import ConditionReport, all_agree
from semiring_workbench.core.exceptions import BadShape, NotAnnihilating, NotPrime
from semiring_workbench.core.ideals.ideal_ops import IdealSet, annihilator_set
from semiring_workbench.core.ideals.spectrum import is_prime_ideal, minimal_primes
from semiring_workbench.core.structures.semiring import FiniteSemiring
from semiring_workbench.core.workbench_constants import DEFAULT_IDEAL_CAP, DEFAULT_PC_FUNCTION_CAP
from semiring_workbench.util import bitset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PcFunction:
    """
    A map s -> s* with s s* = 0 for every s.

    `zero_axiom`: 0* = 1.
    `sum_axiom`: (s + s*)* = 0 for every s.
    """
    star: Tuple[int, ...]
    zero_axiom: bool
    sum_axiom: bool
    name: str = "supplied"

    @property
    def axioms_hold(self) -> bool:
        return self.zero_axiom and self.sum_axiom


def validate_pc_function(S: FiniteSemiring, star: Sequence[int], name: str = "supplied") -> PcFunction:
    """
    :raises NotAnnihilating: carrying the first s with s s* != 0
    """
    star = tuple(int(x) for x in star)
    if len(star) != S.order_n:
        raise BadShape(f"a pc-function on a semiring of order {S.order_n} needs {S.order_n} values, "
                       f"got {len(star)}")
    if any(not 0 <= x < S.order_n for x in star):
        raise BadShape("pc-function values must be carrier indices")
    for s in S.elements:
        if S.mul[s][star[s]] != S.zero:
            raise NotAnnihilating(s)
    zero_axiom = star[S.zero] == S.one
    sum_axiom = all(star[S.add[s][star[s]]] == S.zero for s in S.elements)
    return PcFunction(star, zero_axiom, sum_axiom, name)


def _representatives(S: FiniteSemiring, pstar: Optional[Sequence[Optional[int]]]) -> List[PcFunction]:
    anns = [bitset.members(annihilator_set(S, s)) for s in S.elements]
    family = {
        "zero-map": tuple(S.zero for _ in S.elements),
        "least-annihilator": tuple(a[0] for a in anns),
        "greatest-annihilator": tuple(a[-1] for a in anns),
    }
    if pstar is not None and all(p is not None for p in pstar):
        family["pseudocomplement"] = tuple(pstar)
    found: Dict[Tuple[int, ...], PcFunction] = {}
    for name, star in family.items():
        if star not in found:
            found[star] = validate_pc_function(S, star, name)
    return list(found.values())


def enumerate_pc_functions(S: FiniteSemiring, cap: int = DEFAULT_PC_FUNCTION_CAP,
                           pstar: Optional[Sequence[Optional[int]]] = None) -> Tuple[List[PcFunction], bool]:
    """
    Every pc-function on S when there are at most `cap` of them, else a fixed representative
    family (the zero map, least and greatest annihilator choices, and the pseudocomplement map
    when `pstar` is total).

    :return: the functions and whether the list is exhaustive
    """
    anns = [bitset.members(annihilator_set(S, s)) for s in S.elements]
    total = prod(len(a) for a in anns)
    if total > cap:
        logger.info(f"{total} pc-functions exceed the cap of {cap}; checking a representative family")
        return _representatives(S, pstar), False
    return [validate_pc_function(S, star, f"pc#{i}") for i, star in enumerate(product(*anns))], True


@dataclass(frozen=True)
class PcPrimeReport:
    """Conditions (1) s in P => s* not in P, (2) s in P => s** in P, (3) s in P => s* != 0."""
    report: ConditionReport
    minimal: bool
    axioms_hold: bool
    violations: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            **self.report.to_dict(),
            "minimal": self.minimal,
            "axioms_hold": self.axioms_hold,
            "violations": list(self.violations),
        }


def pc_prime_report(S: FiniteSemiring, pc: PcFunction, P: IdealSet, ideal_cap: int = DEFAULT_IDEAL_CAP,
                    min_primes: Optional[List[IdealSet]] = None) -> PcPrimeReport:
    """
    Evaluates the three pc-function conditions on a prime P and checks the claims around them:
    (1) implies (2), (1) implies P is minimal, and all three agree when the pc-function axioms hold.

    :raises NotPrime: when P is not a prime ideal
    """
    if not is_prime_ideal(S, P):
        raise NotPrime("the ideal is not prime")
    star = pc.star
    checks = {
        "(1)": lambda s: star[s] not in P,
        "(2)": lambda s: star[star[s]] in P,
        "(3)": lambda s: star[s] != S.zero,
    }
    conditions = {}
    witness = {}
    for key, holds in checks.items():
        failing = [s for s in P.elements() if not holds(s)]
        conditions[key] = not failing
        if failing:
            witness[key] = failing[0]
    if min_primes is None:
        min_primes = minimal_primes(S, None, ideal_cap)
    minimal = P in min_primes
    violations = []
    if conditions["(1)"] and not conditions["(2)"]:
        violations.append("(1) holds but (2) fails")
    if conditions["(1)"] and not minimal:
        violations.append("(1) holds but P is not a minimal prime")
    equivalent = all_agree(conditions)
    if pc.axioms_hold and not equivalent:
        violations.append("pc-function axioms hold but (1), (2), (3) disagree")
    report = ConditionReport(conditions, equivalent, witness or None, {"prime": P.to_list()})
    return PcPrimeReport(report, minimal, pc.axioms_hold, violations)
