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
"""
Minimal-prime criteria: the three-way characterization of Min(I), its nilpotent-free corollaries,
and the four-way characterization of minimal primes in pseudocomplemented semirings.
"""
import logging
from typing import Iterable, Optional

from semiring_workbench.core.condition_report import ConditionReport, all_agree
from semiring_workbench.core.exceptions import HypothesisNotMet, NotContaining, NotPrime
from semiring_workbench.core.ideals.ideal_ops import IdealSet, annihilator_ideal, ideal_generated, zero_ideal
from semiring_workbench.core.ideals.spectrum import (
    is_prime_ideal,
    mc_closure,
    minimal_primes,
    nilpotent_analysis,
)
from semiring_workbench.core.pc.analysis import PcAnalysis, pc_analysis
from semiring_workbench.core.structures.order import OrderedView
from semiring_workbench.core.structures.semiring import FiniteSemiring, is_mult_idempotent
from semiring_workbench.core.workbench_constants import DEFAULT_IDEAL_CAP
from semiring_workbench.util import bitset

logger = logging.getLogger(__name__)

NONNEGATIVE = "nonnegative"
POSITIVE = "positive"


def _require_prime(S: FiniteSemiring, P: IdealSet):
    if not is_prime_ideal(S, P):
        raise NotPrime(f"{P.to_list()} is not a prime ideal")


def _require_nilpotent_free(S: FiniteSemiring):
    nil, nilpotent_free = nilpotent_analysis(S)
    if not nilpotent_free:
        raise HypothesisNotMet(f"the semiring has nonzero nilpotents {nil.to_list()}")


def _power_witness(S: FiniteSemiring, I: IdealSet, P: IdealSet, x: int, start: int) -> Optional[dict]:
    """Some y outside P and i in start..n with y x^i in I."""
    outside = [y for y in S.elements if y not in P]
    for i in range(start, S.order_n + 1):
        xi = S.power(x, i)
        for y in outside:
            if S.mul[y][xi] in I:
                return {"x": x, "y": y, "i": i}
    return None


def complement_is_maximal_mc_set(S: FiniteSemiring, I: IdealSet, P: IdealSet) -> Optional[int]:
    """
    Whether S - P is maximal among MC-sets missing I. Returns None when it is, else an element
    w in P whose adjunction still misses I.
    """
    W = bitset.full_mask(S.order_n) & ~P.members
    for w in P.elements():
        if not mc_closure(S, W | (1 << w)) & I.members:
            return w
    return None


def huckaba_criteria(S: FiniteSemiring, I: IdealSet, P: IdealSet,
                     ideal_cap: int = DEFAULT_IDEAL_CAP) -> ConditionReport:
    """
    (1) P in Min(I); (2) S - P is an MC-set maximal among those missing I; (3) every x in P has
    y outside P and an exponent i with y x^i in I. Condition (3) is evaluated with i ranging over
    nonnegative and over positive integers; the report records both.

    :raises NotPrime: when P is not prime
    :raises NotContaining: when I is not contained in P
    """
    _require_prime(S, P)
    if not I.issubset(P):
        raise NotContaining(f"{I.to_list()} is not contained in {P.to_list()}")
    cond1 = P in minimal_primes(S, I, ideal_cap)
    extension = complement_is_maximal_mc_set(S, I, P)
    witness = {}
    if extension is not None:
        witness["(2)"] = {"extends_by": extension}
    readings = {}
    for reading, start in ((NONNEGATIVE, 0), (POSITIVE, 1)):
        failing = [x for x in P.elements() if _power_witness(S, I, P, x, start) is None]
        readings[reading] = not failing
        if failing:
            witness[f"(3) {reading}"] = {"x": failing[0]}
    conditions = {"(1)": cond1, "(2)": extension is None, "(3)": readings[NONNEGATIVE]}
    notes = {"(3) positive": readings[POSITIVE],
             "exponent_readings_diverge": readings[NONNEGATIVE] != readings[POSITIVE]}
    equivalent = all_agree(conditions) and not notes["exponent_readings_diverge"]
    return ConditionReport(conditions, equivalent, witness or None, notes)


def huckaba2_check(S: FiniteSemiring, P: IdealSet, ideal_cap: int = DEFAULT_IDEAL_CAP) -> ConditionReport:
    """
    Nilpotent-free S: P in Min(S) iff every x in P has some y outside P with xy = 0.

    :raises HypothesisNotMet: when S has nonzero nilpotents
    :raises NotPrime: when P is not prime
    """
    _require_nilpotent_free(S)
    _require_prime(S, P)
    minimal = P in minimal_primes(S, None, ideal_cap)
    failing = [x for x in P.elements()
               if not any(S.mul[x][y] == S.zero for y in S.elements if y not in P)]
    conditions = {"minimal": minimal, "annihilated_outside": not failing}
    witness = {"x": failing[0]} if failing else None
    return ConditionReport(conditions, all_agree(conditions), witness)


def huckaba3_check(S: FiniteSemiring, gens: Iterable[int], ideal_cap: int = DEFAULT_IDEAL_CAP) -> ConditionReport:
    """
    Nilpotent-free S, J the ideal generated by gens: J lies in a minimal prime iff Ann(J) != (0).

    :raises HypothesisNotMet: when S has nonzero nilpotents
    """
    _require_nilpotent_free(S)
    J = ideal_generated(S, gens)
    in_minimal = [P for P in minimal_primes(S, None, ideal_cap) if J.issubset(P)]
    ann = annihilator_ideal(S, J.elements())
    conditions = {"in_minimal_prime": bool(in_minimal), "nonzero_annihilator": ann != zero_ideal(S)}
    notes = {"ideal": J.to_list(), "annihilator": ann.to_list()}
    if in_minimal:
        notes["minimal_prime"] = in_minimal[0].to_list()
    return ConditionReport(conditions, all_agree(conditions), None, notes)


def minimalpbdl_report(V: OrderedView, P: IdealSet, analysis: Optional[PcAnalysis] = None,
                       ideal_cap: int = DEFAULT_IDEAL_CAP) -> ConditionReport:
    """
    Multiplicatively idempotent pseudocomplemented S with 1 a Stone element: (1) s in P => s* not
    in P; (2) s in P => s** in P; (3) P misses the dense elements; (4) P is a minimal prime.

    :raises HypothesisNotMet: when a hypothesis fails
    :raises NotPrime: when P is not prime
    """
    S = V.semiring
    analysis = analysis or pc_analysis(V)
    if not is_mult_idempotent(S):
        raise HypothesisNotMet("the semiring is not multiplicatively idempotent")
    if not analysis.pseudocomplemented:
        raise HypothesisNotMet("the semiring is not pseudocomplemented")
    if not bitset.contains(analysis.stone, S.one):
        raise HypothesisNotMet("1 is not a Stone element")
    _require_prime(S, P)
    star = analysis.pstar
    checks = {
        "(1)": lambda s: star[s] not in P,
        "(2)": lambda s: star[star[s]] in P,
        "(3)": lambda s: not bitset.contains(analysis.dense, s),
    }
    conditions = {}
    witness = {}
    for key, holds in checks.items():
        failing = [s for s in P.elements() if not holds(s)]
        conditions[key] = not failing
        if failing:
            witness[key] = failing[0]
    conditions["(4)"] = P in minimal_primes(S, None, ideal_cap)
    return ConditionReport(conditions, all_agree(conditions), witness or None)
