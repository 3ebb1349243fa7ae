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
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List

from semiring_workbench.core.ideals.ideal_ops import annihilator_ideal, annihilator_set, enumerate_ideals, \
    ideal_generated
from semiring_workbench.core.ideals.spectrum import complement_is_mc_set, is_prime_ideal, radical_views
from semiring_workbench.core.structures.semiring import FiniteSemiring
from semiring_workbench.core.workbench_constants import DEFAULT_IDEAL_CAP, DEFAULT_ORACLE_SAMPLES
from semiring_workbench.util import bitset

logger = logging.getLogger(__name__)

MAX_ORACLE_IDEALS = 4096


@dataclass
class OracleReport:
    semiring_id: str
    checks: int = 0
    mismatches: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {"semiring": self.semiring_id, "checks": self.checks, "mismatches": list(self.mismatches)}


def oracle_cross_checks(S: FiniteSemiring, samples: int = DEFAULT_ORACLE_SAMPLES, seed: int = 0,
                        semiring_id: str = "", ideal_cap: int = DEFAULT_IDEAL_CAP) -> OracleReport:
    """
    Computes the same objects by independent routes and records every disagreement: the radical
    by element powers against both prime intersections, Ann(J) against the intersection of the
    generators' annihilators on seeded random generator sets, and primality against the MC-set
    property of the complement.
    """
    report = OracleReport(semiring_id)
    ideals = enumerate_ideals(S, ideal_cap)
    if len(ideals) <= MAX_ORACLE_IDEALS:
        for I in ideals:
            powers, over_v, over_min = radical_views(S, I, ideal_cap)
            report.checks += 1
            if not powers == over_v == over_min:
                report.mismatches.append({"oracle": "radical", "ideal": I.to_list(), "powers": powers.to_list(),
                                          "V": over_v.to_list(), "Min": over_min.to_list()})
    else:
        logger.warning(f"{semiring_id}: {len(ideals)} ideals, skipping the radical oracle")

    rng = random.Random(seed)
    for _ in range(samples):
        gens = rng.sample(list(S.elements), rng.randint(1, min(S.order_n, 4)))
        J = ideal_generated(S, gens)
        direct = annihilator_ideal(S, J.elements())
        by_generators = bitset.full_mask(S.order_n)
        for g in gens:
            by_generators &= annihilator_set(S, g)
        report.checks += 1
        if direct.members != by_generators:
            report.mismatches.append({"oracle": "annihilator", "generators": sorted(gens),
                                      "ann_ideal": direct.to_list(), "ann_generators": bitset.members(by_generators)})

    for I in ideals:
        report.checks += 1
        if is_prime_ideal(S, I) != complement_is_mc_set(S, I):
            report.mismatches.append({"oracle": "prime-duality", "ideal": I.to_list()})
    return report
