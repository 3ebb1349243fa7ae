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
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from semiring_workbench.core.harness.catalog import ORDER_DEPENDENT_FAMILIES, TheoremId
from semiring_workbench.core.harness.checks import CHECKS, CheckOutcome, VerificationContext
from semiring_workbench.core.pc.analysis import PcAnalysis
from semiring_workbench.core.structures.order import OrderedView
from semiring_workbench.core.workbench_constants import DEFAULT_CONFIG, WorkbenchConfig

logger = logging.getLogger(__name__)


class TheoremResult(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class TheoremReport:
    theorem: TheoremId
    semiring_id: str
    hypotheses_met: bool
    instances_checked: int
    result: TheoremResult
    witness: Optional[Dict[str, Any]] = None
    note: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "semiring": self.semiring_id,
            "theorem": self.theorem.family,
            "clause": self.theorem.clause,
            "hypotheses_met": self.hypotheses_met,
            "instances": self.instances_checked,
            "result": self.result.value,
            "witness": self.witness,
            "note": self.note,
        }


def _report(theorem: TheoremId, semiring_id: str, outcome: CheckOutcome) -> TheoremReport:
    if not outcome.hypotheses_met:
        result = TheoremResult.SKIPPED
    elif outcome.witness is not None:
        result = TheoremResult.FAIL
    else:
        result = TheoremResult.PASS
    return TheoremReport(theorem, semiring_id, outcome.hypotheses_met, outcome.instances,
                         result, outcome.witness, outcome.note)


def verify(V: OrderedView, theorem: TheoremId, semiring_id: str = "",
           analysis: Optional[PcAnalysis] = None, config: WorkbenchConfig = DEFAULT_CONFIG,
           context: Optional[VerificationContext] = None) -> TheoremReport:
    """
    Evaluates one catalog statement on V. Statements about pseudocomplements are skipped on
    non-positive views; `analysis` replaces the computed pseudocomplement data when given.
    """
    context = context or VerificationContext(V, config, analysis)
    if theorem.family in ORDER_DEPENDENT_FAMILIES and context.analysis is None:
        return _report(theorem, semiring_id, CheckOutcome(False, note="view is not positive"))
    started = time.perf_counter()
    outcome = CHECKS[theorem](context)
    report = _report(theorem, semiring_id, outcome)
    logger.debug(f"{semiring_id} {theorem}: {report.result.value} over {report.instances_checked} instances "
                 f"in {time.perf_counter() - started:.4f}s")
    if report.result is TheoremResult.FAIL:
        logger.debug(f"{semiring_id} {theorem} witness: {report.witness}")
    return report
