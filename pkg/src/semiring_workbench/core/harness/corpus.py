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
import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from semiring_workbench.core.constructions.enumerator import enumerate_semirings
from semiring_workbench.core.constructions.families import Family, GeneratorSpec, build_single
from semiring_workbench.core.harness.catalog import CATALOG, TheoremId
from semiring_workbench.core.harness.checks import VerificationContext
from semiring_workbench.core.harness.oracles import OracleReport, oracle_cross_checks
from semiring_workbench.core.harness.verifier import TheoremReport, TheoremResult, verify
from semiring_workbench.core.structures.order import OrderedView, default_view
from semiring_workbench.core.workbench_constants import DEFAULT_CONFIG, DEFAULT_ORACLE_SAMPLES, WorkbenchConfig
from semiring_workbench.util.report_templates import CORPUS_SUMMARY_TEMPLATE, render

logger = logging.getLogger(__name__)

MAX_PRODUCT_ORDER = 16


def _spec(family: Family, *parameters: int) -> GeneratorSpec:
    return GeneratorSpec(family, tuple(parameters))


_PRODUCT_FACTORS = (
    (_spec(Family.CHAIN, 2), 2),
    (_spec(Family.CHAIN, 3), 3),
    (_spec(Family.CHAIN, 4), 4),
    (_spec(Family.TRUNCATED_MIN_PLUS, 2), 3),
    (_spec(Family.IDEAL_SEMIRING_OF_ZM, 4), 3),
    (_spec(Family.IDEAL_SEMIRING_OF_ZM, 8), 4),
    (_spec(Family.RING_ZM, 2), 2),
    (_spec(Family.STACKED_DIAMOND), 5),
)


def _products(max_order: int) -> Tuple[GeneratorSpec, ...]:
    return tuple(
        GeneratorSpec(Family.PRODUCT, factors=(left, right))
        for (left, m), (right, k) in combinations_with_replacement(_PRODUCT_FACTORS, 2)
        if m * k <= max_order
    )


CORPUS_PRESETS: Dict[str, Tuple[GeneratorSpec, ...]] = {
    "default": (
        *(_spec(Family.EXHAUSTIVE, n) for n in (2, 3, 4)),
        *(_spec(Family.CHAIN, k) for k in range(2, 7)),
        *(_spec(Family.POWERSET, k) for k in range(1, 5)),
        *(_spec(Family.DIVISOR_LATTICE, m) for m in (4, 6, 8, 12, 30)),
        *(_spec(Family.IDEAL_SEMIRING_OF_ZM, m) for m in range(2, 17)),
        *(_spec(Family.TRUNCATED_MIN_PLUS, k) for k in range(1, 7)),
        *(_spec(Family.RING_ZM, m) for m in (2, 3, 4, 6)),
        _spec(Family.STACKED_DIAMOND),
        *_products(MAX_PRODUCT_ORDER),
    ),
    "smoke": (
        _spec(Family.EXHAUSTIVE, 2),
        _spec(Family.CHAIN, 3),
        _spec(Family.POWERSET, 2),
        _spec(Family.IDEAL_SEMIRING_OF_ZM, 8),
        _spec(Family.TRUNCATED_MIN_PLUS, 2),
        _spec(Family.STACKED_DIAMOND),
    ),
}


@dataclass(frozen=True)
class CorpusMember:
    name: str
    view: OrderedView


def expand_specs(specs: Sequence[GeneratorSpec], config: WorkbenchConfig = DEFAULT_CONFIG) -> List[CorpusMember]:
    """
    Builds every semiring the specs describe, each with its default view. Exhaustive specs expand
    into one member per isomorphism class.

    :raises CapacityExceeded: when an exhaustive order exceeds the configured cap
    """
    members = []
    for spec in specs:
        if spec.family is Family.EXHAUSTIVE:
            order = spec.parameters[0]
            for i, S in enumerate(enumerate_semirings(order, order_cap=config.order_cap)):
                members.append(CorpusMember(f"enum({order})#{i}", default_view(S)))
        else:
            members.append(CorpusMember(spec.name, default_view(build_single(spec))))
    return members


def _verify_member(member: CorpusMember, theorems: Tuple[TheoremId, ...],
                   config: WorkbenchConfig) -> List[TheoremReport]:
    context = VerificationContext(member.view, config)
    return [verify(member.view, t, member.name, config=config, context=context) for t in theorems]


class CorpusRunner:
    def __init__(self, specs: Sequence[GeneratorSpec], theorems: Optional[Sequence[TheoremId]] = None,
                 config: WorkbenchConfig = DEFAULT_CONFIG, show_progress: bool = True):
        """
        Runs catalog statements over a corpus of semirings.
        :param specs: generator specs describing the corpus
        :param theorems: catalog entries to check, the whole catalog when omitted
        :param config: caps and parallelism
        :param show_progress: draw tqdm progress bars on stderr
        """
        self.logger = logging.getLogger(__name__)
        self.specs = list(specs)
        self.theorems: Tuple[TheoremId, ...] = tuple(theorems) if theorems is not None else CATALOG
        self.config = config
        self.show_progress = show_progress
        self.members: List[CorpusMember] = []
        self.reports: List[TheoremReport] = []
        self.oracle_reports: List[OracleReport] = []

    def run(self) -> List[TheoremReport]:
        """Reports ordered by corpus member, then catalog position."""
        self.reports = []
        self.members = expand_specs(self.specs, self.config)
        self.logger.info(f"Checking {len(self.theorems)} statement(s) on {len(self.members)} semiring(s)")
        per_member: Dict[int, List[TheoremReport]] = {}
        if self.config.jobs > 1 and len(self.members) > 1:
            with ProcessPoolExecutor(max_workers=self.config.jobs) as executor:
                future_to_index = {
                    executor.submit(_verify_member, member, self.theorems, self.config): i
                    for i, member in enumerate(self.members)
                }
                for future in tqdm(as_completed(future_to_index), total=len(future_to_index),
                                   desc="Verifying corpus", disable=not self.show_progress):
                    per_member[future_to_index[future]] = future.result()
        else:
            progress = tqdm(self.members, desc="Verifying corpus", disable=not self.show_progress)
            for i, member in enumerate(progress):
                per_member[i] = _verify_member(member, self.theorems, self.config)
        for i in range(len(self.members)):
            self.reports.extend(per_member[i])
        return self.reports

    def run_oracles(self, samples: int = DEFAULT_ORACLE_SAMPLES, seed: int = 0) -> List[OracleReport]:
        if not self.members:
            self.members = expand_specs(self.specs, self.config)
        self.oracle_reports = [
            oracle_cross_checks(m.view.semiring, samples, seed, m.name, self.config.ideal_cap)
            for m in tqdm(self.members, desc="Oracle cross-checks", disable=not self.show_progress)
        ]
        return self.oracle_reports

    @property
    def failed(self) -> bool:
        return (any(r.result is TheoremResult.FAIL for r in self.reports)
                or any(not o.passed for o in self.oracle_reports))

    def summary(self) -> Dict:
        counts = Counter((str(r.theorem), r.result) for r in self.reports)
        rows = [
            {"theorem": str(t),
             "passed": counts[str(t), TheoremResult.PASS],
             "failed": counts[str(t), TheoremResult.FAIL],
             "skipped": counts[str(t), TheoremResult.SKIPPED]}
            for t in self.theorems
        ]
        totals = Counter(r.result for r in self.reports)
        return {
            "members": len(self.members),
            "total": len(self.reports),
            "rows": rows,
            "passed": totals[TheoremResult.PASS],
            "failed": totals[TheoremResult.FAIL],
            "skipped": totals[TheoremResult.SKIPPED],
            "failures": [r.to_dict() for r in self.reports if r.result is TheoremResult.FAIL],
            "oracles": [o.to_dict() for o in self.oracle_reports],
        }

    def render_text(self) -> str:
        return render(CORPUS_SUMMARY_TEMPLATE, **self.summary())

    def save(self, output_path: str):
        """
        Save theorem reports to a JSONL file, one report per line with sorted keys.

        Args:
            output_path (str): Path where to save the JSONL file
        """
        output_file_path = Path(output_path)
        output_file_path.parent.mkdir(parents=True, exist_ok=True)

        if not self.reports:
            self.logger.warning("No reports to save")
            return
        try:
            with output_file_path.open('w', encoding='utf-8') as f:
                for report in self.reports:
                    f.write(json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=True) + '\n')
            self.logger.info(f"Successfully saved {len(self.reports)} reports to {output_file_path}")
        except Exception as e:
            self.logger.error(f"Error saving reports to {output_file_path}: {str(e)}")
            raise
