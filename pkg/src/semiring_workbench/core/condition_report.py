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
from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass(frozen=True)
class ConditionReport:
    """
    Truth values of the conditions of an equivalence statement evaluated on one instance.

    `equivalent` is True when all listed conditions agree; `witness` carries the elements or
    ideals that separate them otherwise, plus any detail the evaluation recorded.
    """
    conditions: Dict[str, bool]
    equivalent: bool
    witness: Optional[Dict[str, Any]] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "conditions": dict(self.conditions),
            "equivalent": self.equivalent,
            "witness": self.witness,
            "notes": dict(self.notes),
        }


def all_agree(conditions: Dict[str, bool]) -> bool:
    return len(set(conditions.values())) <= 1
