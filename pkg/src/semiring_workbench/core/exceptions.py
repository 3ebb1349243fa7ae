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
from dataclasses import dataclass
from typing import List, Optional, Tuple


class WorkbenchError(Exception):
    pass


class BadShape(WorkbenchError):
    pass


class ZeroEqualsOne(WorkbenchError):
    pass


@dataclass(frozen=True)
class AxiomViolation:
    """One violated axiom family, with the first witness found and the number of violating tuples."""
    axiom: str
    witness: Tuple[int, ...]
    count: int = 1

    def to_dict(self):
        return {"axiom": self.axiom, "witness": list(self.witness), "count": self.count}


class AxiomViolationError(WorkbenchError):
    def __init__(self, violations: List[AxiomViolation]):
        self.violations = violations
        summary = ", ".join(f"{v.axiom} at {v.witness}" for v in violations)
        super().__init__(f"Semiring axioms violated: {summary}")


class NotAPartialOrder(WorkbenchError):
    def __init__(self, law: str, witness: Tuple[int, ...]):
        self.law = law
        self.witness = witness
        super().__init__(f"Relation is not {law}: witness {witness}")


class OrderIncompatible(WorkbenchError):
    def __init__(self, condition: int, witness: Tuple[int, int, int]):
        self.condition = condition
        self.witness = witness
        super().__init__(f"Ordered-semiring condition ({condition}) fails at (s, t, u) = {witness}")


class NotApplicable(WorkbenchError):
    pass


class NotPositive(WorkbenchError):
    pass


class HypothesisNotMet(WorkbenchError):
    pass


class NotAnnihilating(WorkbenchError):
    def __init__(self, s: int):
        self.witness = s
        super().__init__(f"Map is not a pc-function: s * star(s) != 0 for s = {s}")


class NotPrime(WorkbenchError):
    pass


class NotContaining(WorkbenchError):
    pass


class EmptySpectrum(WorkbenchError):
    pass


class CapacityExceeded(WorkbenchError):
    pass


class ParseError(WorkbenchError):
    def __init__(self, message: str, source: Optional[str] = None):
        self.source = source
        super().__init__(f"{source}: {message}" if source else message)


class RangeError(WorkbenchError, ValueError):
    pass
