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
from typing import Dict, List, Optional, Tuple

from semiring_workbench.core.constructions.families import ideal_index_of_divisor, ideal_semiring_of_Zm
from semiring_workbench.core.exceptions import CapacityExceeded, RangeError
from semiring_workbench.core.ideals.ideal_ops import (
    IdealSet,
    enumerate_ideals,
    ideal_generated,
    ideal_product,
    ideal_sum,
    zero_ideal,
)
from semiring_workbench.core.pc.analysis import pc_analysis
from semiring_workbench.core.structures.order import (
    OrderedView,
    OrderRelation,
    check_ordered_axioms,
    default_view,
    make_order,
)
from semiring_workbench.core.structures.semiring import (
    FiniteSemiring,
    bounded_distributive_lattice_witness,
    validate_semiring,
)
from semiring_workbench.core.workbench_constants import DEFAULT_IDEAL_CAP, MAX_ORDER

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealSemiring:
    """
    Id(S): element i is `ideals[i]`, ordered by inclusion. `failures` lists the postconditions
    (positivity, pseudocomplementedness, the annihilator form of I*) that did not hold.
    """
    semiring: FiniteSemiring
    order: OrderRelation
    ideals: Tuple[IdealSet, ...]
    failures: List[str] = field(default_factory=list)

    @property
    def view(self) -> OrderedView:
        return check_ordered_axioms(self.semiring, self.order)


def _ideal_label(S: FiniteSemiring, I: IdealSet) -> str:
    return "{" + ",".join(S.label(e) for e in I.elements()) + "}"


def build_ideal_semiring(S: FiniteSemiring, ideal_cap: int = DEFAULT_IDEAL_CAP) -> IdealSemiring:
    """
    Builds (Id(S), +, ., subset) and checks that it is a positive pseudocomplemented semiring in
    which the pseudocomplement of I is the ideal generated by every J with IJ = (0).

    :raises CapacityExceeded: when S has more than 255 ideals
    """
    ideals = enumerate_ideals(S, ideal_cap)
    k = len(ideals)
    if k > MAX_ORDER:
        raise CapacityExceeded(f"{k} ideals exceed the maximum order {MAX_ORDER}")
    index: Dict[int, int] = {I.members: i for i, I in enumerate(ideals)}
    add = [[index[ideal_sum(S, I, J).members] for J in ideals] for I in ideals]
    mul = [[index[ideal_product(S, I, J).members] for J in ideals] for I in ideals]
    zero = index[zero_ideal(S).members]
    one = index[ideal_generated(S, [S.one]).members]
    labels = [_ideal_label(S, I) for I in ideals]
    id_s = validate_semiring(add, mul, zero, one, k, labels)
    order = make_order([[I.issubset(J) for J in ideals] for I in ideals])

    failures = []
    view = check_ordered_axioms(id_s, order)
    if not view.positive:
        failures.append("not positive")
    else:
        analysis = pc_analysis(view)
        if not analysis.pseudocomplemented:
            failures.append("not pseudocomplemented")
        for i, I in enumerate(ideals):
            killers = [e for j, J in enumerate(ideals) if mul[i][j] == zero for e in J.elements()]
            expected = index[ideal_generated(S, killers).members]
            if analysis.pstar[i] != expected:
                failures.append(f"pseudocomplement of {labels[i]} is not the annihilator ideal")
                break
    if failures:
        logger.warning(f"Ideal semiring postconditions failed: {failures}")
    return IdealSemiring(id_s, order, tuple(ideals), failures)


@dataclass(frozen=True)
class IdealExampleReport:
    """a = (n), b = c = (n^2) in Id(Z_{n^3}): a + bc against (a + b)(a + c)."""
    n: int
    lhs: str
    rhs: str
    unequal: bool
    positive: bool
    pseudocomplemented: bool
    distributive_lattice_law: Optional[Tuple[str, Tuple[int, ...]]]

    @property
    def holds(self) -> bool:
        return (self.unequal and self.positive and self.pseudocomplemented
                and self.distributive_lattice_law is not None)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "a+bc": self.lhs,
            "(a+b)(a+c)": self.rhs,
            "unequal": self.unequal,
            "positive": self.positive,
            "pseudocomplemented": self.pseudocomplemented,
            "failed_lattice_law": self.distributive_lattice_law,
            "holds": self.holds,
        }


def ideal_semiring_example_check(n: int) -> IdealExampleReport:
    """
    Id(Z_{n^3}) is positive and pseudocomplemented yet not a distributive lattice.

    :raises RangeError: unless n >= 2 and n^3 <= 255
    """
    m = n ** 3
    if n < 2 or m > MAX_ORDER:
        raise RangeError(f"n must satisfy n >= 2 and n^3 <= {MAX_ORDER}, got {n}")
    S = ideal_semiring_of_Zm(m)
    a = ideal_index_of_divisor(m, n)
    b = c = ideal_index_of_divisor(m, n * n)
    lhs = S.add[a][S.mul[b][c]]
    rhs = S.mul[S.add[a][b]][S.add[a][c]]
    view = default_view(S)
    pseudocomplemented = view.positive and pc_analysis(view).pseudocomplemented
    return IdealExampleReport(
        n=n,
        lhs=S.label(lhs),
        rhs=S.label(rhs),
        unequal=lhs != rhs,
        positive=view.positive,
        pseudocomplemented=pseudocomplemented,
        distributive_lattice_law=bounded_distributive_lattice_witness(S),
    )
