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
from dataclasses import dataclass
from itertools import product
from typing import Dict, Optional, Tuple

from semiring_workbench.core.exceptions import HypothesisNotMet
from semiring_workbench.core.pc.analysis import PcAnalysis, pc_analysis
from semiring_workbench.core.structures.order import OrderedView
from semiring_workbench.util import bitset

logger = logging.getLogger(__name__)

Witness = Tuple[str, Tuple[int, ...]]


@dataclass(frozen=True)
class SkeletonLattice:
    """
    Skel(S) with join s v t = (s* t*)* and meet s ^ t = s t, bottom zero, top one.

    `violation` is None when the bounded complemented lattice laws hold, else the failing law and
    the elements (carrier indices) that break it.
    """
    elements: Tuple[int, ...]
    join: Dict[Tuple[int, int], int]
    meet: Dict[Tuple[int, int], int]
    complement: Dict[int, int]
    bottom: int
    top: int
    violation: Optional[Witness] = None

    @property
    def is_boolean(self) -> bool:
        return self.violation is None


def _lattice_violation(elements, join, meet, complement, bottom, top) -> Optional[Witness]:
    skel = set(elements)
    if bottom not in skel or top not in skel:
        return "bounds", (bottom, top)
    for s, t in product(elements, repeat=2):
        if join[s, t] not in skel:
            return "join-closure", (s, t)
        if meet[s, t] not in skel:
            return "meet-closure", (s, t)
    for s, t in product(elements, repeat=2):
        if join[s, t] != join[t, s]:
            return "join-commutative", (s, t)
        if meet[s, t] != meet[t, s]:
            return "meet-commutative", (s, t)
        if join[s, meet[s, t]] != s:
            return "absorption", (s, t)
        if meet[s, join[s, t]] != s:
            return "absorption", (s, t)
    for s, t, u in product(elements, repeat=3):
        if join[join[s, t], u] != join[s, join[t, u]]:
            return "join-associative", (s, t, u)
        if meet[meet[s, t], u] != meet[s, meet[t, u]]:
            return "meet-associative", (s, t, u)
    for s in elements:
        if join[bottom, s] != s:
            return "bottom", (s,)
        if meet[top, s] != s:
            return "top", (s,)
        c = complement.get(s)
        if c is None or c not in skel:
            return "complement-closure", (s,)
        if join[s, c] != top or meet[s, c] != bottom:
            return "complement", (s,)
    return None


def skeleton_lattice(V: OrderedView, analysis: Optional[PcAnalysis] = None) -> SkeletonLattice:
    """
    :raises HypothesisNotMet: when the semiring is not a Stone semiring
    """
    S = V.semiring
    analysis = analysis or pc_analysis(V)
    if not analysis.stone_semiring:
        raise HypothesisNotMet("the skeleton lattice is only defined on Stone semirings")
    star = analysis.pstar
    elements = tuple(bitset.members(analysis.skel))
    join = {(s, t): star[S.mul[star[s]][star[t]]] for s, t in product(elements, repeat=2)}
    meet = {(s, t): S.mul[s][t] for s, t in product(elements, repeat=2)}
    complement = {s: star[s] for s in elements}
    violation = _lattice_violation(elements, join, meet, complement, S.zero, S.one)
    if violation is not None:
        logger.debug(f"Skeleton lattice law {violation[0]} fails at {violation[1]}")
    return SkeletonLattice(elements, join, meet, complement, S.zero, S.one, violation)


def skeleton_boolean_check(V: OrderedView, analysis: Optional[PcAnalysis] = None) -> Tuple[bool, Optional[Witness]]:
    """
    Whether Skel(S) with the semiring's own + and . and the restricted * is a Boolean algebra.
    Applies to any pseudocomplemented semiring, Stone or not.

    :raises HypothesisNotMet: when some element has no pseudocomplement
    """
    S = V.semiring
    analysis = analysis or pc_analysis(V)
    if not analysis.pseudocomplemented:
        raise HypothesisNotMet("the semiring is not pseudocomplemented")
    star = analysis.pstar
    elements = tuple(bitset.members(analysis.skel))
    join = {(s, t): S.add[s][t] for s, t in product(elements, repeat=2)}
    meet = {(s, t): S.mul[s][t] for s, t in product(elements, repeat=2)}
    complement = {s: star[s] for s in elements}
    violation = _lattice_violation(elements, join, meet, complement, S.zero, S.one)
    if violation is None:
        for s, t, u in product(elements, repeat=3):
            if S.add[s][S.mul[t][u]] != S.mul[S.add[s][t]][S.add[s][u]]:
                violation = "join-distributive", (s, t, u)
                break
        else:
            for s in elements:
                if S.add[s][s] != s or S.mul[s][s] != s:
                    violation = "idempotent", (s,)
                    break
    return violation is None, violation
