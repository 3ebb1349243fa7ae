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
from functools import lru_cache
from typing import Iterable, List, Tuple

from semiring_workbench.core.exceptions import CapacityExceeded
from semiring_workbench.core.structures.semiring import FiniteSemiring
from semiring_workbench.core.workbench_constants import DEFAULT_CONFIG, DEFAULT_IDEAL_CAP
from semiring_workbench.util import bitset

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class IdealSet:
    """An ideal, stored as a bitmask over the carrier (bit i set iff element i is a member)."""
    members: int

    def __contains__(self, e: int) -> bool:
        return bitset.contains(self.members, e)

    def __len__(self) -> int:
        return bitset.popcount(self.members)

    def elements(self) -> List[int]:
        return bitset.members(self.members)

    def issubset(self, other: 'IdealSet') -> bool:
        return bitset.is_subset(self.members, other.members)

    def to_list(self) -> List[int]:
        return self.elements()


def is_ideal(S: FiniteSemiring, mask: int) -> bool:
    if not bitset.contains(mask, S.zero):
        return False
    elems = bitset.members(mask)
    for a in elems:
        for b in elems:
            if not bitset.contains(mask, S.add[a][b]):
                return False
        for s in S.elements:
            if not bitset.contains(mask, S.mul[s][a]):
                return False
    return True


def _checked(S: FiniteSemiring, mask: int) -> IdealSet:
    if DEFAULT_CONFIG.debug_checks and not is_ideal(S, mask):
        raise AssertionError(f"computed set {bitset.members(mask)} is not an ideal")
    return IdealSet(mask)


def additive_closure(S: FiniteSemiring, mask: int) -> int:
    """Least superset of mask closed under addition."""
    found = bitset.members(mask)
    worklist = list(found)
    while worklist:
        x = worklist.pop()
        for y in list(found):
            z = S.add[x][y]
            if not bitset.contains(mask, z):
                mask |= 1 << z
                found.append(z)
                worklist.append(z)
    return mask


def ideal_generated(S: FiniteSemiring, gens: Iterable[int]) -> IdealSet:
    """
    Least ideal containing gens: every finite sum of multiples s*g, g in gens, together with zero.
    """
    mask = 1 << S.zero
    for g in gens:
        for s in S.elements:
            mask |= 1 << S.mul[s][g]
    return _checked(S, additive_closure(S, mask))


def ideal_sum(S: FiniteSemiring, I: IdealSet, J: IdealSet) -> IdealSet:
    return _checked(S, additive_closure(S, I.members | J.members))


def ideal_product(S: FiniteSemiring, I: IdealSet, J: IdealSet) -> IdealSet:
    products = {S.mul[a][b] for a in I.elements() for b in J.elements()}
    return ideal_generated(S, products)


def zero_ideal(S: FiniteSemiring) -> IdealSet:
    return IdealSet(1 << S.zero)


def unit_ideal(S: FiniteSemiring) -> IdealSet:
    return IdealSet(bitset.full_mask(S.order_n))


@lru_cache(maxsize=512)
def _ideal_masks(S: FiniteSemiring) -> Tuple[int, ...]:
    # every ideal is the sum of the principal ideals of its members
    principal = {ideal_generated(S, [a]).members for a in S.elements}
    found = set(principal)
    worklist = list(principal)
    while worklist:
        x = worklist.pop()
        for y in list(found):
            z = additive_closure(S, x | y)
            if z not in found:
                found.add(z)
                worklist.append(z)
    return tuple(sorted(found, key=bitset.ordering_key))


def enumerate_ideals(S: FiniteSemiring, cap: int = DEFAULT_IDEAL_CAP) -> List[IdealSet]:
    """
    All ideals of S, ascending by size then bit pattern.

    :raises CapacityExceeded: when the order of S exceeds the ideal-enumeration cap
    """
    if S.order_n > cap:
        raise CapacityExceeded(f"ideal enumeration is capped at order {cap}, semiring has order {S.order_n}")
    return [IdealSet(m) for m in _ideal_masks(S)]


def annihilator_set(S: FiniteSemiring, s: int) -> int:
    """Bitmask of {x : s*x = 0}."""
    return bitset.to_mask(x for x in S.elements if S.mul[s][x] == S.zero)


def annihilator_ideal(S: FiniteSemiring, H: Iterable[int]) -> IdealSet:
    """
    Ann(H) = {s : s*h = 0 for all h in H}.

    :raises ValueError: for an empty H
    """
    H = list(H)
    if not H:
        raise ValueError("annihilator of an empty set is not defined")
    mask = bitset.full_mask(S.order_n)
    for h in H:
        mask &= annihilator_set(S, h)
    return _checked(S, mask)


def zero_divisors(S: FiniteSemiring) -> int:
    """Bitmask of {s : st = 0 for some t != 0}."""
    return bitset.to_mask(
        s for s in S.elements
        if any(S.mul[s][t] == S.zero for t in S.elements if t != S.zero)
    )
