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
from typing import Dict, List, Optional, Tuple

from semiring_workbench.core.exceptions import EmptySpectrum, HypothesisNotMet
from semiring_workbench.core.ideals.ideal_ops import (
    IdealSet,
    enumerate_ideals,
    zero_divisors,
    zero_ideal,
)
from semiring_workbench.core.structures.semiring import FiniteSemiring, is_entire
from semiring_workbench.core.workbench_constants import DEFAULT_IDEAL_CAP, DEFAULT_MC_SET_CAP
from semiring_workbench.util import bitset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class McSet:
    members: int

    def __contains__(self, e: int) -> bool:
        return bitset.contains(self.members, e)

    def elements(self) -> List[int]:
        return bitset.members(self.members)


@dataclass(frozen=True)
class SpectrumReport:
    primes: Tuple[IdealSet, ...]
    v_of_i: Tuple[IdealSet, ...]
    minimal: Tuple[IdealSet, ...]
    nilradical: IdealSet
    nilpotent_free: bool
    zero_divisors: int
    intro_minimal: Tuple[IdealSet, ...]
    readings_diverge: bool
    height_one: Optional[Tuple[IdealSet, ...]] = None

    def to_dict(self) -> Dict:
        def ideals(xs):
            return [x.to_list() for x in xs]
        return {
            "primes": ideals(self.primes),
            "v_of_i": ideals(self.v_of_i),
            "minimal_primes": ideals(self.minimal),
            "nilradical": self.nilradical.to_list(),
            "nilpotent_free": self.nilpotent_free,
            "zero_divisors": bitset.members(self.zero_divisors),
            "intro_reading_minimal_primes": ideals(self.intro_minimal),
            "minimal_prime_readings_diverge": self.readings_diverge,
            "height_one_primes": None if self.height_one is None else ideals(self.height_one),
        }


def is_prime_ideal(S: FiniteSemiring, I: IdealSet) -> bool:
    """Proper, and ab in I forces a in I or b in I."""
    if S.one in I:
        return False
    outside = [x for x in S.elements if x not in I]
    return all(S.mul[a][b] not in I for a in outside for b in outside)


def enumerate_primes(S: FiniteSemiring, ideal_cap: int = DEFAULT_IDEAL_CAP) -> List[IdealSet]:
    return [I for I in enumerate_ideals(S, ideal_cap) if is_prime_ideal(S, I)]


def is_mc_set(S: FiniteSemiring, W: int) -> bool:
    """1 in W and W closed under multiplication (W may contain zero)."""
    if not bitset.contains(W, S.one):
        return False
    elems = bitset.members(W)
    return all(bitset.contains(W, S.mul[a][b]) for a in elems for b in elems)


def complement_is_mc_set(S: FiniteSemiring, I: IdealSet) -> bool:
    return is_mc_set(S, bitset.full_mask(S.order_n) & ~I.members)


def mc_closure(S: FiniteSemiring, mask: int) -> int:
    """Least MC-set containing mask."""
    mask |= 1 << S.one
    found = bitset.members(mask)
    worklist = list(found)
    while worklist:
        x = worklist.pop()
        for y in list(found):
            z = S.mul[x][y]
            if not bitset.contains(mask, z):
                mask |= 1 << z
                found.append(z)
                worklist.append(z)
    return mask


def enumerate_mc_sets(S: FiniteSemiring, cap: int = DEFAULT_MC_SET_CAP) -> Tuple[List[McSet], bool]:
    """
    MC-sets of S reached by closing {1} and extending one element at a time.

    :return: (MC-sets ascending by size then bit pattern, truncated flag)
    """
    start = mc_closure(S, 0)
    found = {start}
    worklist = [start]
    truncated = False
    while worklist and not truncated:
        W = worklist.pop()
        for e in S.elements:
            if bitset.contains(W, e):
                continue
            X = mc_closure(S, W | (1 << e))
            if X not in found:
                if len(found) >= cap:
                    truncated = True
                    break
                found.add(X)
                worklist.append(X)
    if truncated:
        logger.warning(f"MC-set enumeration truncated at {cap} sets for a semiring of order {S.order_n}")
    return [McSet(m) for m in sorted(found, key=bitset.ordering_key)], truncated


def maximal_disjoint_ideals(S: FiniteSemiring, W: McSet, I: IdealSet,
                            ideal_cap: int = DEFAULT_IDEAL_CAP) -> List[IdealSet]:
    """
    The inclusion-maximal ideals containing I and disjoint from W.

    :raises HypothesisNotMet: when I meets W
    """
    if I.members & W.members:
        raise HypothesisNotMet("the starting ideal meets the MC-set")
    candidates = [J for J in enumerate_ideals(S, ideal_cap)
                  if I.issubset(J) and not J.members & W.members]
    return _maximal(candidates)


def _minimal(ideals: List[IdealSet]) -> List[IdealSet]:
    return [P for P in ideals if not any(Q != P and Q.issubset(P) for Q in ideals)]


def _maximal(ideals: List[IdealSet]) -> List[IdealSet]:
    return [P for P in ideals if not any(Q != P and P.issubset(Q) for Q in ideals)]


def primes_containing(S: FiniteSemiring, I: IdealSet, ideal_cap: int = DEFAULT_IDEAL_CAP) -> List[IdealSet]:
    """V(I)."""
    return [P for P in enumerate_primes(S, ideal_cap) if I.issubset(P)]


def minimal_primes(S: FiniteSemiring, I: Optional[IdealSet] = None,
                   ideal_cap: int = DEFAULT_IDEAL_CAP) -> List[IdealSet]:
    """
    Min(I), the inclusion-minimal primes containing I; Min(S) when I is omitted.

    :raises EmptySpectrum: when no prime contains I (I = S)
    """
    if I is None:
        I = zero_ideal(S)
    v_of_i = primes_containing(S, I, ideal_cap)
    if not v_of_i:
        raise EmptySpectrum("no prime ideal contains the given ideal")
    return _minimal(v_of_i)


def radical(S: FiniteSemiring, I: IdealSet) -> IdealSet:
    """
    {s : s^k in I for some k >= 1}; the power sequence of s repeats within n steps.
    """
    mask = 0
    for s in S.elements:
        p = s
        for _ in range(S.order_n):
            if p in I:
                mask |= 1 << s
                break
            p = S.mul[p][s]
    return IdealSet(mask)


def intersection(S: FiniteSemiring, ideals: List[IdealSet]) -> IdealSet:
    """Intersection of a family of ideals; the empty family gives S."""
    mask = bitset.full_mask(S.order_n)
    for P in ideals:
        mask &= P.members
    return IdealSet(mask)


def radical_views(S: FiniteSemiring, I: IdealSet,
                  ideal_cap: int = DEFAULT_IDEAL_CAP) -> Tuple[IdealSet, IdealSet, IdealSet]:
    """
    The radical of I computed three independent ways: element powers, the intersection of V(I),
    and the intersection of Min(I).
    """
    v_of_i = primes_containing(S, I, ideal_cap)
    return radical(S, I), intersection(S, v_of_i), intersection(S, _minimal(v_of_i))


def nilpotent_analysis(S: FiniteSemiring) -> Tuple[IdealSet, bool]:
    nil = radical(S, zero_ideal(S))
    return nil, nil == zero_ideal(S)


def intro_reading_minimal(S: FiniteSemiring, primes: List[IdealSet],
                          ideal_cap: int = DEFAULT_IDEAL_CAP) -> List[IdealSet]:
    """Primes P such that every ideal contained in P is (0) or P."""
    ideals = enumerate_ideals(S, ideal_cap)
    zero = zero_ideal(S)
    return [P for P in primes
            if all(J == zero or J == P for J in ideals if J.issubset(P))]


def spectrum_report(S: FiniteSemiring, I: Optional[IdealSet] = None,
                    ideal_cap: int = DEFAULT_IDEAL_CAP) -> SpectrumReport:
    if I is None:
        I = zero_ideal(S)
    primes = enumerate_primes(S, ideal_cap)
    v_of_i = [P for P in primes if I.issubset(P)]
    minimal = _minimal(v_of_i)
    nil, nilpotent_free = nilpotent_analysis(S)
    min_s = _minimal(primes)
    intro = intro_reading_minimal(S, primes, ideal_cap)
    height_one = None
    if is_entire(S):
        zero = zero_ideal(S)
        height_one = tuple(_minimal([P for P in primes if P != zero]))
    return SpectrumReport(
        primes=tuple(primes),
        v_of_i=tuple(v_of_i),
        minimal=tuple(minimal),
        nilradical=nil,
        nilpotent_free=nilpotent_free,
        zero_divisors=zero_divisors(S),
        intro_minimal=tuple(intro),
        readings_diverge=set(intro) != set(min_s),
        height_one=height_one,
    )
