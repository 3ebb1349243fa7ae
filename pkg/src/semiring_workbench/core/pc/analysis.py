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

from semiring_workbench.core.exceptions import NotPositive
from semiring_workbench.core.ideals.ideal_ops import annihilator_set
from semiring_workbench.core.structures.order import OrderedView
from semiring_workbench.util import bitset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PcAnalysis:
    """
    Pseudocomplement data of a positive ordered semiring.

    `pstar[s]` is s* for s in pcomp and None otherwise; the sets are bitmasks over the carrier.
    """
    pstar: Tuple[Optional[int], ...]
    pcomp: int
    skel: int
    stone: int
    dense: int

    def in_pcomp(self, s: Optional[int]) -> bool:
        return s is not None and bitset.contains(self.pcomp, s)

    def star(self, s: Optional[int]) -> Optional[int]:
        """s* when s is pseudocomplemented, else None; chains as star(star(s)) for s**."""
        if s is None:
            return None
        return self.pstar[s]

    @property
    def order_n(self) -> int:
        return len(self.pstar)

    @property
    def pseudocomplemented(self) -> bool:
        return self.pcomp == bitset.full_mask(self.order_n)

    @property
    def stone_semiring(self) -> bool:
        return self.stone == bitset.full_mask(self.order_n)

    def to_dict(self, labels=None) -> Dict:
        def name(e):
            return e if labels is None else labels[e]

        def subset(mask):
            return [name(e) for e in bitset.members(mask)]
        return {
            "pstar": [None if p is None else name(p) for p in self.pstar],
            "pcomp": subset(self.pcomp),
            "skel": subset(self.skel),
            "stone": subset(self.stone),
            "dense": subset(self.dense),
            "pseudocomplemented": self.pseudocomplemented,
            "stone_semiring": self.stone_semiring,
        }


def _require_positive(V: OrderedView):
    if not V.positive:
        raise NotPositive("pseudocomplement analysis needs a positive order (zero must be least)")


def pseudocomplement_candidates(V: OrderedView, s: int) -> List[int]:
    """Annihilators of s that bound every annihilator of s from above."""
    S, order = V.semiring, V.order
    ann = bitset.members(annihilator_set(S, s))
    return [m for m in ann if order.upper_bound_of(m, ann)]


def pseudocomplement(V: OrderedView, s: int) -> Optional[int]:
    """
    The greatest annihilator of s, if it exists.

    :raises NotPositive: when the view is not positive
    """
    _require_positive(V)
    candidates = pseudocomplement_candidates(V, s)
    # antisymmetry leaves at most one
    return candidates[0] if candidates else None


def pc_analysis(V: OrderedView) -> PcAnalysis:
    """
    :raises NotPositive: when the view is not positive
    """
    _require_positive(V)
    S = V.semiring
    pstar = tuple(pseudocomplement(V, s) for s in S.elements)
    pcomp = bitset.to_mask(s for s in S.elements if pstar[s] is not None)
    skel = bitset.to_mask(p for p in pstar if p is not None)
    dense = bitset.to_mask(s for s in S.elements if pstar[s] == S.zero)
    stone = 0
    for s in S.elements:
        p = pstar[s]
        if p is None or pstar[p] is None:
            continue
        if S.add[p][pstar[p]] == S.one:
            stone |= 1 << s
    return PcAnalysis(pstar, pcomp, skel, stone, dense)
