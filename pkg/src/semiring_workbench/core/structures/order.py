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
from enum import Enum
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np

from semiring_workbench.core.exceptions import BadShape, NotAPartialOrder, NotApplicable, OrderIncompatible
from semiring_workbench.core.structures.semiring import FiniteSemiring, is_add_idempotent

logger = logging.getLogger(__name__)


class OrderSource(str, Enum):
    SUPPLIED = "supplied"
    NATURAL = "natural-from-addition"


@dataclass(frozen=True)
class OrderRelation:
    leq: Tuple[Tuple[bool, ...], ...]
    source: OrderSource = OrderSource.SUPPLIED

    @property
    def size(self) -> int:
        return len(self.leq)

    def le(self, s: int, t: int) -> bool:
        return self.leq[s][t]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.leq, dtype=bool)
        arr.flags.writeable = False
        return arr

    def is_least(self, e: int) -> bool:
        return all(self.leq[e])

    def is_greatest(self, e: int) -> bool:
        return all(row[e] for row in self.leq)

    def upper_bound_of(self, e: int, mask_members: Sequence[int]) -> bool:
        return all(self.leq[x][e] for x in mask_members)


@dataclass(frozen=True)
class OrderedView:
    semiring: FiniteSemiring
    order: OrderRelation
    positive: bool


def make_order(matrix: Sequence[Sequence[object]], source: OrderSource = OrderSource.SUPPLIED) -> OrderRelation:
    """
    Builds an OrderRelation from a square 0/1 (or boolean) matrix, checking the partial-order laws.

    :raises BadShape: for non-square matrices
    :raises NotAPartialOrder: naming the failed law and a witness
    """
    n = len(matrix)
    rows = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise BadShape(f"order row {i} has {len(row)} entries, expected {n}")
        rows.append(tuple(bool(v) for v in row))
    leq = np.array(rows, dtype=bool).reshape(n, n)

    diag = np.argwhere(~np.diag(leq))
    if diag.size:
        raise NotAPartialOrder("reflexive", (int(diag[0][0]),))
    anti = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
    if anti.size:
        raise NotAPartialOrder("antisymmetric", tuple(int(x) for x in anti[0]))
    # s <= t and t <= u but not s <= u
    trans = np.argwhere(leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :])
    if trans.size:
        raise NotAPartialOrder("transitive", tuple(int(x) for x in trans[0]))
    return OrderRelation(tuple(rows), source)


def discrete_order(n: int) -> OrderRelation:
    return OrderRelation(tuple(tuple(i == j for j in range(n)) for i in range(n)))


def natural_order(S: FiniteSemiring) -> OrderRelation:
    """
    s <= t iff s + t = t, defined when addition is idempotent.

    :raises NotApplicable: when s + s != s for some s
    """
    if not is_add_idempotent(S):
        raise NotApplicable("natural order needs idempotent addition")
    matrix = [[S.add[s][t] == t for t in S.elements] for s in S.elements]
    return make_order(matrix, OrderSource.NATURAL)


def check_ordered_axioms(S: FiniteSemiring, order: OrderRelation) -> OrderedView:
    """
    Checks (1) s <= t implies s+u <= t+u, and (2) s <= t and 0 <= u imply su <= tu, over all triples.

    :raises OrderIncompatible: with the condition number and the first violating (s, t, u)
    """
    if order.size != S.order_n:
        raise BadShape(f"order has size {order.size}, semiring has {S.order_n} elements")
    L = order.array
    A, M = S.add_array, S.mul_array
    # [s, t, u]
    cond1 = L[:, :, None] & ~L[A[:, None, :], A[None, :, :]]
    bad = np.argwhere(cond1)
    if bad.size:
        raise OrderIncompatible(1, tuple(int(x) for x in bad[0]))
    cond2 = L[:, :, None] & L[S.zero][None, None, :] & ~L[M[:, None, :], M[None, :, :]]
    bad = np.argwhere(cond2)
    if bad.size:
        raise OrderIncompatible(2, tuple(int(x) for x in bad[0]))
    return OrderedView(S, order, order.is_least(S.zero))


def default_view(S: FiniteSemiring) -> OrderedView:
    """The natural order when addition is idempotent, otherwise the (non-positive) discrete order."""
    try:
        order = natural_order(S)
    except NotApplicable:
        logger.debug("Addition is not idempotent, falling back to the discrete order")
        order = discrete_order(S.order_n)
    return check_ordered_axioms(S, order)
