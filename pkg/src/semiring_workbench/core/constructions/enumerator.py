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
from typing import Iterator, List, Optional, Set, Tuple

from semiring_workbench.core.constructions.isomorphism import CanonicalForm, canonical_form
from semiring_workbench.core.exceptions import CapacityExceeded
from semiring_workbench.core.structures.semiring import FiniteSemiring, validate_semiring
from semiring_workbench.core.workbench_constants import DEFAULT_ORDER_CAP

logger = logging.getLogger(__name__)

UNSET = -1

ZERO = 0
ONE = 1


def _associative_so_far(table: List[List[int]], n: int) -> bool:
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            if ab == UNSET:
                continue
            for c in range(n):
                bc = table[b][c]
                if bc == UNSET:
                    continue
                left, right = table[ab][c], table[a][bc]
                if left != UNSET and right != UNSET and left != right:
                    return False
    return True


def _distributive_so_far(add: List[List[int]], mul: List[List[int]], n: int) -> bool:
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            if ab == UNSET:
                continue
            for c in range(n):
                ac = mul[a][c]
                if ac == UNSET:
                    continue
                left, right = mul[a][add[b][c]], add[ab][ac]
                if left != UNSET and left != right:
                    return False
    return True


def _set_symmetric(table: List[List[int]], i: int, j: int, value: int):
    table[i][j] = value
    table[j][i] = value


def _addition_tables(n: int) -> Iterator[List[List[int]]]:
    """Commutative associative tables with identity 0 (element 0 is the semiring zero)."""
    table = [[UNSET] * n for _ in range(n)]
    for x in range(n):
        _set_symmetric(table, ZERO, x, x)
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]

    def search(k: int) -> Iterator[List[List[int]]]:
        if k == len(cells):
            yield [row[:] for row in table]
            return
        i, j = cells[k]
        for value in range(n):
            _set_symmetric(table, i, j, value)
            if _associative_so_far(table, n):
                yield from search(k + 1)
        _set_symmetric(table, i, j, UNSET)

    yield from search(0)


def _multiplication_tables(add: List[List[int]], n: int) -> Iterator[List[List[int]]]:
    """Commutative associative tables with identity 1 and absorbing 0, distributing over add."""
    table = [[UNSET] * n for _ in range(n)]
    for x in range(n):
        _set_symmetric(table, ZERO, x, ZERO)
    for x in range(1, n):
        _set_symmetric(table, ONE, x, x)
    cells = [(i, j) for i in range(2, n) for j in range(i, n)]
    if not _distributive_so_far(add, table, n):
        return

    def search(k: int) -> Iterator[List[List[int]]]:
        if k == len(cells):
            yield [row[:] for row in table]
            return
        i, j = cells[k]
        for value in range(n):
            _set_symmetric(table, i, j, value)
            if _associative_so_far(table, n) and _distributive_so_far(add, table, n):
                yield from search(k + 1)
        _set_symmetric(table, i, j, UNSET)

    yield from search(0)


def enumerate_semirings(order: int, limit: Optional[int] = None,
                        order_cap: int = DEFAULT_ORDER_CAP) -> Iterator[FiniteSemiring]:
    """
    Every commutative semiring of the given order up to isomorphism, with zero = 0 and one = 1.

    Addition tables are searched first, multiplication tables nested inside them with
    associativity and distributivity checked after every assigned cell; survivors are
    deduplicated by canonical form. Output order is deterministic.

    :raises CapacityExceeded: when order exceeds order_cap, or more than limit semirings exist
    """
    if order < 2:
        raise CapacityExceeded(f"semirings need at least two elements, got order {order}")
    if order > order_cap:
        raise CapacityExceeded(f"exhaustive enumeration is capped at order {order_cap}, got {order}")
    seen: Set[CanonicalForm] = set()
    for add in _addition_tables(order):
        for mul in _multiplication_tables(add, order):
            S = validate_semiring(add, mul, ZERO, ONE, order)
            form = canonical_form(S)
            if form in seen:
                continue
            seen.add(form)
            if limit is not None and len(seen) > limit:
                raise CapacityExceeded(f"more than {limit} semirings of order {order}")
            yield S
    logger.info(f"Enumerated {len(seen)} semirings of order {order}")


def enumerate_up_to(max_order: int, order_cap: int = DEFAULT_ORDER_CAP) -> List[Tuple[str, FiniteSemiring]]:
    """Named members enum(n)#i for every order 2..max_order."""
    out = []
    for n in range(2, max_order + 1):
        for i, S in enumerate(enumerate_semirings(n, order_cap=order_cap)):
            out.append((f"enum({n})#{i}", S))
    return out
