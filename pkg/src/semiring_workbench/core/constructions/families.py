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
from enum import Enum
from math import gcd
from typing import List, Sequence, Tuple

from semiring_workbench.core.exceptions import RangeError
from semiring_workbench.core.structures.semiring import FiniteSemiring, direct_product, validate_semiring
from semiring_workbench.core.workbench_constants import MAX_ORDER

logger = logging.getLogger(__name__)


class Family(str, Enum):
    CHAIN = "chain"
    POWERSET = "powerset"
    DIVISOR_LATTICE = "divisor_lattice"
    IDEAL_SEMIRING_OF_ZM = "ideal_semiring_of_Zm"
    TRUNCATED_MIN_PLUS = "truncated_min_plus"
    STACKED_DIAMOND = "stacked_diamond"
    RING_ZM = "ring_Zm"
    PRODUCT = "product"
    EXHAUSTIVE = "exhaustive"


def _divisors(m: int) -> List[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def chain_lattice(k: int) -> FiniteSemiring:
    """{0..k-1} with max as addition and min as multiplication."""
    if not 2 <= k <= MAX_ORDER:
        raise RangeError(f"chain length must be in [2, {MAX_ORDER}], got {k}")
    table_add = [[max(a, b) for b in range(k)] for a in range(k)]
    table_mul = [[min(a, b) for b in range(k)] for a in range(k)]
    return validate_semiring(table_add, table_mul, 0, k - 1, k)


def powerset_lattice(k: int) -> FiniteSemiring:
    """Subsets of a k-set (as bitmasks) under union and intersection."""
    if not 1 <= k <= 7:
        raise RangeError(f"powerset base size must be in [1, 7], got {k}")
    n = 1 << k
    table_add = [[a | b for b in range(n)] for a in range(n)]
    table_mul = [[a & b for b in range(n)] for a in range(n)]
    labels = ["{" + ",".join(str(i) for i in range(k) if a >> i & 1) + "}" for a in range(n)]
    return validate_semiring(table_add, table_mul, 0, n - 1, n, labels)


def divisor_lattice(m: int) -> FiniteSemiring:
    """Divisors of m with lcm as addition and gcd as multiplication; zero is 1, one is m."""
    if m < 2:
        raise RangeError(f"divisor lattice needs m >= 2, got {m}")
    divs = _divisors(m)
    if len(divs) > MAX_ORDER:
        raise RangeError(f"{m} has {len(divs)} divisors, more than {MAX_ORDER}")
    index = {d: i for i, d in enumerate(divs)}
    table_add = [[index[_lcm(a, b)] for b in divs] for a in divs]
    table_mul = [[index[gcd(a, b)] for b in divs] for a in divs]
    return validate_semiring(table_add, table_mul, index[1], index[m], len(divs), [str(d) for d in divs])


def ideal_semiring_of_Zm(m: int) -> FiniteSemiring:
    """
    The semiring of ideals of the ring Z_m. Element i stands for the ideal (d_i), where the
    divisors d_i of m are listed in decreasing order, so (m) = (0) is element 0 and (1) is last.
    (a) + (b) = (gcd(a, b)) and (a)(b) = (gcd(ab, m)).
    """
    if not 2 <= m <= MAX_ORDER:
        raise RangeError(f"modulus must be in [2, {MAX_ORDER}], got {m}")
    divs = sorted(_divisors(m), reverse=True)
    index = {d: i for i, d in enumerate(divs)}
    table_add = [[index[gcd(a, b)] for b in divs] for a in divs]
    table_mul = [[index[gcd(a * b, m)] for b in divs] for a in divs]
    labels = ["(0)" if d == m else f"({d})" for d in divs]
    return validate_semiring(table_add, table_mul, index[m], index[1], len(divs), labels)


def ideal_index_of_divisor(m: int, d: int) -> int:
    """Element index of the ideal (d) inside ideal_semiring_of_Zm(m)."""
    divs = sorted(_divisors(m), reverse=True)
    return divs.index(gcd(d, m))


def truncated_min_plus(k: int) -> FiniteSemiring:
    """
    {0..k} with min as addition and addition capped at k as multiplication; k plays the role of
    the infinite element (semiring zero) and 0 is the semiring one.
    """
    if not 1 <= k < MAX_ORDER:
        raise RangeError(f"truncation level must be in [1, {MAX_ORDER - 1}], got {k}")
    n = k + 1
    table_add = [[min(a, b) for b in range(n)] for a in range(n)]
    table_mul = [[min(a + b, k) for b in range(n)] for a in range(n)]
    return validate_semiring(table_add, table_mul, k, 0, n)


DIAMOND_LABELS = ("0", "x", "y", "m", "1")
# covering pairs of 0 < x, y < m < 1
_DIAMOND_COVERS = ((0, 1), (0, 2), (1, 3), (2, 3), (3, 4))


def lattice_from_covers(n: int, covers: Sequence[Tuple[int, int]], labels: Sequence[str]) -> FiniteSemiring:
    """Join/meet semiring of the lattice generated by the covering pairs; 0 and n-1 are bottom and top."""
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        leq[a][b] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True

    def bound(a: int, b: int, upper: bool) -> int:
        if upper:
            cands = [c for c in range(n) if leq[a][c] and leq[b][c]]
            return next(c for c in cands if all(leq[c][d] for d in cands))
        cands = [c for c in range(n) if leq[c][a] and leq[c][b]]
        return next(c for c in cands if all(leq[d][c] for d in cands))

    table_add = [[bound(a, b, True) for b in range(n)] for a in range(n)]
    table_mul = [[bound(a, b, False) for b in range(n)] for a in range(n)]
    return validate_semiring(table_add, table_mul, 0, n - 1, n, list(labels))


def stacked_diamond() -> FiniteSemiring:
    """The lattice 0 < x, y < m < 1 with x meet y = 0 and x join y = m."""
    return lattice_from_covers(5, _DIAMOND_COVERS, DIAMOND_LABELS)


def ring_Zm(m: int) -> FiniteSemiring:
    """The ring of integers modulo m, as a (not additively idempotent) semiring."""
    if not 2 <= m <= MAX_ORDER:
        raise RangeError(f"modulus must be in [2, {MAX_ORDER}], got {m}")
    table_add = [[(a + b) % m for b in range(m)] for a in range(m)]
    table_mul = [[(a * b) % m for b in range(m)] for a in range(m)]
    return validate_semiring(table_add, table_mul, 0, 1, m)


@dataclass(frozen=True)
class GeneratorSpec:
    """
    One corpus entry: a family plus its integer parameters. Products carry their two factors;
    exhaustive entries take (order,) and expand into every semiring of that order.
    """
    family: Family
    parameters: Tuple[int, ...] = ()
    factors: Tuple['GeneratorSpec', ...] = field(default=())

    @property
    def name(self) -> str:
        if self.family is Family.PRODUCT:
            return " x ".join(f.name for f in self.factors)
        if not self.parameters:
            return self.family.value
        return f"{self.family.value}({','.join(str(p) for p in self.parameters)})"


_SINGLE_PARAMETER_BUILDERS = {
    Family.CHAIN: chain_lattice,
    Family.POWERSET: powerset_lattice,
    Family.DIVISOR_LATTICE: divisor_lattice,
    Family.IDEAL_SEMIRING_OF_ZM: ideal_semiring_of_Zm,
    Family.TRUNCATED_MIN_PLUS: truncated_min_plus,
    Family.RING_ZM: ring_Zm,
}


def build_single(spec: GeneratorSpec) -> FiniteSemiring:
    """Builds a non-exhaustive spec into its one semiring."""
    if spec.family in _SINGLE_PARAMETER_BUILDERS:
        if len(spec.parameters) != 1:
            raise RangeError(f"{spec.family.value} takes exactly one parameter")
        return _SINGLE_PARAMETER_BUILDERS[spec.family](spec.parameters[0])
    if spec.family is Family.STACKED_DIAMOND:
        return stacked_diamond()
    if spec.family is Family.PRODUCT:
        if len(spec.factors) != 2:
            raise RangeError("product takes exactly two factors")
        left, right = (build_single(f) for f in spec.factors)
        return direct_product(left, right)
    raise RangeError(f"{spec.family.value} does not describe a single semiring")
