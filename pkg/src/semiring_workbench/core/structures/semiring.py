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
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from semiring_workbench.core.exceptions import (
    AxiomViolation,
    AxiomViolationError,
    BadShape,
    CapacityExceeded,
    ZeroEqualsOne,
)
from semiring_workbench.core.workbench_constants import MAX_ORDER

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]

ADD_COMMUTATIVE = "add-commutative"
MUL_COMMUTATIVE = "mul-commutative"
ADD_ASSOCIATIVE = "add-associative"
MUL_ASSOCIATIVE = "mul-associative"
ADD_IDENTITY = "add-identity"
MUL_IDENTITY = "mul-identity"
DISTRIBUTIVE = "distributive"
ABSORBING_ZERO = "absorbing-zero"


@dataclass(frozen=True)
class FiniteSemiring:
    """
    A validated finite commutative semiring on the carrier {0..order_n-1}.

    Instances are produced by `validate_semiring` (or by constructions that call it) and are
    immutable; `add[s][t]` and `mul[s][t]` are element indices.
    """
    order_n: int
    add: Table
    mul: Table
    zero: int
    one: int
    labels: Optional[Tuple[str, ...]] = None

    @property
    def elements(self) -> range:
        return range(self.order_n)

    def plus(self, s: int, t: int) -> int:
        return self.add[s][t]

    def times(self, s: int, t: int) -> int:
        return self.mul[s][t]

    def power(self, s: int, k: int) -> int:
        """s^k with s^0 = one."""
        out = self.one
        for _ in range(k):
            out = self.mul[out][s]
        return out

    def label(self, s: int) -> str:
        if self.labels is not None:
            return self.labels[s]
        return str(s)

    @cached_property
    def add_array(self) -> np.ndarray:
        return _readonly(self.add)

    @cached_property
    def mul_array(self) -> np.ndarray:
        return _readonly(self.mul)


def _readonly(table: Table) -> np.ndarray:
    arr = np.array(table, dtype=np.intp)
    arr.flags.writeable = False
    return arr


def _as_table(rows: Sequence[Sequence[int]], n: int, name: str) -> Table:
    if len(rows) != n:
        raise BadShape(f"{name} table has {len(rows)} rows, expected {n}")
    out = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise BadShape(f"{name} table row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise BadShape(f"{name}[{i}][{j}] = {v!r} is not an element index in [0, {n})")
        out.append(tuple(int(v) for v in row))
    return tuple(out)


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    bad = np.argwhere(mask)
    if bad.size == 0:
        return None
    return tuple(int(x) for x in bad[0])


def check_semiring_tables(add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> List[AxiomViolation]:
    """
    Exhaustively checks every axiom family over all pairs and triples.

    :return: One AxiomViolation per violated family (empty when the tables form a semiring)
    """
    n = add.shape[0]
    idx = np.arange(n)
    violations = []

    def record(axiom: str, bad: np.ndarray):
        witness = _first(bad)
        if witness is not None:
            violations.append(AxiomViolation(axiom, witness, int(bad.sum())))

    record(ADD_COMMUTATIVE, add != add.T)
    record(MUL_COMMUTATIVE, mul != mul.T)
    # [s, t, u] -> (s op t) op u  versus  s op (t op u)
    record(ADD_ASSOCIATIVE, add[add[:, :, None], idx[None, None, :]] != add[idx[:, None, None], add[None, :, :]])
    record(MUL_ASSOCIATIVE, mul[mul[:, :, None], idx[None, None, :]] != mul[idx[:, None, None], mul[None, :, :]])
    record(ADD_IDENTITY, add[zero] != idx)
    record(MUL_IDENTITY, mul[one] != idx)
    # [s, t, u] -> s(t+u)  versus  st + su
    record(DISTRIBUTIVE, mul[idx[:, None, None], add[None, :, :]] != add[mul[:, :, None], mul[:, None, :]])
    record(ABSORBING_ZERO, mul[zero] != zero)
    return violations


def validate_semiring(add_table: Sequence[Sequence[int]], mul_table: Sequence[Sequence[int]],
                      zero: int, one: int, n: int,
                      labels: Optional[Sequence[str]] = None) -> FiniteSemiring:
    """
    Validates Cayley tables against the commutative semiring axioms.

    :raises BadShape: when tables are not n x n over [0, n), or zero/one are out of range
    :raises ZeroEqualsOne: when zero = one
    :raises AxiomViolationError: carrying every violated axiom family with a witness
    """
    if not 2 <= n <= MAX_ORDER:
        raise BadShape(f"order {n} outside [2, {MAX_ORDER}]")
    add = _as_table(add_table, n, "add")
    mul = _as_table(mul_table, n, "mul")
    for name, e in (("zero", zero), ("one", one)):
        if not isinstance(e, (int, np.integer)) or not 0 <= e < n:
            raise BadShape(f"{name} = {e!r} is not an element index in [0, {n})")
    if zero == one:
        raise ZeroEqualsOne(f"zero and one are both element {zero}")
    if labels is not None:
        if len(labels) != n:
            raise BadShape(f"{len(labels)} labels given for {n} elements")
        labels = tuple(str(x) for x in labels)

    candidate = FiniteSemiring(n, add, mul, int(zero), int(one), labels)
    violations = check_semiring_tables(candidate.add_array, candidate.mul_array, candidate.zero, candidate.one)
    if violations:
        raise AxiomViolationError(violations)
    return candidate


def is_simple(S: FiniteSemiring) -> bool:
    return all(S.add[S.one][s] == S.one for s in S.elements)


def is_mult_idempotent(S: FiniteSemiring) -> bool:
    return all(S.mul[s][s] == s for s in S.elements)


def is_add_idempotent(S: FiniteSemiring) -> bool:
    return all(S.add[s][s] == s for s in S.elements)


def is_entire(S: FiniteSemiring) -> bool:
    return all(S.mul[s][t] != S.zero
               for s in S.elements if s != S.zero
               for t in S.elements if t != S.zero)


def bounded_distributive_lattice_witness(S: FiniteSemiring) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """
    Checks join-distributivity (s+t)(s+u) = s+tu and both absorption laws s+st = s, s(s+t) = s.

    :return: None when all laws hold, else (law, witness)
    """
    A, M = S.add_array, S.mul_array
    idx = np.arange(S.order_n)
    absorb_add = A[idx[:, None], M] != idx[:, None]
    witness = _first(absorb_add)
    if witness is not None:
        return "absorption s+st=s", witness
    absorb_mul = M[idx[:, None], A] != idx[:, None]
    witness = _first(absorb_mul)
    if witness is not None:
        return "absorption s(s+t)=s", witness
    lhs = M[A[:, :, None], A[:, None, :]]
    rhs = A[idx[:, None, None], M[None, :, :]]
    witness = _first(lhs != rhs)
    if witness is not None:
        return "distributivity (s+t)(s+u)=s+tu", witness
    return None


def is_bounded_distributive_lattice(S: FiniteSemiring) -> bool:
    return bounded_distributive_lattice_witness(S) is None


def complemented_elements(S: FiniteSemiring) -> List[int]:
    """Elements s with some t such that st = 0 and s + t = 1."""
    return [s for s in S.elements
            if any(S.mul[s][t] == S.zero and S.add[s][t] == S.one for t in S.elements)]


def is_complemented(S: FiniteSemiring) -> bool:
    return len(complemented_elements(S)) == S.order_n


def direct_product(S: FiniteSemiring, T: FiniteSemiring) -> FiniteSemiring:
    """Componentwise product; element (i, j) is encoded as i * |T| + j."""
    n = S.order_n * T.order_n
    if n > MAX_ORDER:
        raise CapacityExceeded(f"product order {n} exceeds {MAX_ORDER}")
    m = T.order_n
    pairs = [(i, j) for i in S.elements for j in T.elements]
    add = [[S.add[a][c] * m + T.add[b][d] for (c, d) in pairs] for (a, b) in pairs]
    mul = [[S.mul[a][c] * m + T.mul[b][d] for (c, d) in pairs] for (a, b) in pairs]
    labels = [f"({S.label(a)},{T.label(b)})" for (a, b) in pairs]
    return validate_semiring(add, mul, S.zero * m + T.zero, S.one * m + T.one, n, labels)


def relabel(S: FiniteSemiring, perm: Sequence[int]) -> Tuple[Table, Table]:
    """Tables of S transported along perm (old index -> new index)."""
    n = S.order_n
    inverse = [0] * n
    for old, new in enumerate(perm):
        inverse[new] = old
    add = tuple(tuple(perm[S.add[inverse[i]][inverse[j]]] for j in range(n)) for i in range(n))
    mul = tuple(tuple(perm[S.mul[inverse[i]][inverse[j]]] for j in range(n)) for i in range(n))
    return add, mul
