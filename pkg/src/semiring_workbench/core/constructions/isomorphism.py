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
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from semiring_workbench.core.exceptions import CapacityExceeded
from semiring_workbench.core.structures.semiring import FiniteSemiring, relabel

CANONICAL_FORM_MAX_ORDER = 8

CanonicalForm = Tuple[Tuple[int, ...], Tuple[int, ...]]


def canonical_form(S: FiniteSemiring) -> CanonicalForm:
    """
    Lexicographically least (add, mul) pair of flattened tables over all relabellings sending
    zero to 0 and one to 1. Two semirings are isomorphic iff their canonical forms coincide.
    """
    n = S.order_n
    if n > CANONICAL_FORM_MAX_ORDER:
        raise CapacityExceeded(f"canonical form is limited to order {CANONICAL_FORM_MAX_ORDER}")
    rest = [e for e in S.elements if e not in (S.zero, S.one)]
    best: Optional[CanonicalForm] = None
    for arrangement in permutations(range(2, n)):
        perm = [0] * n
        perm[S.zero] = 0
        perm[S.one] = 1
        for old, new in zip(rest, arrangement):
            perm[old] = new
        add, mul = relabel(S, perm)
        form = (sum(add, ()), sum(mul, ()))
        if best is None or form < best:
            best = form
    assert best is not None
    return best


def _signature(S: FiniteSemiring, s: int) -> Tuple:
    return (
        s == S.zero,
        s == S.one,
        S.add[s][s] == s,
        S.mul[s][s] == s,
        sum(1 for t in S.elements if S.mul[s][t] == S.zero),
        sum(1 for t in S.elements if S.add[s][t] == s),
        sum(1 for t in S.elements if S.mul[s][t] == s),
    )


def find_isomorphism(S: FiniteSemiring, T: FiniteSemiring) -> Optional[List[int]]:
    """
    Backtracking search for a bijection f with f(zero)=zero, f(one)=one preserving both tables.

    :return: f as a list indexed by the elements of S, or None
    """
    if S.order_n != T.order_n:
        return None
    n = S.order_n
    sig_t: Dict[Tuple, List[int]] = {}
    for t in T.elements:
        sig_t.setdefault(_signature(T, t), []).append(t)
    candidates = []
    for s in S.elements:
        options = sig_t.get(_signature(S, s))
        if not options:
            return None
        candidates.append(options)

    f = [-1] * n
    used = [False] * n

    def consistent(s: int) -> bool:
        for a in S.elements:
            if f[a] < 0:
                continue
            for table_s, table_t in ((S.add, T.add), (S.mul, T.mul)):
                for x, y in ((s, a), (a, s)):
                    image = f[table_s[x][y]]
                    if image >= 0 and image != table_t[f[x]][f[y]]:
                        return False
        return True

    order = sorted(S.elements, key=lambda s: len(candidates[s]))

    def assign(k: int) -> bool:
        if k == n:
            return all(f[table_s[x][y]] == table_t[f[x]][f[y]]
                       for table_s, table_t in ((S.add, T.add), (S.mul, T.mul))
                       for x in S.elements for y in S.elements)
        s = order[k]
        for t in candidates[s]:
            if used[t]:
                continue
            f[s] = t
            used[t] = True
            if consistent(s) and assign(k + 1):
                return True
            f[s] = -1
            used[t] = False
        return False

    return list(f) if assign(0) else None


def is_isomorphic(S: FiniteSemiring, T: FiniteSemiring) -> bool:
    return find_isomorphism(S, T) is not None
