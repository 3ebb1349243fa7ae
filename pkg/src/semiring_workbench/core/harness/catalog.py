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
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from semiring_workbench.core.exceptions import RangeError


@dataclass(frozen=True)
class TheoremId:
    family: str
    clause: Optional[str] = None

    def __str__(self) -> str:
        return self.family if self.clause is None else f"{self.family}.{self.clause}"


def _clauses(family: str, clauses: Iterable[str]) -> Tuple[TheoremId, ...]:
    return tuple(TheoremId(family, c) for c in clauses)


CATALOG: Tuple[TheoremId, ...] = (
    *_clauses("PSEUDO1", "12345678"),
    TheoremId("PCFN-MIN"),
    TheoremId("PCFN-MIN2"),
    TheoremId("MINPRIME-PC"),
    *_clauses("STONE1", "123"),
    TheoremId("SIMPLE"),
    TheoremId("BDL"),
    TheoremId("PBDL"),
    TheoremId("STONE2"),
    TheoremId("SKEL1"),
    TheoremId("SKEL-BOOL"),
    *_clauses("MI", "1234"),
    *_clauses("DENSE1", ("1", "2", "a", "b", "c")),
    TheoremId("MAX-PRIME"),
    TheoremId("KRULL-RAD"),
    TheoremId("KRULL-MIN"),
    TheoremId("HUCKABA"),
    TheoremId("HUCKABA2"),
    TheoremId("HUCKABA3"),
    TheoremId("ZDIV"),
    TheoremId("MIN-PBDL"),
    TheoremId("IDSEMIRING"),
)

CATALOG_INDEX = {t: i for i, t in enumerate(CATALOG)}

# statements that need a positive order on the semiring
ORDER_DEPENDENT_FAMILIES = frozenset({
    "PSEUDO1", "MINPRIME-PC", "STONE1", "SIMPLE", "BDL", "PBDL", "STONE2", "SKEL1", "SKEL-BOOL",
    "MI", "DENSE1", "MIN-PBDL",
})


def parse_theorem_ids(tokens: Iterable[str]) -> List[TheoremId]:
    """
    Resolves "PSEUDO1.5"-style tokens (comma separated or not) against the catalog; a bare family
    id selects all of its clauses. The result follows catalog order without duplicates.

    :raises RangeError: for an unknown id
    """
    selected = set()
    for token in tokens:
        for name in filter(None, (part.strip() for part in token.split(","))):
            matches = [t for t in CATALOG if str(t) == name or t.family == name]
            if not matches:
                raise RangeError(f"unknown theorem id {name!r}")
            selected.update(matches)
    return sorted(selected, key=CATALOG_INDEX.__getitem__)
