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
import json
import logging

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from semiring_workbench.core.exceptions import ParseError
from semiring_workbench.core.structures.order import (
    OrderRelation,
    OrderedView,
    check_ordered_axioms,
    default_view,
    make_order,
)
from semiring_workbench.core.structures.semiring import FiniteSemiring, validate_semiring
from semiring_workbench.core.workbench_constants import (
    ADD_FIELD,
    LABELS_FIELD,
    MUL_FIELD,
    N_FIELD,
    ONE_FIELD,
    ORDER_FIELD,
    STAR_FIELD,
    ZERO_FIELD,
)

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = (N_FIELD, ZERO_FIELD, ONE_FIELD, ADD_FIELD, MUL_FIELD)


class SemiringAdapter(ABC):
    def __init__(self):
        """
        Adapter turning a serialized semiring into a validated FiniteSemiring,
        plus the optional order stored alongside it.
        """
        self.semiring: Optional[FiniteSemiring] = None
        self.order: Optional[OrderRelation] = None
        self.source_name: Optional[str] = None

    @abstractmethod
    def _load_document(self, data_source: Any) -> Dict[str, Any]:
        """
        Protected method to load the raw document.

        :param data_source: Path or in-memory document
        :return: The decoded document
        """
        pass

    def adapt(self, data_source: Any) -> 'SemiringAdapter':
        """
        Load, shape-check and validate the semiring (and its order, when present).

        :param data_source: Path or in-memory document
        :return: Self for method chaining
        :raises ParseError: when the document does not follow the semiring file format
        """
        document = self._load_document(data_source)
        if not isinstance(document, dict):
            raise ParseError("semiring document must be a JSON object", self.source_name)
        missing = [f for f in REQUIRED_FIELDS if f not in document]
        if missing:
            raise ParseError(f"missing fields {missing}", self.source_name)

        n = document[N_FIELD]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError(f"'{N_FIELD}' must be an integer", self.source_name)
        for field in (ADD_FIELD, MUL_FIELD):
            self._check_square(document[field], n, field)
        for field in (ZERO_FIELD, ONE_FIELD):
            if not isinstance(document[field], int) or isinstance(document[field], bool):
                raise ParseError(f"'{field}' must be an integer", self.source_name)
        labels = document.get(LABELS_FIELD)
        if labels is not None and (not isinstance(labels, list) or len(labels) != n):
            raise ParseError(f"'{LABELS_FIELD}' must be a list of {n} strings", self.source_name)

        self.semiring = validate_semiring(document[ADD_FIELD], document[MUL_FIELD],
                                          document[ZERO_FIELD], document[ONE_FIELD], n, labels)
        self.order = None
        if document.get(ORDER_FIELD) is not None:
            self._check_square(document[ORDER_FIELD], n, ORDER_FIELD)
            self.order = make_order(document[ORDER_FIELD])
        return self

    def _check_square(self, rows: Any, n: int, field: str):
        if not isinstance(rows, list) or len(rows) != n:
            raise ParseError(f"'{field}' must be a list of {n} rows", self.source_name)
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise ParseError(f"'{field}' row {i} is ragged (expected {n} entries)", self.source_name)

    def fetch(self) -> FiniteSemiring:
        """
        Returns the validated semiring.
        """
        if self.semiring is None:
            raise ValueError("No semiring loaded. Call adapt() first.")
        return self.semiring

    def view(self) -> OrderedView:
        """
        The ordered view: the supplied order when the file carries one, otherwise the default view.
        """
        semiring = self.fetch()
        if self.order is not None:
            return check_ordered_axioms(semiring, self.order)
        return default_view(semiring)


class JSONSemiringAdapter(SemiringAdapter):
    def _load_document(self, data_source: Union[str, Path, Dict[str, Any]]) -> Dict[str, Any]:
        if isinstance(data_source, dict):
            self.source_name = "<document>"
            return data_source
        if isinstance(data_source, (str, Path)):
            self.source_name = str(data_source)
            try:
                with open(data_source, 'r', encoding='utf-8') as f:
                    return json.load(f)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON: {e}", self.source_name)
            except OSError as e:
                raise ParseError(f"cannot read file: {e}", self.source_name)
        raise ValueError("Invalid data_source type. Expected a path or a dict")


def semiring_to_document(S: FiniteSemiring, order: Optional[OrderRelation] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        N_FIELD: S.order_n,
        ZERO_FIELD: S.zero,
        ONE_FIELD: S.one,
        ADD_FIELD: [list(row) for row in S.add],
        MUL_FIELD: [list(row) for row in S.mul],
    }
    if S.labels is not None:
        document[LABELS_FIELD] = list(S.labels)
    if order is not None:
        document[ORDER_FIELD] = [[int(v) for v in row] for row in order.leq]
    return document


def dump_semiring(path: Union[str, Path], S: FiniteSemiring, order: Optional[OrderRelation] = None):
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with output_path.open('w', encoding='utf-8') as f:
        json.dump(semiring_to_document(S, order), f)
        f.write('\n')
    logger.debug(f"Wrote semiring of order {S.order_n} to {output_path}")


def load_pc_function(data_source: Union[str, Path, Dict[str, Any]], n: int) -> List[int]:
    """
    Reads a pc-function file {"star": [int]} for a semiring of order n.

    :raises ParseError: on malformed documents
    """
    if isinstance(data_source, dict):
        document = data_source
        name = "<document>"
    else:
        name = str(data_source)
        try:
            with open(data_source, 'r', encoding='utf-8') as f:
                document = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ParseError(str(e), name)
    star = document.get(STAR_FIELD) if isinstance(document, dict) else None
    if not isinstance(star, list) or len(star) != n:
        raise ParseError(f"'{STAR_FIELD}' must be a list of {n} element indices", name)
    for i, v in enumerate(star):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
            raise ParseError(f"star[{i}] = {v!r} is not an element index", name)
    return list(star)
