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
from semiring_workbench.core.structures.semiring import (
    FiniteSemiring,
    validate_semiring,
    direct_product,
    is_simple,
    is_mult_idempotent,
    is_add_idempotent,
    is_entire,
    is_bounded_distributive_lattice,
    is_complemented,
)
from semiring_workbench.core.structures.order import (
    OrderRelation,
    OrderedView,
    OrderSource,
    check_ordered_axioms,
    natural_order,
    discrete_order,
    default_view,
    make_order,
)
