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
import os
from dataclasses import dataclass, field
from typing import Final

MAX_ORDER: Final = 255

DEFAULT_IDEAL_CAP: Final = 24

DEFAULT_ORDER_CAP: Final = 4

DEFAULT_MC_SET_CAP: Final = 2048

DEFAULT_PC_FUNCTION_CAP: Final = 4096

DEFAULT_ORACLE_SAMPLES: Final = 100

DEBUG_ENV_VAR: Final = "SEMIRING_WORKBENCH_DEBUG"

# Semiring file format
N_FIELD: Final = "n"
ZERO_FIELD: Final = "zero"
ONE_FIELD: Final = "one"
ADD_FIELD: Final = "add"
MUL_FIELD: Final = "mul"
LABELS_FIELD: Final = "labels"
ORDER_FIELD: Final = "order"

# pc-function file format
STAR_FIELD: Final = "star"


def _debug_from_env() -> bool:
    return os.environ.get(DEBUG_ENV_VAR, "").lower() in ("1", "true", "yes")


@dataclass(frozen=True)
class WorkbenchConfig:
    ideal_cap: int = DEFAULT_IDEAL_CAP
    order_cap: int = DEFAULT_ORDER_CAP
    mc_set_cap: int = DEFAULT_MC_SET_CAP
    pc_function_cap: int = DEFAULT_PC_FUNCTION_CAP
    jobs: int = 1
    debug_checks: bool = field(default_factory=_debug_from_env)

    def __post_init__(self):
        for name in ("ideal_cap", "order_cap", "mc_set_cap", "pc_function_cap", "jobs"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_CONFIG = WorkbenchConfig()
