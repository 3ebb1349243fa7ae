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
"""Text renderings of workbench reports."""
from functools import lru_cache

from jinja2 import Environment, StrictUndefined, Template

_ENVIRONMENT = Environment(trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True,
                           undefined=StrictUndefined)

VALIDATION_TEMPLATE = """\
{% if violations %}
Not a semiring ({{ violations | length }} axiom(s) violated):
{% for v in violations %}
  {{ "%-18s"|format(v.axiom) }} witness {{ v.witness | tojson }} ({{ v.count }} violating tuple(s))
{% endfor %}
{% else %}
Valid semiring of order {{ n }} (zero = {{ zero }}, one = {{ one }})
{% endif %}
"""

ANALYSIS_TEMPLATE = """\
Semiring of order {{ n }}, order {{ order_source }}, {{ "positive" if positive else "not positive" }}
{% for name, value in predicates %}
  {{ "%-30s"|format(name) }} {{ "yes" if value else "no" }}
{% endfor %}
{% if rows %}
Pseudocomplements:
{% for row in rows %}
  {{ "%-10s"|format(row.label) }} s* = {{ "%-10s"|format(row.star) }} {{ row.flags | join(" ") }}
{% endfor %}
{% endif %}
"""

IDEALS_TEMPLATE = """\
{{ ideals | length }} ideal(s):
{% for ideal in ideals %}
  {{ ideal | join(", ") }}
{% endfor %}
"""

SPECTRUM_TEMPLATE = """\
Prime ideals ({{ primes | length }}):
{% for p in primes %}
  {{ p | join(", ") }}
{% endfor %}
Minimal primes: {% for p in minimal %}{{ "{" ~ (p | join(", ")) ~ "}" }} {% endfor %}

Nilradical: {{ nilradical | join(", ") }} ({{ "nilpotent-free" if nilpotent_free else "has nonzero nilpotents" }})
Zero divisors: {{ zero_divisors | join(", ") }}
{% if readings_diverge %}
Minimal in the "(0) or P" sense: {% for p in intro_minimal %}{{ "{" ~ (p | join(", ")) ~ "}" }} {% endfor %}

{% endif %}
{% if height_one is not none %}
Height-one primes: {% for p in height_one %}{{ "{" ~ (p | join(", ")) ~ "}" }} {% endfor %}

{% endif %}
"""

THEOREMS_TEMPLATE = """\
{% for r in reports %}
{{ "%-12s %-8s %6d"|format(r.theorem, r.result, r.instances) }}{{ "  " ~ r.note if r.note else "" }}
{% if r.witness %}
    witness: {{ r.witness | tojson }}
{% endif %}
{% endfor %}
"""

CORPUS_SUMMARY_TEMPLATE = """\
Corpus of {{ members }} semiring(s), {{ total }} theorem check(s)
{{ "%-12s %6s %6s %8s"|format("theorem", "pass", "fail", "skipped") }}
{% for row in rows %}
{{ "%-12s %6d %6d %8d"|format(row.theorem, row.passed, row.failed, row.skipped) }}
{% endfor %}
Total: {{ passed }} passed, {{ failed }} failed, {{ skipped }} skipped
{% for f in failures %}
FAIL {{ f.theorem }} on {{ f.semiring }}: {{ f.witness | tojson }}
{% endfor %}
{% for o in oracles %}
ORACLE {{ o.semiring }}: {{ o.checks }} check(s), {{ o.mismatches | length }} mismatch(es)
{% endfor %}
"""


@lru_cache(maxsize=None)
def _template(source: str) -> Template:
    return _ENVIRONMENT.from_string(source)


def render(source: str, **context) -> str:
    return _template(source).render(**context)
