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
"""
One executable check per catalog entry. Each check quantifies over every element, ideal, prime or
pc-function its statement mentions, filtered by the statement's own hypotheses, and reports the
first counterexample it meets.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from semiring_workbench.core.condition_report import all_agree
from semiring_workbench.core.exceptions import CapacityExceeded, NotAnnihilating
from semiring_workbench.core.harness.catalog import TheoremId
from semiring_workbench.core.ideals.criteria import (
    huckaba2_check,
    huckaba3_check,
    huckaba_criteria,
    minimalpbdl_report,
)
from semiring_workbench.core.ideals.ideal_ops import IdealSet, enumerate_ideals, zero_divisors, zero_ideal
from semiring_workbench.core.ideals.ideal_semiring import build_ideal_semiring
from semiring_workbench.core.ideals.spectrum import (
    McSet,
    enumerate_mc_sets,
    enumerate_primes,
    is_prime_ideal,
    maximal_disjoint_ideals,
    minimal_primes,
    nilpotent_analysis,
    radical_views,
)
from semiring_workbench.core.pc.analysis import PcAnalysis, pc_analysis
from semiring_workbench.core.pc.pc_function import PcFunction, enumerate_pc_functions, pc_prime_report, \
    validate_pc_function
from semiring_workbench.core.pc.skeleton import skeleton_boolean_check, skeleton_lattice
from semiring_workbench.core.structures.order import OrderedView
from semiring_workbench.core.structures.semiring import (
    is_bounded_distributive_lattice,
    is_entire,
    is_mult_idempotent,
    is_simple,
)
from semiring_workbench.core.workbench_constants import DEFAULT_CONFIG, WorkbenchConfig
from semiring_workbench.util import bitset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckOutcome:
    hypotheses_met: bool
    instances: int = 0
    witness: Optional[Dict[str, Any]] = None
    note: Optional[str] = None


def unmet(reason: str) -> CheckOutcome:
    return CheckOutcome(False, note=reason)


class VerificationContext:
    """Everything the checks share for one semiring, computed on first use."""

    def __init__(self, view: OrderedView, config: WorkbenchConfig = DEFAULT_CONFIG,
                 analysis: Optional[PcAnalysis] = None):
        self.view = view
        self.semiring = view.semiring
        self.config = config
        self._injected_analysis = analysis

    @cached_property
    def analysis(self) -> Optional[PcAnalysis]:
        if self._injected_analysis is not None:
            return self._injected_analysis
        return pc_analysis(self.view) if self.view.positive else None

    @cached_property
    def ideals(self) -> List[IdealSet]:
        return enumerate_ideals(self.semiring, self.config.ideal_cap)

    @cached_property
    def primes(self) -> List[IdealSet]:
        return enumerate_primes(self.semiring, self.config.ideal_cap)

    @cached_property
    def min_primes(self) -> List[IdealSet]:
        return minimal_primes(self.semiring, None, self.config.ideal_cap)

    @cached_property
    def nilpotent_free(self) -> bool:
        return nilpotent_analysis(self.semiring)[1]

    @cached_property
    def mult_idempotent(self) -> bool:
        return is_mult_idempotent(self.semiring)

    @cached_property
    def pc_functions(self) -> Tuple[List[PcFunction], bool]:
        pstar = self.analysis.pstar if self.analysis is not None else None
        return enumerate_pc_functions(self.semiring, self.config.pc_function_cap, pstar)

    @cached_property
    def mc_sets(self) -> Tuple[List[McSet], bool]:
        return enumerate_mc_sets(self.semiring, self.config.mc_set_cap)


Check = Callable[[VerificationContext], CheckOutcome]
CHECKS: Dict[TheoremId, Check] = {}


def check(family: str, clause: Optional[str] = None):
    def register(fn: Check) -> Check:
        CHECKS[TheoremId(family, clause)] = fn
        return fn
    return register


def scan(instances: Iterable[Tuple], holds: Callable[..., bool], names: Tuple[str, ...],
         note: Optional[str] = None) -> CheckOutcome:
    """Counts every instance and keeps the first one where `holds` is false as the witness."""
    count = 0
    witness = None
    for instance in instances:
        count += 1
        if witness is None and not holds(*instance):
            witness = dict(zip(names, instance))
    if count == 0:
        return CheckOutcome(False, 0, note=note or "no instance meets the clause hypotheses")
    return CheckOutcome(True, count, witness, note)


def equivalence(conditions: Dict[str, bool], **extra) -> CheckOutcome:
    if all_agree(conditions):
        return CheckOutcome(True, 1)
    return CheckOutcome(True, 1, {"conditions": conditions, **extra})


# pseudocomplement helpers over a context

def _pc(ctx: VerificationContext, s: Optional[int]) -> bool:
    return ctx.analysis.in_pcomp(s)


def _star(ctx: VerificationContext, s: int) -> int:
    return ctx.analysis.pstar[s]


def _double(ctx: VerificationContext, s: int) -> bool:
    """s and s* are pseudocomplemented."""
    return _pc(ctx, s) and _pc(ctx, _star(ctx, s))


def _triple(ctx: VerificationContext, s: int) -> bool:
    """s, s* and s** are pseudocomplemented."""
    return _double(ctx, s) and _pc(ctx, _star(ctx, _star(ctx, s)))


def _in(mask: int, e: Optional[int]) -> bool:
    return e is not None and bitset.contains(mask, e)


@check("PSEUDO1", "1")
def pseudo1_zero_star_is_top(ctx: VerificationContext) -> CheckOutcome:
    S, le = ctx.semiring, ctx.view.order.le
    if not _pc(ctx, S.zero):
        return unmet("0 has no pseudocomplement")
    top = _star(ctx, S.zero)
    return scan(((s,) for s in S.elements), lambda s: le(S.zero, s) and le(s, top), ("s",))


@check("PSEUDO1", "2")
def pseudo1_annihilated_by_star(ctx: VerificationContext) -> CheckOutcome:
    S = ctx.semiring

    def holds(s):
        p = _star(ctx, s)
        if S.mul[s][p] != S.zero:
            return False
        return not _pc(ctx, p) or S.mul[p][_star(ctx, p)] == S.zero
    return scan(((s,) for s in S.elements if _pc(ctx, s)), holds, ("s",))


@check("PSEUDO1", "3")
def pseudo1_annihilation_is_below_star(ctx: VerificationContext) -> CheckOutcome:
    S, le = ctx.semiring, ctx.view.order.le
    instances = ((s, t) for t in S.elements if _pc(ctx, t) for s in S.elements)
    return scan(instances, lambda s, t: (S.mul[s][t] == S.zero) == le(s, _star(ctx, t)), ("s", "t"))


@check("PSEUDO1", "4")
def pseudo1_below_double_star(ctx: VerificationContext) -> CheckOutcome:
    S, le = ctx.semiring, ctx.view.order.le
    return scan(((s,) for s in S.elements if _double(ctx, s)),
                lambda s: le(s, _star(ctx, _star(ctx, s))), ("s",))


@check("PSEUDO1", "5")
def pseudo1_triple_star(ctx: VerificationContext) -> CheckOutcome:
    S = ctx.semiring
    return scan(((s,) for s in S.elements if _triple(ctx, s)),
                lambda s: _star(ctx, _star(ctx, _star(ctx, s))) == _star(ctx, s), ("s",))


@check("PSEUDO1", "6")
def pseudo1_double_star_annihilators(ctx: VerificationContext) -> CheckOutcome:
    S = ctx.semiring
    instances = ((s, t) for s in S.elements if _double(ctx, s) for t in S.elements)

    def holds(s, t):
        ss = _star(ctx, _star(ctx, s))
        return (S.mul[s][t] == S.zero) == (S.mul[ss][t] == S.zero)
    return scan(instances, holds, ("s", "t"))


@check("PSEUDO1", "7")
def pseudo1_star_reverses_order(ctx: VerificationContext) -> CheckOutcome:
    S, le = ctx.semiring, ctx.view.order.le
    instances = ((s, t) for s in S.elements for t in S.elements
                 if _pc(ctx, s) and _pc(ctx, t) and le(s, t))
    return scan(instances, lambda s, t: le(_star(ctx, t), _star(ctx, s)), ("s", "t"))


@check("PSEUDO1", "8")
def pseudo1_skeleton_fixed_points(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    return scan(((s,) for s in S.elements if _double(ctx, s)),
                lambda s: _in(a.skel, s) == (_star(ctx, _star(ctx, s)) == s), ("s",))


def _pc_function_instances(ctx: VerificationContext, functions: Iterable[PcFunction]):
    S = ctx.semiring
    for pc in functions:
        for P in ctx.primes:
            yield pc, P, pc_prime_report(S, pc, P, ctx.config.ideal_cap, ctx.min_primes)


def _pc_function_witness(pc: PcFunction, P: IdealSet, report) -> Dict[str, Any]:
    return {"function": pc.name, "star": list(pc.star), "prime": P.to_list(), **report.to_dict()}


def _first_condition_implies_minimal(ctx: VerificationContext, functions: Iterable[PcFunction],
                                     note: Optional[str] = None) -> CheckOutcome:
    count = 0
    witness = None
    for pc, P, report in _pc_function_instances(ctx, functions):
        if not report.report.conditions["(1)"]:
            continue
        count += 1
        if witness is None and not (report.report.conditions["(2)"] and report.minimal):
            witness = _pc_function_witness(pc, P, report)
    if count == 0:
        return CheckOutcome(False, 0, note="no prime satisfies condition (1)")
    return CheckOutcome(True, count, witness, note)


@check("PCFN-MIN")
def pc_function_minimal_prime(ctx: VerificationContext) -> CheckOutcome:
    functions, exhaustive = ctx.pc_functions
    note = None if exhaustive else "representative pc-function family"
    return _first_condition_implies_minimal(ctx, functions, note)


@check("PCFN-MIN2")
def pc_function_three_conditions(ctx: VerificationContext) -> CheckOutcome:
    functions, exhaustive = ctx.pc_functions
    eligible = [pc for pc in functions if pc.axioms_hold]
    if not eligible:
        return unmet("no pc-function satisfies 0* = 1 and (s + s*)* = 0")
    count = 0
    witness = None
    for pc, P, report in _pc_function_instances(ctx, eligible):
        count += 1
        if witness is None and not report.report.equivalent:
            witness = _pc_function_witness(pc, P, report)
    return CheckOutcome(True, count, witness, None if exhaustive else "representative pc-function family")


@check("MINPRIME-PC")
def pseudocomplement_minimal_prime(ctx: VerificationContext) -> CheckOutcome:
    if not ctx.analysis.pseudocomplemented:
        return unmet("the semiring is not pseudocomplemented")
    try:
        pc = validate_pc_function(ctx.semiring, ctx.analysis.pstar, "pseudocomplement")
    except NotAnnihilating as e:
        return CheckOutcome(True, 1, {"s": e.witness, "law": "s s* = 0"})
    return _first_condition_implies_minimal(ctx, [pc])


@check("STONE1", "1")
def stone_star_idempotent(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    return scan(((s,) for s in bitset.members(a.stone)),
                lambda s: S.mul[_star(ctx, s)][_star(ctx, s)] == _star(ctx, s), ("s",))


@check("STONE1", "2")
def stone_square_below(ctx: VerificationContext) -> CheckOutcome:
    S, a, le = ctx.semiring, ctx.analysis, ctx.view.order.le
    return scan(((s,) for s in bitset.members(a.stone)), lambda s: le(S.mul[s][s], s), ("s",))


@check("STONE1", "3")
def stone_skeleton_idempotent(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    return scan(((s,) for s in bitset.members(a.stone & a.skel)), lambda s: S.mul[s][s] == s, ("s",))


def _simple_conditions(ctx: VerificationContext) -> Dict[str, bool]:
    S, a = ctx.semiring, ctx.analysis
    return {
        "1 in Stone": _in(a.stone, S.one),
        "0* = 1": _star(ctx, S.zero) == S.one,
        "1 greatest": ctx.view.order.is_greatest(S.one),
        "simple": is_simple(S),
    }


@check("SIMPLE")
def simple_equivalence(ctx: VerificationContext) -> CheckOutcome:
    if not _pc(ctx, ctx.semiring.zero):
        return unmet("0 has no pseudocomplement")
    return equivalence(_simple_conditions(ctx))


@check("BDL")
def bdl_equivalence(ctx: VerificationContext) -> CheckOutcome:
    if not ctx.mult_idempotent:
        return unmet("the semiring is not multiplicatively idempotent")
    if not _pc(ctx, ctx.semiring.zero):
        return unmet("0 has no pseudocomplement")
    conditions = _simple_conditions(ctx)
    conditions["bounded distributive lattice"] = is_bounded_distributive_lattice(ctx.semiring)
    return equivalence(conditions)


@check("PBDL")
def pbdl_equivalence(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    if not a.pseudocomplemented:
        return unmet("the semiring is not pseudocomplemented")
    return equivalence({
        "idempotent with 1 in Stone": ctx.mult_idempotent and _in(a.stone, S.one),
        "bounded distributive lattice": is_bounded_distributive_lattice(S),
    })


@check("STONE2")
def stone_semiring_equivalence(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    if not a.pseudocomplemented:
        return unmet("the semiring is not pseudocomplemented")
    star = a.pstar
    breaking = next(((s, t) for s in S.elements for t in S.elements
                     if star[S.mul[s][t]] != S.add[star[s]][star[t]]), None)
    conditions = {
        "Stone semiring": a.stone_semiring,
        "(st)* = s* + t* and 1 in Stone": breaking is None and _in(a.stone, S.one),
    }
    return equivalence(conditions, product_law_fails_at=breaking)


@check("SKEL1")
def skeleton_is_complemented_lattice(ctx: VerificationContext) -> CheckOutcome:
    a = ctx.analysis
    if not a.stone_semiring:
        return unmet("the semiring is not a Stone semiring")
    lattice = skeleton_lattice(ctx.view, a)
    witness = None
    if lattice.violation is not None:
        law, elements = lattice.violation
        witness = {"law": law, "elements": list(elements)}
    return CheckOutcome(True, len(lattice.elements), witness)


@check("SKEL-BOOL")
def skeleton_boolean_iff_stone(ctx: VerificationContext) -> CheckOutcome:
    a = ctx.analysis
    if not a.pseudocomplemented:
        return unmet("the semiring is not pseudocomplemented")
    boolean, violation = skeleton_boolean_check(ctx.view, a)
    return equivalence({"skeleton boolean": boolean, "Stone semiring": a.stone_semiring},
                       failed_law=None if violation is None else [violation[0], list(violation[1])])


def _idempotent_gate(ctx: VerificationContext) -> Optional[CheckOutcome]:
    if not ctx.mult_idempotent:
        return unmet("the semiring is not multiplicatively idempotent")
    return None


def _pairs(ctx: VerificationContext, keep: Callable[[int], bool]):
    members = [s for s in ctx.semiring.elements if keep(s)]
    return ((s, t) for s in members for t in members)


@check("MI", "1")
def mi_sum_star(ctx: VerificationContext) -> CheckOutcome:
    S = ctx.semiring
    gate = _idempotent_gate(ctx)
    if gate:
        return gate

    def holds(s, t):
        u = S.add[s][t]
        return _pc(ctx, u) and _star(ctx, u) == S.mul[_star(ctx, s)][_star(ctx, t)]
    return scan(_pairs(ctx, lambda s: _pc(ctx, s)), holds, ("s", "t"))


@check("MI", "2")
def mi_star_of_sum_with_star(ctx: VerificationContext) -> CheckOutcome:
    S = ctx.semiring
    gate = _idempotent_gate(ctx)
    if gate:
        return gate

    def holds(s):
        u = S.add[s][_star(ctx, s)]
        return _pc(ctx, u) and _star(ctx, u) == S.zero
    return scan(((s,) for s in S.elements if _double(ctx, s)), holds, ("s",))


@check("MI", "3")
def mi_double_star_sum(ctx: VerificationContext) -> CheckOutcome:
    S = ctx.semiring
    gate = _idempotent_gate(ctx)
    if gate:
        return gate

    def holds(s, t):
        u = S.add[_star(ctx, _star(ctx, s))][_star(ctx, _star(ctx, t))]
        v = S.add[s][t]
        return _pc(ctx, u) and _pc(ctx, v) and _star(ctx, u) == _star(ctx, v)
    return scan(_pairs(ctx, lambda s: _triple(ctx, s)), holds, ("s", "t"))


@check("MI", "4")
def mi_skeleton_closed_under_product(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    gate = _idempotent_gate(ctx)
    if gate:
        return gate
    return scan(_pairs(ctx, lambda s: _in(a.skel, s)), lambda s, t: _in(a.skel, S.mul[s][t]), ("s", "t"))


@check("DENSE1", "1")
def dense_contains_one(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    return scan([(S.one,)], lambda s: _in(a.dense, s), ("s",))


@check("DENSE1", "2")
def dense_upward_closed(ctx: VerificationContext) -> CheckOutcome:
    S, a, le = ctx.semiring, ctx.analysis, ctx.view.order.le
    instances = ((s, t) for s in bitset.members(a.dense) for t in S.elements if _pc(ctx, t) and le(s, t))
    return scan(instances, lambda s, t: _in(a.dense, t), ("s", "t"))


@check("DENSE1", "a")
def dense_absorbs_sums(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    gate = _idempotent_gate(ctx)
    if gate:
        return gate
    instances = ((s, t) for s in S.elements if _pc(ctx, s) for t in bitset.members(a.dense))
    return scan(instances, lambda s, t: _in(a.dense, S.add[s][t]), ("s", "t"))


@check("DENSE1", "b")
def dense_sum_with_star(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    gate = _idempotent_gate(ctx)
    if gate:
        return gate
    return scan(((s,) for s in S.elements if _double(ctx, s)),
                lambda s: _in(a.dense, S.add[s][_star(ctx, s)]), ("s",))


@check("DENSE1", "c")
def dense_double_star_sum(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    gate = _idempotent_gate(ctx)
    if gate:
        return gate

    def holds(s, t):
        u = S.add[_star(ctx, _star(ctx, s))][_star(ctx, _star(ctx, t))]
        return _in(a.dense, u) == _in(a.dense, S.add[s][t])
    return scan(_pairs(ctx, lambda s: _triple(ctx, s)), holds, ("s", "t"))


@check("MAX-PRIME")
def maximal_disjoint_ideals_are_prime(ctx: VerificationContext) -> CheckOutcome:
    S = ctx.semiring
    mc_sets, truncated = ctx.mc_sets
    zero = zero_ideal(S)
    instances = ((W.elements(), J.to_list()) for W in mc_sets if S.zero not in W
                 for J in maximal_disjoint_ideals(S, W, zero, ctx.config.ideal_cap))
    return scan(instances, lambda W, J: is_prime_ideal(S, IdealSet(bitset.to_mask(J))), ("mc_set", "ideal"),
                note=f"MC-set enumeration truncated at {ctx.config.mc_set_cap}" if truncated else None)


def _radical_mismatch(ctx: VerificationContext, which: int) -> CheckOutcome:
    S = ctx.semiring
    count = 0
    witness = None
    for I in ctx.ideals:
        views = radical_views(S, I, ctx.config.ideal_cap)
        count += 1
        if witness is None and views[0] != views[which]:
            witness = {"ideal": I.to_list(), "radical": views[0].to_list(), "intersection": views[which].to_list()}
    return CheckOutcome(True, count, witness)


@check("KRULL-RAD")
def radical_is_intersection_of_primes(ctx: VerificationContext) -> CheckOutcome:
    return _radical_mismatch(ctx, 1)


@check("KRULL-MIN")
def radical_is_intersection_of_minimal_primes(ctx: VerificationContext) -> CheckOutcome:
    outcome = _radical_mismatch(ctx, 2)
    S = ctx.semiring
    if outcome.witness is None and is_entire(S) and ctx.min_primes != [zero_ideal(S)]:
        return CheckOutcome(True, outcome.instances + 1,
                            {"entire": True, "minimal_primes": [P.to_list() for P in ctx.min_primes]})
    return outcome


@check("HUCKABA")
def huckaba_equivalence(ctx: VerificationContext) -> CheckOutcome:
    S = ctx.semiring
    count = 0
    witness = None
    for P in ctx.primes:
        for I in ctx.ideals:
            if not I.issubset(P):
                continue
            count += 1
            report = huckaba_criteria(S, I, P, ctx.config.ideal_cap)
            if witness is None and not report.equivalent:
                witness = {"ideal": I.to_list(), "prime": P.to_list(), **report.to_dict()}
    return CheckOutcome(True, count, witness)


def _nilpotent_gate(ctx: VerificationContext) -> Optional[CheckOutcome]:
    if not ctx.nilpotent_free:
        return unmet("the semiring has nonzero nilpotents")
    return None


@check("HUCKABA2")
def huckaba_nilpotent_free(ctx: VerificationContext) -> CheckOutcome:
    gate = _nilpotent_gate(ctx)
    if gate:
        return gate
    count = 0
    witness = None
    for P in ctx.primes:
        count += 1
        report = huckaba2_check(ctx.semiring, P, ctx.config.ideal_cap)
        if witness is None and not report.equivalent:
            witness = {"prime": P.to_list(), **report.to_dict()}
    return CheckOutcome(True, count, witness)


@check("HUCKABA3")
def huckaba_annihilator(ctx: VerificationContext) -> CheckOutcome:
    gate = _nilpotent_gate(ctx)
    if gate:
        return gate
    count = 0
    witness = None
    for J in ctx.ideals:
        count += 1
        report = huckaba3_check(ctx.semiring, J.elements(), ctx.config.ideal_cap)
        if witness is None and not report.equivalent:
            witness = {"generators": J.to_list(), **report.to_dict()}
    return CheckOutcome(True, count, witness)


@check("ZDIV")
def zero_divisors_are_minimal_prime_union(ctx: VerificationContext) -> CheckOutcome:
    gate = _nilpotent_gate(ctx)
    if gate:
        return gate
    union = 0
    for P in ctx.min_primes:
        union |= P.members
    zd = zero_divisors(ctx.semiring)
    if union == zd:
        return CheckOutcome(True, 1)
    return CheckOutcome(True, 1, {"zero_divisors": bitset.members(zd), "minimal_prime_union": bitset.members(union)})


@check("MIN-PBDL")
def minimal_primes_of_pseudocomplemented_lattices(ctx: VerificationContext) -> CheckOutcome:
    S, a = ctx.semiring, ctx.analysis
    if not (ctx.mult_idempotent and a.pseudocomplemented and _in(a.stone, S.one)):
        return unmet("needs a multiplicatively idempotent pseudocomplemented semiring with 1 in Stone")
    count = 0
    witness = None
    for P in ctx.primes:
        count += 1
        report = minimalpbdl_report(ctx.view, P, a, ctx.config.ideal_cap)
        if witness is None and not report.equivalent:
            witness = {"prime": P.to_list(), **report.to_dict()}
    return CheckOutcome(True, count, witness)


@check("IDSEMIRING")
def ideal_semiring_is_pseudocomplemented(ctx: VerificationContext) -> CheckOutcome:
    try:
        id_s = build_ideal_semiring(ctx.semiring, ctx.config.ideal_cap)
    except CapacityExceeded as e:
        return unmet(str(e))
    witness = {"failures": list(id_s.failures)} if id_s.failures else None
    return CheckOutcome(True, id_s.semiring.order_n, witness)
