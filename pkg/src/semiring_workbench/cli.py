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
"""Command-line entry point: `semiring-workbench <command> ...`."""
import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from semiring_workbench.core.constructions.enumerator import enumerate_semirings
from semiring_workbench.core.constructions.families import Family, GeneratorSpec, build_single
from semiring_workbench.core.exceptions import AxiomViolationError, WorkbenchError
from semiring_workbench.core.harness.catalog import CATALOG, TheoremId, parse_theorem_ids
from semiring_workbench.core.harness.checks import VerificationContext
from semiring_workbench.core.harness.corpus import CORPUS_PRESETS, CorpusRunner
from semiring_workbench.core.harness.verifier import TheoremResult, verify
from semiring_workbench.core.ideals.criteria import huckaba_criteria
from semiring_workbench.core.ideals.ideal_ops import annihilator_ideal, enumerate_ideals, ideal_generated
from semiring_workbench.core.ideals.ideal_semiring import ideal_semiring_example_check
from semiring_workbench.core.ideals.spectrum import enumerate_primes, nilpotent_analysis, spectrum_report
from semiring_workbench.core.input_adapters.semiring_adapter import (
    JSONSemiringAdapter,
    dump_semiring,
    load_pc_function,
    semiring_to_document,
)
from semiring_workbench.core.pc.analysis import pc_analysis
from semiring_workbench.core.pc.pc_function import pc_prime_report, validate_pc_function
from semiring_workbench.core.structures.order import OrderedView, default_view
from semiring_workbench.core.structures.semiring import (
    FiniteSemiring,
    is_add_idempotent,
    is_bounded_distributive_lattice,
    is_complemented,
    is_entire,
    is_mult_idempotent,
    is_simple,
)
from semiring_workbench.core.workbench_constants import (
    DEFAULT_IDEAL_CAP,
    DEFAULT_ORACLE_SAMPLES,
    DEFAULT_ORDER_CAP,
    WorkbenchConfig,
)
from semiring_workbench.util import bitset
from semiring_workbench.util.logging_utils import disable_logging, set_log_level
from semiring_workbench.util.report_templates import (
    ANALYSIS_TEMPLATE,
    IDEALS_TEMPLATE,
    SPECTRUM_TEMPLATE,
    THEOREMS_TEMPLATE,
    VALIDATION_TEMPLATE,
    render,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_THEOREM_FAILURE = 1
EXIT_INPUT_ERROR = 2

COMMANDS = ("validate", "analyze", "ideals", "primes", "verify", "generate", "corpus")
REPORTS_FILE = "corpus_reports.jsonl"
ORACLES_FILE = "oracle_reports.jsonl"
INDEX_FILE = "index.json"


@dataclass(frozen=True)
class CliConfig:
    command: str
    inputs: List[Path] = field(default_factory=list)
    output_format: str = "text"
    out: Optional[Path] = None
    theorems: Sequence[TheoremId] = CATALOG
    workbench: WorkbenchConfig = field(default_factory=WorkbenchConfig)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'CliConfig':
        theorems = CATALOG
        if getattr(args, "theorems", None):
            theorems = tuple(parse_theorem_ids(args.theorems))
        inputs = [Path(p) for p in getattr(args, "files", None) or []]
        return cls(
            command=args.command,
            inputs=inputs,
            output_format=args.format,
            out=Path(args.out) if args.out else None,
            theorems=theorems,
            workbench=WorkbenchConfig(ideal_cap=args.ideal_cap, order_cap=args.order_cap, jobs=args.jobs),
        )


def _positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected integer, got: {value!r}") from e
    if n <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got: {n}")
    return n


def _element_list(value: str) -> List[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated element indices, got: {value!r}") from e


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="report format on stdout")
    common.add_argument("--ideal-cap", type=_positive_int, default=DEFAULT_IDEAL_CAP,
                        help="largest semiring order for ideal enumeration")
    common.add_argument("--order-cap", type=_positive_int, default=DEFAULT_ORDER_CAP,
                        help="largest order for exhaustive enumeration")
    common.add_argument("--jobs", type=_positive_int, default=1, help="worker processes for corpus runs")
    common.add_argument("--out", help="output file or directory")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--quiet", action="store_true", help="silence log output")
    verbosity.add_argument("--verbose", action="store_true", help="debug log output")

    parser = argparse.ArgumentParser(
        prog="semiring-workbench",
        description="Finite commutative semiring workbench: validation, pseudocomplements, "
                    "ideals and theorem checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("validate", parents=[common], help="check the semiring axioms of JSON files")
    p.add_argument("files", nargs="+")

    p = sub.add_parser("analyze", parents=[common], help="predicates and pseudocomplement analysis")
    p.add_argument("files", nargs="+")
    p.add_argument("--pc-function", help='pc-function file {"star": [...]} to evaluate on every prime')

    p = sub.add_parser("ideals", parents=[common], help="enumerate ideals")
    p.add_argument("files", nargs="*")
    p.add_argument("--generators", type=_element_list, help="report the ideal generated by these elements")
    p.add_argument("--example", type=_positive_int, metavar="N",
                   help="check a + bc against (a + b)(a + c) in Id(Z_{N^3})")

    p = sub.add_parser("primes", parents=[common], help="prime spectrum and minimal primes")
    p.add_argument("files", nargs="+")
    p.add_argument("--ideal", type=_element_list, help="generators of I for V(I) and Min(I)")
    p.add_argument("--criteria", action="store_true", help="evaluate the minimal-prime criteria on V(I)")

    p = sub.add_parser("verify", parents=[common], help="check catalog statements on JSON files")
    p.add_argument("files", nargs="+")
    p.add_argument("--theorems", nargs="+", help="catalog ids, e.g. PSEUDO1.5 DENSE1 HUCKABA")
    p.add_argument("--all", action="store_true", help="the whole catalog (default)")

    p = sub.add_parser("generate", parents=[common], help="write family members as JSON files")
    p.add_argument("family", choices=[f.value for f in Family if f is not Family.PRODUCT])
    p.add_argument("parameters", nargs="*", type=int)

    p = sub.add_parser("corpus", parents=[common], help="check the catalog over a corpus preset")
    p.add_argument("--preset", choices=sorted(CORPUS_PRESETS), default="default")
    p.add_argument("--theorems", nargs="+", help="catalog ids, e.g. PSEUDO1.5 DENSE1 HUCKABA")
    p.add_argument("--oracles", action="store_true", help="also run the oracle cross-checks")
    p.add_argument("--samples", type=_positive_int, default=DEFAULT_ORACLE_SAMPLES,
                   help="random generator sets per member for the annihilator oracle")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit(config: CliConfig, document: Any, template: Optional[str] = None, **context):
    if config.output_format == "json" or template is None:
        sys.stdout.write(json.dumps(document, sort_keys=True) + "\n")
    else:
        sys.stdout.write(render(template, **context))


def _load(path: Path) -> JSONSemiringAdapter:
    return JSONSemiringAdapter().adapt(path)


def _validate(config: CliConfig, args: argparse.Namespace) -> int:
    status = EXIT_OK
    for path in config.inputs:
        try:
            S = _load(path).fetch()
        except AxiomViolationError as e:
            violations = [v.to_dict() for v in e.violations]
            _emit(config, {"file": str(path), "valid": False, "violations": violations},
                  VALIDATION_TEMPLATE, violations=violations, n=None, zero=None, one=None)
            status = EXIT_INPUT_ERROR
            continue
        _emit(config, {"file": str(path), "valid": True, "n": S.order_n},
              VALIDATION_TEMPLATE, violations=[], n=S.order_n, zero=S.label(S.zero), one=S.label(S.one))
    return status


def _predicates(V: OrderedView) -> Dict[str, bool]:
    S = V.semiring
    predicates = {
        "simple": is_simple(S),
        "entire": is_entire(S),
        "additively idempotent": is_add_idempotent(S),
        "multiplicatively idempotent": is_mult_idempotent(S),
        "bounded distributive lattice": is_bounded_distributive_lattice(S),
        "complemented": is_complemented(S),
        "nilpotent-free": nilpotent_analysis(S)[1],
        "positive": V.positive,
    }
    if V.positive:
        analysis = pc_analysis(V)
        predicates["pseudocomplemented"] = analysis.pseudocomplemented
        predicates["Stone semiring"] = analysis.stone_semiring
    return predicates


def _analyze(config: CliConfig, args: argparse.Namespace) -> int:
    for path in config.inputs:
        adapter = _load(path)
        V = adapter.view()
        S = V.semiring
        predicates = _predicates(V)
        document: Dict[str, Any] = {
            "file": str(path),
            "n": S.order_n,
            "order": V.order.source.value,
            "predicates": predicates,
            "pc": None,
        }
        rows = []
        if V.positive:
            analysis = pc_analysis(V)
            document["pc"] = analysis.to_dict()
            for s in S.elements:
                p = analysis.pstar[s]
                flags = [name for name, mask in (("skel", analysis.skel), ("stone", analysis.stone),
                                                 ("dense", analysis.dense)) if bitset.contains(mask, s)]
                rows.append({"label": S.label(s), "star": "-" if p is None else S.label(p), "flags": flags})
        if args.pc_function:
            document["pc_function"] = _pc_function_document(S, args.pc_function, config)
        _emit(config, document, ANALYSIS_TEMPLATE, n=S.order_n, order_source=V.order.source.value,
              positive=V.positive, predicates=list(predicates.items()), rows=rows)
        if args.pc_function and config.output_format == "text":
            sys.stdout.write(json.dumps(document["pc_function"], sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _pc_function_document(S: FiniteSemiring, path: str, config: CliConfig) -> Dict[str, Any]:
    pc = validate_pc_function(S, load_pc_function(path, S.order_n), Path(path).name)
    primes = enumerate_primes(S, config.workbench.ideal_cap)
    return {
        "star": list(pc.star),
        "zero_axiom": pc.zero_axiom,
        "sum_axiom": pc.sum_axiom,
        "primes": [pc_prime_report(S, pc, P, config.workbench.ideal_cap).to_dict() for P in primes],
    }


def _ideals(config: CliConfig, args: argparse.Namespace) -> int:
    if args.example:
        report = ideal_semiring_example_check(args.example)
        sys.stdout.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
        if not report.holds:
            return EXIT_THEOREM_FAILURE
    for path in config.inputs:
        S = _load(path).fetch()
        ideals = enumerate_ideals(S, config.workbench.ideal_cap)
        document: Dict[str, Any] = {"file": str(path), "ideals": [I.to_list() for I in ideals]}
        if args.generators is not None:
            J = ideal_generated(S, args.generators)
            document["generated"] = J.to_list()
            document["annihilator"] = annihilator_ideal(S, J.elements()).to_list()
        _emit(config, document, IDEALS_TEMPLATE,
              ideals=[[S.label(e) for e in I.elements()] for I in ideals])
        if args.generators is not None and config.output_format == "text":
            sys.stdout.write(f"generated: {document['generated']}  annihilator: {document['annihilator']}\n")
    return EXIT_OK


def _primes(config: CliConfig, args: argparse.Namespace) -> int:
    status = EXIT_OK
    for path in config.inputs:
        S = _load(path).fetch()
        I = ideal_generated(S, args.ideal or [])
        report = spectrum_report(S, I, config.workbench.ideal_cap)
        document = {"file": str(path), **report.to_dict()}
        if args.criteria:
            criteria = [huckaba_criteria(S, I, P, config.workbench.ideal_cap) for P in report.v_of_i]
            document["criteria"] = [c.to_dict() for c in criteria]
            if not all(c.equivalent for c in criteria):
                status = EXIT_THEOREM_FAILURE

        def labelled(ideals):
            return [[S.label(e) for e in P.elements()] for P in ideals]
        _emit(config, document, SPECTRUM_TEMPLATE,
              primes=labelled(report.primes), minimal=labelled(report.minimal),
              nilradical=[S.label(e) for e in report.nilradical.elements()],
              nilpotent_free=report.nilpotent_free,
              zero_divisors=[S.label(e) for e in bitset.members(report.zero_divisors)],
              readings_diverge=report.readings_diverge, intro_minimal=labelled(report.intro_minimal),
              height_one=None if report.height_one is None else labelled(report.height_one))
        if args.criteria and config.output_format == "text":
            sys.stdout.write(json.dumps(document["criteria"], sort_keys=True, indent=2) + "\n")
    return status


def _verify(config: CliConfig, args: argparse.Namespace) -> int:
    status = EXIT_OK
    for path in config.inputs:
        V = _load(path).view()
        context = VerificationContext(V, config.workbench)
        reports = [verify(V, t, path.name, config=config.workbench, context=context) for t in config.theorems]
        documents = [r.to_dict() for r in reports]
        if config.output_format == "json":
            for document in documents:
                sys.stdout.write(json.dumps(document, sort_keys=True) + "\n")
        else:
            sys.stdout.write(render(THEOREMS_TEMPLATE, reports=[
                {**d, "theorem": str(r.theorem)} for d, r in zip(documents, reports)]))
        if any(r.result is TheoremResult.FAIL for r in reports):
            status = EXIT_THEOREM_FAILURE
    return status


def _generate(config: CliConfig, args: argparse.Namespace) -> int:
    family = Family(args.family)
    if family is Family.EXHAUSTIVE:
        if len(args.parameters) != 1:
            raise WorkbenchError("exhaustive generation takes exactly one order")
        if config.out is None:
            raise WorkbenchError("exhaustive generation needs --out DIR")
        return _generate_exhaustive(config, args.parameters[0])
    spec = GeneratorSpec(family, tuple(args.parameters))
    S = build_single(spec)
    V = default_view(S)
    order = V.order if V.positive else None
    if config.out is None:
        sys.stdout.write(json.dumps(semiring_to_document(S, order)) + "\n")
    else:
        target = config.out / f"{family.value}_{'_'.join(str(p) for p in args.parameters) or 'default'}.json"
        dump_semiring(target, S, order)
        logger.info(f"Wrote {spec.name} to {target}")
    return EXIT_OK


def _generate_exhaustive(config: CliConfig, order: int) -> int:
    index = []
    for i, S in enumerate(enumerate_semirings(order, order_cap=config.workbench.order_cap)):
        V = default_view(S)
        name = f"{i:04d}.json"
        dump_semiring(config.out / name, S, V.order if V.positive else None)
        index.append({"file": name, "n": S.order_n, "predicates": _predicates(V)})
    index_path = config.out / INDEX_FILE
    index_path.parent.mkdir(parents=True, exist_ok=True)
    with index_path.open("w", encoding="utf-8") as f:
        json.dump(index, f, sort_keys=True, indent=2)
        f.write("\n")
    logger.info(f"Wrote {len(index)} semirings of order {order} to {config.out}")
    return EXIT_OK


def _corpus(config: CliConfig, args: argparse.Namespace) -> int:
    runner = CorpusRunner(CORPUS_PRESETS[args.preset], config.theorems, config.workbench,
                          show_progress=not args.quiet)
    runner.run()
    if args.oracles:
        runner.run_oracles(args.samples, args.seed)
    if config.out is not None:
        runner.save(str(config.out / REPORTS_FILE))
        if runner.oracle_reports:
            with (config.out / ORACLES_FILE).open("w", encoding="utf-8") as f:
                for o in runner.oracle_reports:
                    f.write(json.dumps(o.to_dict(), sort_keys=True) + "\n")
    if config.output_format == "json":
        _emit(config, runner.summary())
    else:
        sys.stdout.write(runner.render_text())
    return EXIT_THEOREM_FAILURE if runner.failed else EXIT_OK


_HANDLERS = {
    "validate": _validate,
    "analyze": _analyze,
    "ideals": _ideals,
    "primes": _primes,
    "verify": _verify,
    "generate": _generate,
    "corpus": _corpus,
}


def run(config: CliConfig, args: argparse.Namespace) -> int:
    return _HANDLERS[config.command](config, args)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.quiet:
        disable_logging()
    elif args.verbose:
        set_log_level("semiring_workbench", logging.DEBUG)
    try:
        config = CliConfig.from_args(args)
        return run(config, args)
    except (WorkbenchError, ValueError) as e:
        logger.error(str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
