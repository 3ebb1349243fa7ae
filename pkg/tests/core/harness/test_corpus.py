import json
import tempfile
import time
import unittest
from pathlib import Path

from semiring_workbench.core.constructions.families import Family, GeneratorSpec
from semiring_workbench.core.exceptions import CapacityExceeded
from semiring_workbench.core.harness.catalog import TheoremId
from semiring_workbench.core.harness.corpus import CORPUS_PRESETS, CorpusRunner, expand_specs
from semiring_workbench.core.harness.verifier import TheoremResult
from semiring_workbench.core.workbench_constants import WorkbenchConfig


class TestExpandSpecs(unittest.TestCase):
    def test_exhaustive_members_are_named_by_index(self):
        members = expand_specs([GeneratorSpec(Family.EXHAUSTIVE, (2,)), GeneratorSpec(Family.CHAIN, (3,))])
        self.assertEqual([m.name for m in members], ["enum(2)#0", "enum(2)#1", "chain(3)"])

    def test_order_cap(self):
        with self.assertRaises(CapacityExceeded):
            expand_specs([GeneratorSpec(Family.EXHAUSTIVE, (4,))], WorkbenchConfig(order_cap=3))

    def test_products_stay_within_order_sixteen(self):
        members = expand_specs([s for s in CORPUS_PRESETS["default"] if s.family is Family.PRODUCT])
        self.assertTrue(members)
        self.assertTrue(all(m.view.semiring.order_n <= 16 for m in members))


class TestCorpusRunner(unittest.TestCase):
    def test_empty_corpus(self):
        runner = CorpusRunner([], show_progress=False)
        self.assertEqual(runner.run(), [])
        self.assertFalse(runner.failed)
        self.assertEqual(runner.summary()["total"], 0)

    def test_diamond_skeleton_is_skipped(self):
        runner = CorpusRunner([GeneratorSpec(Family.STACKED_DIAMOND)], [TheoremId("SKEL1")], show_progress=False)
        reports = runner.run()
        self.assertEqual(len(reports), 1)
        self.assertEqual(reports[0].result, TheoremResult.SKIPPED)
        self.assertEqual(runner.summary()["rows"], [{"theorem": "SKEL1", "passed": 0, "failed": 0, "skipped": 1}])

    def test_smoke_preset_passes(self):
        runner = CorpusRunner(CORPUS_PRESETS["smoke"], show_progress=False)
        runner.run()
        self.assertFalse(runner.failed, runner.summary()["failures"])
        self.assertIn("Total:", runner.render_text())

    def test_full_default_corpus_has_no_failures(self):
        started = time.perf_counter()
        runner = CorpusRunner(CORPUS_PRESETS["default"], show_progress=False)
        runner.run()
        summary = runner.summary()
        self.assertEqual(summary["failed"], 0, summary["failures"][:3])
        self.assertGreater(summary["passed"], 0)
        self.assertGreater(summary["skipped"], 0)
        self.assertLess(time.perf_counter() - started, 120)

    def test_reports_are_byte_identical_across_runs(self):
        with tempfile.TemporaryDirectory() as tmp:
            outputs = []
            for i, jobs in enumerate((1, 2)):
                runner = CorpusRunner(CORPUS_PRESETS["smoke"], config=WorkbenchConfig(jobs=jobs), show_progress=False)
                runner.run()
                path = Path(tmp) / f"run{i}" / "reports.jsonl"
                runner.save(str(path))
                outputs.append(path.read_bytes())
        self.assertEqual(outputs[0], outputs[1])
        first = json.loads(outputs[0].decode("utf-8").splitlines()[0])
        self.assertEqual(sorted(first), ["clause", "hypotheses_met", "instances", "note", "result", "semiring",
                                         "theorem", "witness"])

    def test_oracles(self):
        runner = CorpusRunner(CORPUS_PRESETS["smoke"], show_progress=False)
        oracle_reports = runner.run_oracles(samples=20, seed=7)
        self.assertEqual(len(oracle_reports), len(runner.members))
        self.assertTrue(all(o.passed for o in oracle_reports))
        self.assertFalse(runner.failed)


if __name__ == '__main__':
    unittest.main()
