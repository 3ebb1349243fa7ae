import io
import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from semiring_workbench.cli import CliConfig, build_parser, main
from semiring_workbench.core.constructions.families import chain_lattice, ideal_semiring_of_Zm, ring_Zm
from semiring_workbench.core.harness.catalog import CATALOG
from semiring_workbench.core.input_adapters.semiring_adapter import JSONSemiringAdapter, dump_semiring
from semiring_workbench.core.structures.order import natural_order


def run_cli(*argv):
    with patch("sys.stdout", new_callable=io.StringIO) as out, patch("sys.stderr", new_callable=io.StringIO):
        status = main(list(argv))
    return status, out.getvalue()


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)
        self.chain = self.dir / "chain3.json"
        dump_semiring(self.chain, chain_lattice(3))
        self.z8 = self.dir / "idz8.json"
        dump_semiring(self.z8, ideal_semiring_of_Zm(8))
        self.z6 = self.dir / "z6.json"
        dump_semiring(self.z6, ring_Zm(6))
        self.broken = self.dir / "broken.json"
        self.broken.write_text(json.dumps({"n": 2, "zero": 0, "one": 1, "add": [[0, 1], [1, 1]],
                                           "mul": [[0, 1], [0, 1]]}), encoding="utf-8")

    def tearDown(self):
        self.tmp.cleanup()

    def test_config_from_args(self):
        args = build_parser().parse_args(["verify", str(self.chain), "--theorems", "PSEUDO1.5", "--jobs", "2"])
        config = CliConfig.from_args(args)
        self.assertEqual(config.command, "verify")
        self.assertEqual([str(t) for t in config.theorems], ["PSEUDO1.5"])
        self.assertEqual(config.workbench.jobs, 2)
        self.assertEqual(config.inputs, [self.chain])

    def test_caps_must_be_positive(self):
        with self.assertRaises(SystemExit) as ctx, patch("sys.stderr", new_callable=io.StringIO):
            build_parser().parse_args(["validate", str(self.chain), "--ideal-cap", "0"])
        self.assertEqual(ctx.exception.code, 2)

    def test_validate(self):
        status, out = run_cli("validate", str(self.chain), "--quiet")
        self.assertEqual(status, 0)
        self.assertIn("Valid semiring of order 3", out)

    def test_validate_mutated_table(self):
        status, out = run_cli("validate", str(self.broken), "--format", "json", "--quiet")
        self.assertEqual(status, 2)
        document = json.loads(out)
        self.assertFalse(document["valid"])
        self.assertIn("absorbing-zero", [v["axiom"] for v in document["violations"]])

    def test_unreadable_file_exits_two(self):
        status, _ = run_cli("analyze", str(self.dir / "missing.json"), "--quiet")
        self.assertEqual(status, 2)

    def test_analyze_ideal_semiring_of_z8(self):
        status, out = run_cli("analyze", str(self.z8), "--format", "json", "--quiet")
        self.assertEqual(status, 0)
        predicates = json.loads(out)["predicates"]
        self.assertTrue(predicates["positive"])
        self.assertTrue(predicates["pseudocomplemented"])
        self.assertFalse(predicates["multiplicatively idempotent"])
        self.assertFalse(predicates["nilpotent-free"])

    def test_analyze_text(self):
        status, out = run_cli("analyze", str(self.z8), "--quiet")
        self.assertEqual(status, 0)
        self.assertIn("Pseudocomplements:", out)
        self.assertIn("s* = (2)", out)

    def test_analyze_with_pc_function(self):
        pc = self.dir / "pc.json"
        pc.write_text(json.dumps({"star": [3, 2, 1, 0]}), encoding="utf-8")
        status, out = run_cli("analyze", str(self.z8), "--pc-function", str(pc), "--format", "json", "--quiet")
        self.assertEqual(status, 0)
        document = json.loads(out)["pc_function"]
        self.assertTrue(document["zero_axiom"])
        self.assertFalse(document["sum_axiom"])
        self.assertEqual(len(document["primes"]), 1)

    def test_ideals_with_generators(self):
        status, out = run_cli("ideals", str(self.z6), "--generators", "2", "--format", "json", "--quiet")
        self.assertEqual(status, 0)
        document = json.loads(out)
        self.assertEqual(document["generated"], [0, 2, 4])
        self.assertEqual(document["annihilator"], [0, 3])
        self.assertEqual(len(document["ideals"]), 4)

    def test_ideals_example(self):
        status, out = run_cli("ideals", "--example", "2", "--quiet")
        self.assertEqual(status, 0)
        document = json.loads(out)
        self.assertEqual((document["a+bc"], document["(a+b)(a+c)"]), ("(2)", "(4)"))

    def test_primes_with_criteria(self):
        status, out = run_cli("primes", str(self.z6), "--criteria", "--format", "json", "--quiet")
        self.assertEqual(status, 0)
        document = json.loads(out)
        self.assertEqual(document["minimal_primes"], [[0, 3], [0, 2, 4]])
        self.assertTrue(all(c["equivalent"] for c in document["criteria"]))

    def test_verify_all_on_chain(self):
        status, out = run_cli("verify", str(self.chain), "--all", "--format", "json", "--quiet")
        self.assertEqual(status, 0)
        lines = [json.loads(line) for line in out.splitlines()]
        self.assertEqual(len(lines), len(CATALOG))
        self.assertNotIn("fail", {line["result"] for line in lines})

    def test_verify_selected_text(self):
        status, out = run_cli("verify", str(self.chain), "--theorems", "PSEUDO1.5", "--quiet")
        self.assertEqual(status, 0)
        self.assertTrue(out.startswith("PSEUDO1.5"))

    def test_unknown_theorem_exits_two(self):
        status, _ = run_cli("verify", str(self.chain), "--theorems", "NOPE", "--quiet")
        self.assertEqual(status, 2)

    def test_generate_round_trip(self):
        out_dir = self.dir / "generated"
        status, _ = run_cli("generate", "ideal_semiring_of_Zm", "8", "--out", str(out_dir), "--quiet")
        self.assertEqual(status, 0)
        adapter = JSONSemiringAdapter().adapt(out_dir / "ideal_semiring_of_Zm_8.json")
        self.assertEqual(adapter.fetch(), ideal_semiring_of_Zm(8))
        self.assertEqual(adapter.order.leq, natural_order(ideal_semiring_of_Zm(8)).leq)

    def test_generate_to_stdout(self):
        status, out = run_cli("generate", "chain", "3", "--quiet")
        self.assertEqual(status, 0)
        self.assertEqual(JSONSemiringAdapter().adapt(json.loads(out)).fetch(), chain_lattice(3))

    def test_generate_exhaustive(self):
        out_dir = self.dir / "enum"
        status, _ = run_cli("generate", "exhaustive", "2", "--out", str(out_dir), "--quiet")
        self.assertEqual(status, 0)
        index = json.loads((out_dir / "index.json").read_text(encoding="utf-8"))
        self.assertEqual([entry["file"] for entry in index], ["0000.json", "0001.json"])
        for entry in index:
            JSONSemiringAdapter().adapt(out_dir / entry["file"])

    def test_generate_exhaustive_needs_out(self):
        status, _ = run_cli("generate", "exhaustive", "2", "--quiet")
        self.assertEqual(status, 2)

    def test_generate_over_order_cap(self):
        status, _ = run_cli("generate", "exhaustive", "5", "--out", str(self.dir / "e5"), "--quiet")
        self.assertEqual(status, 2)

    def test_corpus_smoke(self):
        out_dir = self.dir / "corpus"
        status, out = run_cli("corpus", "--preset", "smoke", "--oracles", "--samples", "10",
                              "--out", str(out_dir), "--format", "json", "--quiet")
        self.assertEqual(status, 0)
        summary = json.loads(out)
        self.assertEqual(summary["failed"], 0)
        self.assertTrue((out_dir / "corpus_reports.jsonl").exists())
        self.assertTrue((out_dir / "oracle_reports.jsonl").exists())


if __name__ == '__main__':
    unittest.main()
