import json
import tempfile
import unittest
from pathlib import Path

from semiring_workbench.core.constructions.families import chain_lattice, ideal_semiring_of_Zm, ring_Zm
from semiring_workbench.core.exceptions import AxiomViolationError, NotAPartialOrder, ParseError
from semiring_workbench.core.input_adapters.semiring_adapter import (
    JSONSemiringAdapter,
    dump_semiring,
    load_pc_function,
    semiring_to_document,
)
from semiring_workbench.core.structures.order import OrderSource, natural_order
from semiring_workbench.core.structures.semiring import is_add_idempotent


class TestJSONSemiringAdapter(unittest.TestCase):
    def setUp(self):
        self.b2_document = {"n": 2, "zero": 0, "one": 1, "add": [[0, 1], [1, 1]], "mul": [[0, 0], [0, 1]]}

    def test_adapt_from_dict(self):
        adapter = JSONSemiringAdapter().adapt(self.b2_document)
        S = adapter.fetch()
        self.assertEqual(S.order_n, 2)
        self.assertIsNone(adapter.order)
        self.assertTrue(adapter.view().positive)
        self.assertEqual(adapter.view().order.source, OrderSource.NATURAL)

    def test_supplied_order_wins(self):
        document = dict(self.b2_document, order=[[1, 0], [0, 1]])
        view = JSONSemiringAdapter().adapt(document).view()
        self.assertFalse(view.positive)
        self.assertEqual(view.order.source, OrderSource.SUPPLIED)

    def test_missing_field(self):
        document = dict(self.b2_document)
        del document["mul"]
        with self.assertRaises(ParseError) as ctx:
            JSONSemiringAdapter().adapt(document)
        self.assertIn("mul", str(ctx.exception))

    def test_ragged_rows(self):
        document = dict(self.b2_document, add=[[0, 1], [1]])
        with self.assertRaises(ParseError):
            JSONSemiringAdapter().adapt(document)

    def test_non_integer_n(self):
        with self.assertRaises(ParseError):
            JSONSemiringAdapter().adapt(dict(self.b2_document, n="2"))

    def test_axiom_violation_propagates(self):
        with self.assertRaises(AxiomViolationError):
            JSONSemiringAdapter().adapt(dict(self.b2_document, mul=[[0, 1], [0, 1]]))

    def test_bad_order(self):
        with self.assertRaises(NotAPartialOrder):
            JSONSemiringAdapter().adapt(dict(self.b2_document, order=[[1, 1], [1, 1]]))

    def test_invalid_json_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "broken.json"
            path.write_text("{not json", encoding="utf-8")
            with self.assertRaises(ParseError) as ctx:
                JSONSemiringAdapter().adapt(path)
            self.assertEqual(ctx.exception.source, str(path))

    def test_missing_file(self):
        with self.assertRaises(ParseError):
            JSONSemiringAdapter().adapt("/nonexistent/semiring.json")

    def test_fetch_before_adapt(self):
        with self.assertRaises(ValueError):
            JSONSemiringAdapter().fetch()

    def test_dump_then_load_preserves_tables_labels_and_order(self):
        for S in (chain_lattice(4), ideal_semiring_of_Zm(12), ring_Zm(6)):
            order = natural_order(S) if is_add_idempotent(S) else None
            with tempfile.TemporaryDirectory() as tmp:
                path = Path(tmp) / "nested" / "s.json"
                dump_semiring(path, S, order)
                adapter = JSONSemiringAdapter().adapt(path)
            self.assertEqual(adapter.fetch(), S)
            if order is not None:
                self.assertEqual(adapter.order.leq, order.leq)

    def test_document_is_json_serializable(self):
        document = semiring_to_document(ideal_semiring_of_Zm(8))
        self.assertEqual(json.loads(json.dumps(document))["labels"], ["(0)", "(4)", "(2)", "(1)"])


class TestLoadPcFunction(unittest.TestCase):
    def test_dict_source(self):
        self.assertEqual(load_pc_function({"star": [1, 0]}, 2), [1, 0])

    def test_wrong_length(self):
        with self.assertRaises(ParseError):
            load_pc_function({"star": [1]}, 2)

    def test_file_source(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "pc.json"
            path.write_text(json.dumps({"star": [2, 0, 0]}), encoding="utf-8")
            self.assertEqual(load_pc_function(path, 3), [2, 0, 0])


if __name__ == '__main__':
    unittest.main()
