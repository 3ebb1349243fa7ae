import time
import unittest

from semiring_workbench.core.constructions.families import chain_lattice, ring_Zm
from semiring_workbench.core.exceptions import RangeError
from semiring_workbench.core.ideals.ideal_semiring import build_ideal_semiring, ideal_semiring_example_check
from semiring_workbench.core.structures.semiring import is_add_idempotent


class TestBuildIdealSemiring(unittest.TestCase):
    def test_ideals_of_a_chain(self):
        built = build_ideal_semiring(chain_lattice(3))
        self.assertEqual(built.semiring.labels, ("{0}", "{0,1}", "{0,1,2}"))
        self.assertEqual(built.failures, [])
        self.assertTrue(built.view.positive)
        self.assertTrue(is_add_idempotent(built.semiring))

    def test_ideals_of_z12(self):
        built = build_ideal_semiring(ring_Zm(12))
        self.assertEqual(built.semiring.order_n, 6)
        self.assertEqual(built.failures, [])
        self.assertTrue(built.order.is_least(built.semiring.zero))
        self.assertTrue(built.order.is_greatest(built.semiring.one))


class TestIdealExample(unittest.TestCase):
    def test_n_two(self):
        started = time.perf_counter()
        report = ideal_semiring_example_check(2)
        self.assertLess(time.perf_counter() - started, 1.0)
        self.assertEqual((report.lhs, report.rhs), ("(2)", "(4)"))
        self.assertTrue(report.unequal)
        self.assertTrue(report.positive)
        self.assertTrue(report.pseudocomplemented)
        self.assertTrue(report.holds)

    def test_n_three(self):
        report = ideal_semiring_example_check(3)
        self.assertEqual((report.lhs, report.rhs), ("(3)", "(9)"))
        self.assertTrue(report.holds)
        self.assertTrue(report.to_dict()["holds"])

    def test_range(self):
        for n in (1, 7):
            with self.assertRaises(RangeError):
                ideal_semiring_example_check(n)


if __name__ == '__main__':
    unittest.main()
