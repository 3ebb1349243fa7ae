import unittest

from semiring_workbench.core.constructions.families import ideal_semiring_of_Zm, powerset_lattice
from semiring_workbench.core.exceptions import BadShape, NotAnnihilating, NotPrime
from semiring_workbench.core.ideals.ideal_ops import IdealSet, zero_ideal
from semiring_workbench.core.pc.pc_function import enumerate_pc_functions, pc_prime_report, validate_pc_function

COMPLEMENT = (3, 2, 1, 0)
ZERO_MAP = (0, 0, 0, 0)


class TestValidatePcFunction(unittest.TestCase):
    def setUp(self):
        self.b4 = powerset_lattice(2)

    def test_complement_satisfies_both_axioms(self):
        pc = validate_pc_function(self.b4, COMPLEMENT)
        self.assertTrue(pc.zero_axiom)
        self.assertTrue(pc.sum_axiom)
        self.assertTrue(pc.axioms_hold)

    def test_zero_map(self):
        pc = validate_pc_function(self.b4, ZERO_MAP, "zero")
        self.assertFalse(pc.zero_axiom)
        self.assertEqual(pc.name, "zero")

    def test_pseudocomplement_of_z8_ideals_breaks_sum_axiom(self):
        pc = validate_pc_function(ideal_semiring_of_Zm(8), (3, 2, 1, 0))
        self.assertTrue(pc.zero_axiom)
        self.assertFalse(pc.sum_axiom)

    def test_not_annihilating(self):
        with self.assertRaises(NotAnnihilating) as ctx:
            validate_pc_function(self.b4, (3, 2, 1, 3))
        self.assertEqual(ctx.exception.witness, 3)

    def test_shape(self):
        with self.assertRaises(BadShape):
            validate_pc_function(self.b4, (3, 2, 1))
        with self.assertRaises(BadShape):
            validate_pc_function(self.b4, (3, 2, 1, 4))


class TestEnumeratePcFunctions(unittest.TestCase):
    def test_exhaustive(self):
        functions, exhaustive = enumerate_pc_functions(powerset_lattice(2))
        # |Ann(0)| |Ann(1)| |Ann(2)| |Ann(3)| = 4 * 2 * 2 * 1
        self.assertEqual(len(functions), 16)
        self.assertTrue(exhaustive)
        self.assertEqual(functions[0].name, "pc#0")
        self.assertIn(COMPLEMENT, [pc.star for pc in functions])

    def test_representatives_over_cap(self):
        functions, exhaustive = enumerate_pc_functions(powerset_lattice(2), cap=4, pstar=COMPLEMENT)
        self.assertFalse(exhaustive)
        names = [pc.name for pc in functions]
        self.assertIn("zero-map", names)
        self.assertIn(COMPLEMENT, [pc.star for pc in functions])


class TestPcPrimeReport(unittest.TestCase):
    def setUp(self):
        self.b4 = powerset_lattice(2)
        self.prime = IdealSet(0b0011)

    def test_complement_on_minimal_prime(self):
        report = pc_prime_report(self.b4, validate_pc_function(self.b4, COMPLEMENT), self.prime)
        self.assertEqual(report.report.conditions, {"(1)": True, "(2)": True, "(3)": True})
        self.assertTrue(report.minimal)
        self.assertEqual(report.violations, [])

    def test_zero_map_disagrees_without_violation(self):
        report = pc_prime_report(self.b4, validate_pc_function(self.b4, ZERO_MAP), self.prime)
        self.assertEqual(report.report.conditions, {"(1)": False, "(2)": True, "(3)": False})
        self.assertFalse(report.axioms_hold)
        self.assertEqual(report.violations, [])
        self.assertEqual(report.to_dict()["witness"], {"(1)": 0, "(3)": 0})

    def test_needs_prime(self):
        with self.assertRaises(NotPrime):
            pc_prime_report(self.b4, validate_pc_function(self.b4, COMPLEMENT), zero_ideal(self.b4))


if __name__ == '__main__':
    unittest.main()
