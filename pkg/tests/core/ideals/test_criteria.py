import unittest

from semiring_workbench.core.constructions.families import (
    chain_lattice,
    ideal_semiring_of_Zm,
    powerset_lattice,
    ring_Zm,
    stacked_diamond,
)
from semiring_workbench.core.exceptions import HypothesisNotMet, NotContaining, NotPrime
from semiring_workbench.core.ideals.criteria import (
    complement_is_maximal_mc_set,
    huckaba2_check,
    huckaba3_check,
    huckaba_criteria,
    minimalpbdl_report,
)
from semiring_workbench.core.ideals.ideal_ops import IdealSet, enumerate_ideals, ideal_generated, zero_ideal
from semiring_workbench.core.ideals.spectrum import enumerate_primes
from semiring_workbench.core.structures.order import default_view


class TestHuckabaCriteria(unittest.TestCase):
    def test_ideal_semiring_of_z8(self):
        S = ideal_semiring_of_Zm(8)
        P = IdealSet(0b0111)
        report = huckaba_criteria(S, zero_ideal(S), P)
        self.assertEqual(report.conditions, {"(1)": True, "(2)": True, "(3)": True})
        self.assertTrue(report.equivalent)
        self.assertFalse(report.notes["exponent_readings_diverge"])

    def test_non_minimal_prime(self):
        S = chain_lattice(3)
        report = huckaba_criteria(S, zero_ideal(S), IdealSet(0b011))
        self.assertEqual(set(report.conditions.values()), {False})
        self.assertTrue(report.equivalent)
        self.assertEqual(report.witness["(2)"], {"extends_by": 1})

    def test_all_pairs_agree(self):
        for S in (ring_Zm(12), chain_lattice(4), powerset_lattice(3), ideal_semiring_of_Zm(16), stacked_diamond()):
            for P in enumerate_primes(S):
                for I in enumerate_ideals(S):
                    if I.issubset(P):
                        with self.subTest(ideal=I.to_list(), prime=P.to_list()):
                            self.assertTrue(huckaba_criteria(S, I, P).equivalent)

    def test_preconditions(self):
        S = ring_Zm(6)
        with self.assertRaises(NotPrime):
            huckaba_criteria(S, zero_ideal(S), zero_ideal(S))
        with self.assertRaises(NotContaining):
            huckaba_criteria(S, ideal_generated(S, [2]), IdealSet(0b1001))

    def test_maximal_mc_set(self):
        S = ring_Zm(6)
        self.assertIsNone(complement_is_maximal_mc_set(S, zero_ideal(S), IdealSet(0b1001)))


class TestNilpotentFreeCorollaries(unittest.TestCase):
    def test_minimal_primes_are_annihilated_outside(self):
        S = ring_Zm(6)
        for P in enumerate_primes(S):
            report = huckaba2_check(S, P)
            self.assertEqual(report.conditions, {"minimal": True, "annihilated_outside": True})

    def test_non_minimal_prime_of_a_chain(self):
        S = chain_lattice(3)
        report = huckaba2_check(S, IdealSet(0b011))
        self.assertEqual(report.conditions, {"minimal": False, "annihilated_outside": False})
        self.assertEqual(report.witness, {"x": 1})

    def test_nilpotents_block_the_corollaries(self):
        S = ring_Zm(4)
        with self.assertRaises(HypothesisNotMet):
            huckaba2_check(S, IdealSet(0b101))
        with self.assertRaises(HypothesisNotMet):
            huckaba3_check(S, [2])

    def test_annihilator_criterion(self):
        S = ring_Zm(6)
        inside = huckaba3_check(S, [2])
        self.assertEqual(inside.conditions, {"in_minimal_prime": True, "nonzero_annihilator": True})
        self.assertEqual(inside.notes["annihilator"], [0, 3])
        whole = huckaba3_check(S, [2, 3])
        self.assertEqual(whole.conditions, {"in_minimal_prime": False, "nonzero_annihilator": False})


class TestMinimalPbdl(unittest.TestCase):
    def test_boolean_algebra(self):
        V = default_view(powerset_lattice(2))
        for P in enumerate_primes(V.semiring):
            report = minimalpbdl_report(V, P)
            self.assertEqual(set(report.conditions.values()), {True})

    def test_chain_non_minimal_prime(self):
        V = default_view(chain_lattice(3))
        report = minimalpbdl_report(V, IdealSet(0b011))
        self.assertEqual(set(report.conditions.values()), {False})
        self.assertTrue(report.equivalent)
        self.assertEqual(report.witness, {"(1)": 1, "(2)": 1, "(3)": 1})

    def test_hypotheses(self):
        V = default_view(ideal_semiring_of_Zm(8))
        with self.assertRaises(HypothesisNotMet):
            minimalpbdl_report(V, IdealSet(0b0111))
        with self.assertRaises(NotPrime):
            minimalpbdl_report(default_view(chain_lattice(3)), IdealSet(0b111))


if __name__ == '__main__':
    unittest.main()
