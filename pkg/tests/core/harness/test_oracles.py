import unittest

from semiring_workbench.core.constructions.families import (
    chain_lattice,
    ideal_semiring_of_Zm,
    powerset_lattice,
    ring_Zm,
    stacked_diamond,
    truncated_min_plus,
)
from semiring_workbench.core.harness.oracles import oracle_cross_checks
from semiring_workbench.core.structures.semiring import direct_product


class TestOracleCrossChecks(unittest.TestCase):
    def test_agreement_on_family_members(self):
        for S in (ring_Zm(12), chain_lattice(5), powerset_lattice(3), ideal_semiring_of_Zm(16),
                  truncated_min_plus(4), stacked_diamond(), direct_product(ring_Zm(2), chain_lattice(3))):
            report = oracle_cross_checks(S, samples=100, seed=0)
            self.assertTrue(report.passed, report.mismatches)

    def test_check_count(self):
        # four ideals, checked for radicals and primality, plus the random samples
        report = oracle_cross_checks(ring_Zm(6), samples=10, seed=3, semiring_id="Z6")
        self.assertEqual(report.checks, 4 + 10 + 4)
        self.assertEqual(report.to_dict(), {"semiring": "Z6", "checks": 18, "mismatches": []})

    def test_seeded_runs_repeat(self):
        S = ring_Zm(8)
        self.assertEqual(oracle_cross_checks(S, 25, seed=11), oracle_cross_checks(S, 25, seed=11))


if __name__ == '__main__':
    unittest.main()
