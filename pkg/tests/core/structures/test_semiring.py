import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from semiring_workbench.core.exceptions import AxiomViolationError, BadShape, ZeroEqualsOne
from semiring_workbench.core.structures.semiring import (
    ABSORBING_ZERO,
    MUL_COMMUTATIVE,
    FiniteSemiring,
    check_semiring_tables,
    complemented_elements,
    direct_product,
    is_add_idempotent,
    is_bounded_distributive_lattice,
    is_complemented,
    is_entire,
    is_mult_idempotent,
    is_simple,
    validate_semiring,
)

B2_ADD = [[0, 1], [1, 1]]
B2_MUL = [[0, 0], [0, 1]]


def chain_tables(k):
    return ([[max(a, b) for b in range(k)] for a in range(k)],
            [[min(a, b) for b in range(k)] for a in range(k)])


class TestValidateSemiring(unittest.TestCase):
    def test_boolean_semiring_is_valid(self):
        S = validate_semiring(B2_ADD, B2_MUL, 0, 1, 2)
        self.assertIsInstance(S, FiniteSemiring)
        self.assertEqual(S.order_n, 2)
        self.assertEqual(S.add, ((0, 1), (1, 1)))

    def test_three_element_chain_is_valid(self):
        add, mul = chain_tables(3)
        S = validate_semiring(add, mul, 0, 2, 3)
        self.assertTrue(is_bounded_distributive_lattice(S))

    def test_non_absorbing_zero_is_reported_with_witness(self):
        with self.assertRaises(AxiomViolationError) as ctx:
            validate_semiring(B2_ADD, [[0, 1], [0, 1]], 0, 1, 2)
        by_axiom = {v.axiom: v for v in ctx.exception.violations}
        self.assertIn(ABSORBING_ZERO, by_axiom)
        self.assertEqual(by_axiom[ABSORBING_ZERO].witness, (1,))

    def test_mutated_chain_cell_is_rejected(self):
        add, mul = chain_tables(4)
        mul[0][3] = 3
        with self.assertRaises(AxiomViolationError) as ctx:
            validate_semiring(add, mul, 0, 3, 4)
        axioms = {v.axiom for v in ctx.exception.violations}
        self.assertIn(MUL_COMMUTATIVE, axioms)
        self.assertIn(ABSORBING_ZERO, axioms)

    def test_every_violated_family_is_listed_once(self):
        with self.assertRaises(AxiomViolationError) as ctx:
            validate_semiring([[1, 1], [1, 1]], [[1, 0], [1, 1]], 0, 1, 2)
        axioms = [v.axiom for v in ctx.exception.violations]
        self.assertEqual(len(axioms), len(set(axioms)))
        self.assertGreater(len(axioms), 1)

    def test_ragged_table_is_bad_shape(self):
        with self.assertRaises(BadShape):
            validate_semiring([[0, 1], [1]], B2_MUL, 0, 1, 2)

    def test_out_of_range_entry_is_bad_shape(self):
        with self.assertRaises(BadShape):
            validate_semiring([[0, 2], [1, 1]], B2_MUL, 0, 1, 2)

    def test_boolean_entries_are_bad_shape(self):
        with self.assertRaises(BadShape):
            validate_semiring([[False, True], [True, True]], B2_MUL, 0, 1, 2)

    def test_zero_equals_one(self):
        with self.assertRaises(ZeroEqualsOne):
            validate_semiring(B2_ADD, B2_MUL, 1, 1, 2)

    def test_order_one_is_bad_shape(self):
        with self.assertRaises(BadShape):
            validate_semiring([[0]], [[0]], 0, 0, 1)

    def test_labels_must_match_order(self):
        with self.assertRaises(BadShape):
            validate_semiring(B2_ADD, B2_MUL, 0, 1, 2, labels=["0"])

    def test_arrays_are_read_only(self):
        S = validate_semiring(B2_ADD, B2_MUL, 0, 1, 2)
        with self.assertRaises(ValueError):
            S.add_array[0, 0] = 1

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=2, max_value=3).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n),
            st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n),
        )))
    def test_random_tables_are_accepted_iff_no_axiom_fails(self, case):
        n, add, mul = case
        violations = check_semiring_tables(np.array(add), np.array(mul), 0, 1)
        if violations:
            with self.assertRaises(AxiomViolationError):
                validate_semiring(add, mul, 0, 1, n)
        else:
            S = validate_semiring(add, mul, 0, 1, n)
            for s in S.elements:
                self.assertEqual(S.mul[S.zero][s], S.zero)
                self.assertEqual(S.add[S.zero][s], s)


class TestPredicates(unittest.TestCase):
    def setUp(self):
        self.b2 = validate_semiring(B2_ADD, B2_MUL, 0, 1, 2)
        add, mul = chain_tables(5)
        self.c5 = validate_semiring(add, mul, 0, 4, 5)
        self.z4 = validate_semiring([[(a + b) % 4 for b in range(4)] for a in range(4)],
                                    [[(a * b) % 4 for b in range(4)] for a in range(4)], 0, 1, 4)

    def test_chain_is_entire_simple_and_idempotent(self):
        self.assertTrue(is_entire(self.c5))
        self.assertTrue(is_simple(self.c5))
        self.assertTrue(is_mult_idempotent(self.c5))
        self.assertTrue(is_add_idempotent(self.c5))

    def test_ring_z4_predicates(self):
        self.assertFalse(is_entire(self.z4))
        self.assertFalse(is_simple(self.z4))
        self.assertFalse(is_add_idempotent(self.z4))
        self.assertFalse(is_bounded_distributive_lattice(self.z4))

    def test_complemented_elements(self):
        self.assertTrue(is_complemented(self.b2))
        self.assertEqual(complemented_elements(self.c5), [0, 4])
        self.assertFalse(is_complemented(self.c5))

    def test_power(self):
        self.assertEqual(self.z4.power(2, 0), 1)
        self.assertEqual(self.z4.power(2, 1), 2)
        self.assertEqual(self.z4.power(2, 2), 0)

    def test_direct_product_encoding(self):
        P = direct_product(self.b2, self.b2)
        self.assertEqual(P.order_n, 4)
        self.assertEqual((P.zero, P.one), (0, 3))
        # (0,1) . (1,0) = (0,0)
        self.assertEqual(P.mul[1][2], 0)
        self.assertEqual(P.add[1][2], 3)
        self.assertEqual(P.label(1), "(0,1)")


if __name__ == '__main__':
    unittest.main()
