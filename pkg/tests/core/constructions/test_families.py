import unittest

from semiring_workbench.core.constructions.families import (
    Family,
    GeneratorSpec,
    build_single,
    chain_lattice,
    divisor_lattice,
    ideal_index_of_divisor,
    ideal_semiring_of_Zm,
    powerset_lattice,
    ring_Zm,
    stacked_diamond,
    truncated_min_plus,
)
from semiring_workbench.core.constructions.isomorphism import is_isomorphic
from semiring_workbench.core.exceptions import RangeError
from semiring_workbench.core.ideals.ideal_semiring import build_ideal_semiring
from semiring_workbench.core.structures.order import default_view
from semiring_workbench.core.structures.semiring import (
    direct_product,
    is_bounded_distributive_lattice,
    is_entire,
    is_mult_idempotent,
    is_simple,
)


class TestFamilies(unittest.TestCase):
    def test_chain_two_is_boolean(self):
        S = chain_lattice(2)
        self.assertEqual((S.add, S.mul, S.zero, S.one), (((0, 1), (1, 1)), ((0, 0), (0, 1)), 0, 1))

    def test_chain_five(self):
        S = chain_lattice(5)
        self.assertTrue(is_entire(S))
        self.assertTrue(is_simple(S))
        self.assertTrue(is_mult_idempotent(S))

    def test_powerset(self):
        self.assertEqual(powerset_lattice(1), chain_lattice(2))
        self.assertTrue(is_isomorphic(powerset_lattice(2), direct_product(chain_lattice(2), chain_lattice(2))))
        self.assertEqual(powerset_lattice(3).label(5), "{0,2}")

    def test_divisor_lattices(self):
        self.assertTrue(is_isomorphic(divisor_lattice(6), powerset_lattice(2)))
        self.assertTrue(is_isomorphic(divisor_lattice(4), chain_lattice(3)))
        S = divisor_lattice(12)
        self.assertEqual(S.order_n, 6)
        self.assertTrue(is_bounded_distributive_lattice(S))
        self.assertEqual((S.label(S.zero), S.label(S.one)), ("1", "12"))

    def test_ideal_semiring_of_z8(self):
        S = ideal_semiring_of_Zm(8)
        self.assertEqual(S.labels, ("(0)", "(4)", "(2)", "(1)"))
        a = ideal_index_of_divisor(8, 2)
        b = ideal_index_of_divisor(8, 4)
        self.assertNotEqual(S.add[a][S.mul[b][b]], S.mul[S.add[a][b]][S.add[a][b]])
        self.assertTrue(default_view(S).positive)

    def test_square_free_modulus_is_idempotent(self):
        self.assertTrue(is_mult_idempotent(ideal_semiring_of_Zm(6)))
        self.assertFalse(is_mult_idempotent(ideal_semiring_of_Zm(8)))

    def test_ideal_semiring_matches_ideals_of_the_ring(self):
        for m in range(2, 13):
            with self.subTest(m=m):
                built = build_ideal_semiring(ring_Zm(m))
                self.assertTrue(is_isomorphic(ideal_semiring_of_Zm(m), built.semiring))
                self.assertEqual(built.failures, [])

    def test_truncated_min_plus(self):
        self.assertTrue(is_isomorphic(truncated_min_plus(1), chain_lattice(2)))
        S = truncated_min_plus(2)
        self.assertTrue(is_entire(S))
        self.assertTrue(is_simple(S))
        self.assertFalse(is_mult_idempotent(S))
        self.assertEqual(S.mul[1][1], 2)

    def test_stacked_diamond(self):
        S = stacked_diamond()
        x, y, m, one = 1, 2, 3, 4
        self.assertEqual(S.mul[x][y], S.zero)
        self.assertEqual(S.add[x][y], m)
        self.assertEqual(S.one, one)
        self.assertTrue(is_bounded_distributive_lattice(S))

    def test_ranges(self):
        for builder, bad in ((chain_lattice, 1), (powerset_lattice, 8), (divisor_lattice, 1),
                             (ideal_semiring_of_Zm, 256), (truncated_min_plus, 0), (ring_Zm, 1)):
            with self.subTest(builder=builder.__name__):
                with self.assertRaises(RangeError):
                    builder(bad)

    def test_build_single(self):
        self.assertEqual(build_single(GeneratorSpec(Family.CHAIN, (3,))), chain_lattice(3))
        product = GeneratorSpec(Family.PRODUCT, factors=(GeneratorSpec(Family.CHAIN, (2,)),
                                                         GeneratorSpec(Family.RING_ZM, (3,))))
        self.assertEqual(build_single(product).order_n, 6)
        self.assertEqual(product.name, "chain(2) x ring_Zm(3)")
        with self.assertRaises(RangeError):
            build_single(GeneratorSpec(Family.EXHAUSTIVE, (2,)))
        with self.assertRaises(RangeError):
            build_single(GeneratorSpec(Family.CHAIN, (2, 3)))


if __name__ == '__main__':
    unittest.main()
