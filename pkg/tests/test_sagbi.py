import random
import unittest
from itertools import combinations

import sympy

from HibiLevelAJM.backend.errors import PreconditionError
from HibiLevelAJM.helpers.sagbi import (DEGLEX, ONE, Monomial, Polynomial, SagbiVerifier, leading_monomial,
                                        lm_multiplicativity_check, minor, standard_monomial_scan,
                                        straightening_lm_check)
from HibiLevelAJM.helpers.schubert import GrassTuple, SchubertSpec, all_gammas, u_gamma_support


def _symbol(i, j):
    return sympy.Symbol(f"U_{i}_{j}")


def _to_sympy(p: Polynomial):
    total = sympy.Integer(0)
    for mono, c in p.terms.items():
        total += c * sympy.Mul(*[_symbol(i, j) ** e for (i, j), e in mono.powers])
    return total


def _sympy_minor(spec: SchubertSpec, delta: GrassTuple):
    support = u_gamma_support(spec)
    matrix = sympy.Matrix(spec.m, spec.m,
                          lambda r, k: _symbol(r + 1, delta[k]) if support[r][delta[k] - 1] else 0)
    return matrix.det()


def _random_monomial(rng):
    return Monomial.of((rng.randint(1, 3), rng.randint(1, 4)) for _ in range(rng.randint(0, 3)))


def _random_polynomial(rng):
    return Polynomial({_random_monomial(rng): rng.randint(-3, 3) for _ in range(rng.randint(1, 3))})


class TermOrderTest(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(2024)

    def test_total_and_degree_compatible(self):
        for _ in range(300):
            u, v = _random_monomial(self.rng), _random_monomial(self.rng)
            outcomes = [DEGLEX.greater(u, v), DEGLEX.greater(v, u), u == v]
            self.assertEqual(outcomes.count(True), 1)
            if u.degree > v.degree:
                self.assertTrue(DEGLEX.greater(u, v))

    def test_multiplicative(self):
        for _ in range(300):
            u, v, w = (_random_monomial(self.rng) for _ in range(3))
            if DEGLEX.greater(u, v):
                self.assertTrue(DEGLEX.greater(u * w, v * w))

    def test_variable_precedence(self):
        row_major = [Monomial.of([(i, j)]) for i in range(1, 3) for j in range(1, 5)]
        self.assertEqual(DEGLEX.sorted(reversed(row_major)), row_major)


class PolynomialTest(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(7)

    def test_ring_laws(self):
        for _ in range(50):
            a, b, c = (_random_polynomial(self.rng) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertTrue((a - a).is_zero())

    def test_no_zero_coefficients(self):
        x = Polynomial.variable(1, 1)
        self.assertEqual(len(x - x), 0)
        self.assertEqual(str(x - x), '0')

    def test_printing(self):
        p = minor(SchubertSpec.from_gamma(2, 4, (1, 2)), GrassTuple((3, 4), 4))
        self.assertEqual(str(p), 'U_1_3*U_2_4 - U_1_4*U_2_3')
        self.assertEqual(str(Polynomial.constant(-2)), '-2')


class MinorTest(unittest.TestCase):
    def test_single_row(self):
        spec = SchubertSpec.from_gamma(1, 3, (2,))
        self.assertTrue(minor(spec, GrassTuple((1,), 3)).is_zero())
        self.assertEqual(minor(spec, GrassTuple((3,), 3)), Polynomial.variable(1, 3))

    def test_structural_zero_drops_term(self):
        p = minor(SchubertSpec.from_gamma(2, 4, (1, 2)), GrassTuple((1, 2), 4))
        self.assertEqual(p, Polynomial.variable(1, 1) * Polynomial.variable(2, 2))

    def test_vanishing_minor(self):
        self.assertTrue(minor(SchubertSpec.from_gamma(2, 4, (1, 3)), GrassTuple((1, 2), 4)).is_zero())

    def test_against_determinant(self):
        for spec in all_gammas(2, 4) + all_gammas(3, 5):
            for c in combinations(range(1, spec.n + 1), spec.m):
                delta = GrassTuple(c, spec.n)
                expected = _sympy_minor(spec, delta)
                self.assertEqual(sympy.expand(_to_sympy(minor(spec, delta)) - expected), 0, f"{spec} {delta}")

    def test_wrong_shape(self):
        self.assertRaises(PreconditionError, minor, SchubertSpec.from_gamma(2, 4, (1, 2)), GrassTuple((1,), 4))


class LeadingMonomialTest(unittest.TestCase):
    def setUp(self):
        self.spec = SchubertSpec.from_gamma(2, 4, (1, 2))

    def test_diagonal(self):
        lm = leading_monomial(minor(self.spec, GrassTuple((3, 4), 4)))
        self.assertEqual(lm, Monomial.of([(1, 3), (2, 4)]))

    def test_variable(self):
        x = Polynomial.variable(2, 3)
        self.assertEqual(leading_monomial(x), Monomial.of([(2, 3)]))

    def test_zero_rejected(self):
        self.assertRaises(PreconditionError, leading_monomial, Polynomial())

    def test_multiplicativity(self):
        alpha, beta = GrassTuple((1, 4), 4), GrassTuple((2, 3), 4)
        self.assertTrue(lm_multiplicativity_check(self.spec, alpha, beta))
        self.assertTrue(lm_multiplicativity_check(self.spec, alpha, alpha))
        self.assertTrue(lm_multiplicativity_check(self.spec, GrassTuple((1, 2), 4), alpha))

    def test_straightening(self):
        self.assertTrue(straightening_lm_check(self.spec, GrassTuple((1, 4), 4), GrassTuple((2, 3), 4)))
        spec5 = SchubertSpec.from_gamma(2, 5, (1, 2))
        self.assertTrue(straightening_lm_check(spec5, GrassTuple((1, 5), 5), GrassTuple((2, 4), 5)))

    def test_straightening_needs_incomparable_members(self):
        self.assertRaises(PreconditionError, straightening_lm_check, self.spec,
                          GrassTuple((1, 2), 4), GrassTuple((3, 4), 4))
        spec13 = SchubertSpec.from_gamma(2, 4, (1, 3))
        self.assertRaises(PreconditionError, lm_multiplicativity_check, spec13,
                          GrassTuple((1, 2), 4), GrassTuple((1, 3), 4))


class SagbiVerifierTest(unittest.TestCase):
    def test_grassmannian_counts(self):
        report = SagbiVerifier(SchubertSpec.from_gamma(2, 4, (1, 2)), skip_basic_config=True).verify(3)
        self.assertEqual([s.count for s in report.scans], [1, 6, 20, 50])
        self.assertTrue(all(s.count == s.hilbert == s.distinct_leading_terms for s in report.scans))
        self.assertEqual(report.diagonal_checked, 6)
        self.assertEqual(report.zero_minors_checked, 0)
        self.assertEqual(report.straightening_pairs, 1)

    def test_all_gamma(self):
        for spec in all_gammas(2, 4):
            report = SagbiVerifier(spec, skip_basic_config=True).verify(2)
            self.assertEqual(report.diagonal_checked, report.lattice_size)
            self.assertEqual(report.diagonal_checked + report.zero_minors_checked, 6)

    def test_degree_zero_and_one(self):
        spec = SchubertSpec.from_gamma(2, 5, (1, 3))
        self.assertEqual(standard_monomial_scan(spec, 0, skip_basic_config=True).count, 1)
        scan = standard_monomial_scan(spec, 1, skip_basic_config=True)
        self.assertEqual(scan.count, 9)
        self.assertEqual(scan.distinct_leading_terms, 9)

    def test_empty_product(self):
        self.assertEqual(ONE * Monomial.of([(1, 1)]), Monomial.of([(1, 1)]))


if __name__ == '__main__':
    unittest.main()
