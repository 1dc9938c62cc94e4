import unittest
from itertools import combinations

from HibiLevelAJM.backend.errors import InvalidSchubertSpecError
from HibiLevelAJM.helpers.poset_core import Poset
from HibiLevelAJM.helpers.schubert import (GrassTuple, SchubertCycle, SchubertSpec, all_gammas, gamma_from_a,
                                           gamma_lattice, nn_ideal_check, sweep, u_gamma_support)


class GammaFromATest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(gamma_from_a(2, 4, (3, 4)).entries, (1, 2))
        self.assertEqual(gamma_from_a(2, 4, (2, 4)).entries, (1, 3))
        self.assertEqual(gamma_from_a(1, 5, (2,)).entries, (4,))

    def test_involution(self):
        for c in combinations(range(1, 7), 3):
            b = gamma_from_a(3, 6, c)
            self.assertEqual(gamma_from_a(3, 6, b.entries).entries, c)

    def test_invalid(self):
        self.assertRaises(InvalidSchubertSpecError, gamma_from_a, 2, 4, (4, 3))
        self.assertRaises(InvalidSchubertSpecError, gamma_from_a, 2, 4, (1, 5))
        self.assertRaises(InvalidSchubertSpecError, gamma_from_a, 2, 4, (1,))
        self.assertRaises(InvalidSchubertSpecError, gamma_from_a, 5, 4, (1, 2, 3, 4, 5))

    def test_spec_echoes_both_vectors(self):
        spec = SchubertSpec.from_a(2, 4, (2, 4))
        self.assertEqual(spec.to_dict(), {'m': 2, 'n': 4, 'gamma': [1, 3], 'a': [2, 4]})
        self.assertEqual(SchubertSpec.from_gamma(2, 4, (1, 3)), spec)

    def test_all_gammas_lexicographic(self):
        gammas = [spec.gamma.entries for spec in all_gammas(2, 4)]
        self.assertEqual(gammas, sorted(gammas))
        self.assertEqual(len(gammas), 6)


class GammaLatticeTest(unittest.TestCase):
    def test_grassmannian(self):
        lattice = gamma_lattice(SchubertSpec.from_gamma(2, 4, (1, 2)))
        self.assertEqual(lattice.size, 6)
        self.assertTrue(lattice.base.is_isomorphic(Poset.product_of_chains(2, 2)))

    def test_gamma_13(self):
        lattice = gamma_lattice(SchubertSpec.from_gamma(2, 4, (1, 3)))
        self.assertEqual(lattice.size, 5)
        base = lattice.base
        self.assertEqual(set(base.labels), {'[1,4]', '[2,3]', '[3,4]'})
        top = base.index_of('[3,4]')
        self.assertEqual(set(base.lower_covers(top)), {base.index_of('[1,4]'), base.index_of('[2,3]')})

    def test_single_row(self):
        for k in range(1, 6):
            lattice = gamma_lattice(SchubertSpec.from_gamma(1, k, (1,)))
            self.assertEqual(lattice.size, k)
            self.assertTrue(lattice.base.is_chain())

    def test_minimal_gamma_size(self):
        for m, n, expected in ((2, 5, 10), (3, 6, 20)):
            self.assertEqual(gamma_lattice(SchubertSpec.from_gamma(m, n, range(1, m + 1))).size, expected)


class NNIdealTest(unittest.TestCase):
    def test_grid(self):
        embedding = nn_ideal_check(Poset.product_of_chains(2, 2), 2, 2)
        self.assertTrue(embedding.found)
        self.assertEqual(embedding.image, frozenset({(0, 0), (0, 1), (1, 0), (1, 1)}))

    def test_gamma_13(self):
        poset = gamma_lattice(SchubertSpec.from_gamma(2, 4, (1, 3))).base
        embedding = nn_ideal_check(poset, 2, 2)
        self.assertTrue(embedding.found)
        self.assertEqual(embedding.image, frozenset({(0, 0), (0, 1), (1, 0)}))
        self.assertEqual(embedding.cells['[3,4]'], (0, 0))

    def test_chain(self):
        embedding = nn_ideal_check(Poset.chain(3), 1, 3)
        self.assertEqual(embedding.image, frozenset({(0, 0), (0, 1), (0, 2)}))

    def test_not_found(self):
        # every Young diagram has a single minimal cell
        self.assertFalse(nn_ideal_check(Poset.antichain(2).dual(), 1, 1).found)
        self.assertFalse(nn_ideal_check(Poset.from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])).found)


class SupportTest(unittest.TestCase):
    def test_patterns(self):
        self.assertEqual(u_gamma_support(SchubertSpec.from_gamma(2, 4, (1, 2))),
                         ((True, True, True, True), (False, True, True, True)))
        self.assertEqual(u_gamma_support(SchubertSpec.from_gamma(1, 4, (3,))), ((False, False, True, True),))

    def test_diagonal_membership(self):
        spec = SchubertSpec.from_gamma(3, 6, (1, 3, 5))
        support = u_gamma_support(spec)
        for c in combinations(range(1, 7), 3):
            delta = GrassTuple(c, 6)
            live = all(support[i][d - 1] for i, d in enumerate(c))
            self.assertEqual(live, spec.gamma.leq(delta))


class CheckLevelTest(unittest.TestCase):
    def test_grassmannian_is_gorenstein(self):
        report = SchubertCycle(SchubertSpec.from_gamma(2, 4, (1, 2)), skip_basic_config=True).check_level()
        self.assertTrue(report.is_level)
        self.assertEqual(report.hibi.cm_type, 1)
        self.assertTrue(report.to_dict()['grassmannian'])

    def test_gamma_13(self):
        report = SchubertCycle(SchubertSpec.from_gamma(2, 4, (1, 3)), skip_basic_config=True).check_level()
        self.assertTrue(report.is_level)
        self.assertTrue(report.hibi.filter_purity or report.hibi.ideal_purity)

    def test_sweep(self):
        reports = sweep(2, 4, skip_basic_config=True)
        self.assertEqual(len(reports), 6)
        self.assertTrue(all(r.is_level and r.embedding.found for r in reports))
        # gamma = [3,4] is a single point
        self.assertEqual(reports[-1].lattice_size, 1)
        self.assertEqual(reports[-1].hibi.h_vector, (1,))


if __name__ == '__main__':
    unittest.main()
