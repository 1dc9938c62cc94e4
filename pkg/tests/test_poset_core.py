import json
import tempfile
import unittest
from itertools import combinations
from pathlib import Path

import networkx as nx

from HibiLevelAJM.backend.errors import (CycleDetectedError, EmptyPosetError, InternalConsistencyError,
                                         InvalidPosetError, PosetFormatError, ResourceCapExceeded)
from HibiLevelAJM.helpers.poset_core import Poset, enumerate_posets, load_poset, loads_poset


class PosetConstructionTest(unittest.TestCase):
    def test_singleton(self):
        p = Poset.from_covers(1, [])
        self.assertEqual(p.size, 1)
        self.assertEqual(p.covers, frozenset())

    def test_redundant_pair_dropped(self):
        p = Poset.from_covers(3, [(0, 1), (1, 2), (0, 2)])
        self.assertEqual(p.covers, frozenset({(0, 1), (1, 2)}))
        self.assertTrue(p.leq(0, 2))
        self.assertTrue(p.is_chain())

    def test_cycle_rejected_with_witness(self):
        with self.assertRaises(CycleDetectedError) as ctx:
            Poset.from_covers(2, [(0, 1), (1, 0)])
        self.assertEqual(set(ctx.exception.cycle), {'0', '1'})

    def test_index_out_of_range(self):
        self.assertRaises(InvalidPosetError, Poset.from_covers, 2, [(0, 2)])

    def test_non_transitive_table_rejected(self):
        leq = [[True, True, False], [False, True, True], [False, False, True]]
        self.assertRaises(InvalidPosetError, Poset, ['a', 'b', 'c'], leq)

    def test_product_of_chains_labels(self):
        grid = Poset.product_of_chains(2, 2)
        self.assertEqual(grid.labels, ('(1,1)', '(1,2)', '(2,1)', '(2,2)'))
        self.assertEqual(len(grid.covers), 4)


class PosetRankTest(unittest.TestCase):
    def setUp(self):
        self.grid = Poset.product_of_chains(2, 2)

    def test_chain_rank(self):
        self.assertEqual(Poset.chain(3).rank(), 2)

    def test_antichain_rank(self):
        p = Poset.antichain(3)
        self.assertEqual(p.rank(), 0)
        self.assertEqual(p.extended().rank(), 2)

    def test_grid_rank(self):
        self.assertEqual(self.grid.rank(), 2)
        self.assertEqual(self.grid.extended().rank(), 4)

    def test_empty_rank_rejected(self):
        self.assertRaises(EmptyPosetError, Poset.antichain(0).rank)

    def test_height_and_coheight(self):
        p = Poset.chain(3)
        self.assertEqual([p.height(x) for x in range(3)], [0, 1, 2])
        self.assertEqual([p.coheight(x) for x in range(3)], [2, 1, 0])

    def test_extended_indices(self):
        phat = self.grid.extended()
        self.assertEqual((phat.bot, phat.top), (4, 5))
        self.assertEqual(phat.labels[phat.bot], '-inf')
        self.assertEqual(phat.coheight(phat.bot), 4)
        self.assertEqual(phat.height(phat.top), 4)


class PosetPurityTest(unittest.TestCase):
    def test_chain_is_pure(self):
        self.assertTrue(Poset.chain(4).is_pure())

    def test_unequal_maximal_chains(self):
        # a<b<c and d<c
        p = Poset.from_covers(4, [(0, 1), (1, 2), (3, 2)], ['a', 'b', 'c', 'd'])
        self.assertFalse(p.is_pure())
        self.assertEqual(p.maximal_chain_lengths(), frozenset({1, 2}))

    def test_singleton_subset_is_pure(self):
        p = Poset.from_covers(4, [(0, 1), (1, 2), (3, 2)])
        self.assertTrue(p.is_pure({3}))

    def test_empty_subset_rejected(self):
        self.assertRaises(EmptyPosetError, Poset.chain(2).is_pure, set())

    def test_dual_swaps_order(self):
        p = Poset.from_covers(3, [(0, 2), (1, 2)])
        d = p.dual()
        self.assertTrue(d.lt(2, 0))
        self.assertEqual(d.covers, frozenset({(2, 0), (2, 1)}))


class PosetIdealsTest(unittest.TestCase):
    def test_antichain_ideals(self):
        self.assertEqual(Poset.antichain(2).ideals(),
                         [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})])

    def test_chain_ideals(self):
        for k in range(1, 6):
            self.assertEqual(len(Poset.chain(k).ideals()), k + 1)

    def test_grid_ideals(self):
        self.assertEqual(len(Poset.product_of_chains(2, 2).ideals()), 6)

    def test_ideal_cap(self):
        with self.assertRaises(ResourceCapExceeded) as ctx:
            Poset.antichain(4).ideals(cap=10)
        self.assertEqual(ctx.exception.cap_name, 'ideal_cap')

    def test_ideals_are_down_closed(self):
        p = Poset.from_covers(5, [(0, 2), (1, 2), (1, 3), (3, 4)])
        for ideal in p.ideals():
            for x in ideal:
                self.assertTrue(p.principal_ideal(x) <= ideal)

    def test_ideal_order_within_cardinality(self):
        pairs = [ideal for ideal in Poset.antichain(3).ideals() if len(ideal) == 2]
        self.assertEqual(pairs, [frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})])

    def test_ideals_closed_under_union_and_intersection(self):
        for n in range(1, 6):
            for p in enumerate_posets(n):
                family = set(p.ideals())
                for a in family:
                    for b in family:
                        self.assertIn(a | b, family)
                        self.assertIn(a & b, family)

    def test_broken_ideal_family_rejected(self):
        p = Poset.chain(2)
        self.assertRaises(InternalConsistencyError, p._check_ideal_closure, [0, 0b10])
        self.assertRaises(InternalConsistencyError, p._check_ideal_closure, [0, 0b11])
        p._check_ideal_closure([0, 0b01, 0b11])

    def test_linear_extension_counts(self):
        self.assertEqual(len(list(Poset.chain(4).linear_extensions())), 1)
        self.assertEqual(len(list(Poset.antichain(3).linear_extensions())), 6)
        self.assertEqual(len(list(Poset.product_of_chains(2, 2).linear_extensions())), 2)

    def test_reference_labeling_is_linear_extension(self):
        p = Poset.from_covers(3, [(2, 0), (1, 0)])
        labeling = p.reference_labeling()
        position = {x: i for i, x in enumerate(labeling)}
        for (x, y) in p.covers:
            self.assertLess(position[x], position[y])


class EnumeratePosetsTest(unittest.TestCase):
    KNOWN_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63}

    def test_counts(self):
        for n, expected in self.KNOWN_COUNTS.items():
            self.assertEqual(len(list(enumerate_posets(n))), expected, f"n={n}")

    def test_pairwise_non_isomorphic(self):
        posets = list(enumerate_posets(4))
        for p, q in combinations(posets, 2):
            self.assertFalse(nx.is_isomorphic(p.hasse_diagram(), q.hasse_diagram()))

    def test_canonical_form_is_invariant(self):
        p = Poset.from_covers(4, [(0, 1), (0, 2), (3, 2)])
        q = p.relabel([2, 3, 1, 0])
        self.assertTrue(p.is_isomorphic(q))
        self.assertFalse(p.is_isomorphic(Poset.chain(4)))

    def test_cover_steps_height_and_coheight(self):
        for n in range(1, 6):
            for p in enumerate_posets(n):
                for (x, y) in p.covers:
                    self.assertGreaterEqual(p.height(y), p.height(x) + 1)
                    self.assertGreaterEqual(p.coheight(x), p.coheight(y) + 1)

    def test_unique_linear_extension_iff_chain(self):
        for n in range(1, 6):
            for p in enumerate_posets(n):
                count = sum(1 for _ in p.linear_extensions())
                self.assertEqual(count == 1, p.is_chain(), repr(p))

    def test_limit(self):
        self.assertRaises(ResourceCapExceeded, lambda: list(enumerate_posets(8)))
        self.assertRaises(InvalidPosetError, lambda: list(enumerate_posets(0)))


class PosetFormatTest(unittest.TestCase):
    GRID_JSON = {"elements": ["a", "b", "c", "d"], "covers": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]}

    def test_json_round_trip(self):
        p = loads_poset(json.dumps(self.GRID_JSON))
        self.assertEqual(p.labels, ('a', 'b', 'c', 'd'))
        self.assertTrue(p.is_isomorphic(Poset.product_of_chains(2, 2)))
        self.assertEqual(loads_poset(json.dumps(p.to_dict())), p)

    def test_text_form(self):
        p = loads_poset("# V shape\n3\n0 2\n1 2\n")
        self.assertEqual(p.covers, frozenset({(0, 2), (1, 2)}))

    def test_unknown_element(self):
        bad = {"elements": ["a"], "covers": [["a", "z"]]}
        self.assertRaises(InvalidPosetError, loads_poset, json.dumps(bad))

    def test_garbage(self):
        self.assertRaises(PosetFormatError, loads_poset, "three\n0 1")
        self.assertRaises(PosetFormatError, loads_poset, "{not json")
        self.assertRaises(PosetFormatError, loads_poset, "2\n0 1 1")

    def test_load_from_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'grid.json'
            path.write_text(json.dumps(self.GRID_JSON))
            self.assertEqual(load_poset(path).size, 4)
            self.assertRaises(PosetFormatError, load_poset, Path(tmp) / 'missing.json')


if __name__ == '__main__':
    unittest.main()
