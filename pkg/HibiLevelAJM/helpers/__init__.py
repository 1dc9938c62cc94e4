from .poset_core import Poset, ExtendedPoset, enumerate_posets, load_poset, loads_poset
from .lattice import DistLattice
from .hibi import (GradedMap, HibiRing, HibiReport, analyze, search_nonlevel, theorem_scan, lemma_scan)
from .schubert import (GrassTuple, SchubertSpec, SchubertCycle, gamma_from_a, gamma_lattice, nn_ideal_check,
                       u_gamma_support, all_gammas, sweep)
from .sagbi import (Monomial, Polynomial, TermOrder, SagbiVerifier, minor, leading_monomial,
                    lm_multiplicativity_check, standard_monomial_scan, straightening_lm_check)
from .bases import BaseComputation

__all__ = ['Poset', 'ExtendedPoset', 'enumerate_posets', 'load_poset', 'loads_poset',
           'DistLattice',
           'GradedMap', 'HibiRing', 'HibiReport', 'analyze', 'search_nonlevel', 'theorem_scan', 'lemma_scan',
           'GrassTuple', 'SchubertSpec', 'SchubertCycle', 'gamma_from_a', 'gamma_lattice', 'nn_ideal_check',
           'u_gamma_support', 'all_gammas', 'sweep',
           'Monomial', 'Polynomial', 'TermOrder', 'SagbiVerifier', 'minor', 'leading_monomial',
           'lm_multiplicativity_check', 'standard_monomial_scan', 'straightening_lm_check',
           'BaseComputation']
