"""
The Hibi ring of a finite poset P, read through its semigroup of order-reversing maps
P^ -> N (P^ = P with a new bottom -inf and a new top inf, maps send inf to 0, the degree is
the value at -inf). Strictly order-reversing maps index the canonical module.
"""
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from HibiLevelAJM.backend.errors import (InternalConsistencyError, InvalidInputError, PreconditionError,
                                         ResourceCapExceeded, TheoremViolation)
from HibiLevelAJM.helpers.bases import BaseComputation
from HibiLevelAJM.helpers.poset_core import (EXTENSION_CAP_DEFAULT, IDEAL_CAP_DEFAULT, POSET_LIMIT_DEFAULT, Poset,
                                             enumerate_posets)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedMap:
    """
    A map nu: P^ -> Z stored as a tuple indexed like ExtendedPoset: the base elements
    0..n-1, then -inf (index n), then inf (index n+1). nu(inf) is always 0.
    """
    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.values) < 2:
            raise InvalidInputError("a graded map needs values at -inf and inf")
        if self.values[-1] != 0:
            raise InvalidInputError("a graded map must send inf to 0")

    @classmethod
    def from_mapping(cls, poset: Poset, mapping: Mapping[str, int]) -> 'GradedMap':
        """
        :param poset: the base poset P.
        :param mapping: label -> value, with the key '-inf' for the degree; 'inf' may be omitted.
        """
        try:
            values = [int(mapping[label]) for label in poset.labels] + [int(mapping['-inf'])]
        except KeyError as e:
            raise InvalidInputError(f"graded map has no value for {e.args[0]!r}") from None
        return cls(tuple(values) + (int(mapping.get('inf', 0)),))

    @classmethod
    def indicator(cls, poset: Poset, ideal) -> 'GradedMap':
        """The degree-one generator mu_I: 1 on I and on -inf, 0 elsewhere."""
        return cls(tuple(1 if x in ideal else 0 for x in range(poset.size)) + (1, 0))

    @property
    def degree(self) -> int:
        return self.values[-2]

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def __len__(self):
        return len(self.values)

    def __add__(self, other: 'GradedMap') -> 'GradedMap':
        return GradedMap(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: 'GradedMap') -> 'GradedMap':
        return GradedMap(tuple(a - b for a, b in zip(self.values, other.values)))

    def as_dict(self, poset: Poset) -> Dict[str, int]:
        return dict(zip(list(poset.labels) + ['-inf', 'inf'], self.values))


@dataclass(frozen=True)
class GeneratorScan:
    generators: Tuple[GradedMap, ...]
    cap: int
    stabilized: bool
    counts_by_degree: Dict[int, int]

    @property
    def degrees(self) -> List[int]:
        return sorted(g.degree for g in self.generators)


@dataclass(frozen=True)
class HibiReport:
    """
    The invariants of one Hibi ring. ``cm_type`` is serialized as "type".
    """
    poset: dict
    rank_phat: int
    dim: int
    hilbert_prefix: Tuple[int, ...]
    h_vector: Tuple[int, ...]
    generator_degrees: Tuple[int, ...]
    cm_type: int
    is_level: bool
    filter_purity: bool
    ideal_purity: bool
    generator_cap_used: int
    stabilized: bool

    def to_dict(self) -> dict:
        return {'poset': self.poset,
                'rank_phat': self.rank_phat,
                'dim': self.dim,
                'hilbert_prefix': list(self.hilbert_prefix),
                'h_vector': list(self.h_vector),
                'generator_degrees': list(self.generator_degrees),
                'type': self.cm_type,
                'is_level': self.is_level,
                'filter_purity': self.filter_purity,
                'ideal_purity': self.ideal_purity,
                'generator_cap_used': self.generator_cap_used,
                'stabilized': self.stabilized}


@dataclass(frozen=True)
class LemmaReport:
    """
    Outcome of verify_lemma on one poset. A map on which a guarantee fails raises
    TheoremViolation, so a returned report always has failures == 0.
    """
    poset: dict
    forms: Tuple[str, ...]
    max_sweep_degree: int
    exhaustive_checked: int
    random_checked: int
    failures: int = 0

    def to_dict(self) -> dict:
        return {'poset': self.poset, 'forms': list(self.forms), 'max_sweep_degree': self.max_sweep_degree,
                'exhaustive_checked': self.exhaustive_checked, 'random_checked': self.random_checked,
                'failures': self.failures}


@dataclass
class ScanSummary:
    """
    Counts from theorem_scan. Any counterexample raises TheoremViolation or
    InternalConsistencyError during the scan, so a returned summary always has counterexamples == 0.
    """
    max_n: int
    scanned: int = 0
    filter_pure: int = 0
    ideal_pure: int = 0
    level: int = 0
    non_level: int = 0
    not_stabilized: int = 0
    descent_checks: int = 0
    counterexamples: int = 0
    by_size: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {'max_n': self.max_n, 'scanned': self.scanned, 'filter_pure': self.filter_pure,
                'ideal_pure': self.ideal_pure, 'level': self.level, 'non_level': self.non_level,
                'not_stabilized': self.not_stabilized, 'descent_checks': self.descent_checks,
                'counterexamples': self.counterexamples, 'by_size': dict(self.by_size)}


MapLike = Union[GradedMap, Sequence[int]]


def _values(nu: MapLike) -> Tuple[int, ...]:
    return nu.values if isinstance(nu, GradedMap) else tuple(nu)


class HibiRing(BaseComputation):
    """
    HibiRing computes the invariants of the Hibi ring R_K(J(P)) of a finite poset P:
    Hilbert function, h-vector (two independent ways), minimal generators of the canonical
    module, Cohen-Macaulay type, levelness, the purity hypotheses of the levelness theorem,
    and the nu0 construction that proves it.

    Resource caps (keyword overrides): ideal_cap, count_cap, enumeration_cap, extension_cap.
    ``generator_cap`` fixes the highest degree scanned for canonical generators
    (default rank(P^) + |P| + 1, and never below rank(P^) + 2).

    Methods:
        is_order_reversing(nu) / is_strict(nu)
        hilbert_function(N)
        h_vector() / h_vector_descents()
        strict_maps(degree)
        is_minimal_generator(nu, exhaustive=False) / reducing_ideal(nu)
        canonical_generators(cap=None)
        filter_purity() / ideal_purity()
        nu0(nu, dual=False)
        verify_lemma(extra=3, trials=0, seed=None)
        analyze()
    """
    _CAP_NAMES = ('ideal_cap', 'count_cap', 'enumeration_cap', 'extension_cap')
    _DEFAULT_IDEAL_CAP = IDEAL_CAP_DEFAULT
    _DEFAULT_COUNT_CAP = 10 ** 9
    _DEFAULT_ENUMERATION_CAP = 10 ** 7
    _DEFAULT_EXTENSION_CAP = EXTENSION_CAP_DEFAULT

    def __init__(self, poset: Poset, **kwargs):
        super().__init__(**kwargs)
        self.poset = poset
        self.phat = poset.extended()
        self._generator_cap = kwargs.get('generator_cap')
        self._hilbert_cache: Dict[int, int] = {}

    @property
    def rank_phat(self) -> int:
        return self.phat.rank()

    @property
    def dim(self) -> int:
        return self.poset.size + 1

    # membership ---------------------------------------------------------------------------

    def is_order_reversing(self, nu: MapLike) -> bool:
        """Membership in T-bar(P); comparing cover pairs of P^ is enough."""
        values = _values(nu)
        return values[self.phat.top] == 0 and all(values[x] >= values[y] for (x, y) in self.phat.covers)

    def is_strict(self, nu: MapLike) -> bool:
        """Membership in T(P)."""
        values = _values(nu)
        return values[self.phat.top] == 0 and all(values[x] > values[y] for (x, y) in self.phat.covers)

    # Hilbert function and h-vector -----------------------------------------------------------

    def _count_order_reversing(self, bound: int) -> int:
        poset = self.poset
        n = poset.size
        if n == 0:
            return 1
        # assign top-down along a fixed linear extension; the frontier is the set of assigned
        # elements that still have an unassigned lower cover
        order = tuple(reversed(poset.topological_order))
        position = {x: i for i, x in enumerate(order)}
        frontiers = [tuple(y for y in order[:i + 1] if any(position[z] > i for z in poset.lower_covers(y)))
                     for i in range(n)]
        memo: Dict[tuple, int] = {}

        def count(i: int, state: tuple) -> int:
            if i == n:
                return 1
            key = (i, state)
            if key in memo:
                return memo[key]
            assigned = dict(zip(frontiers[i - 1], state)) if i else {}
            x = order[i]
            low = max((assigned[y] for y in poset.upper_covers(x)), default=0)
            total = 0
            for v in range(low, bound + 1):
                assigned[x] = v
                total += count(i + 1, tuple(assigned[y] for y in frontiers[i]))
            memo[key] = total
            return total

        return count(0, ())

    def hilbert_function(self, N: int) -> List[int]:
        """
        :param N: last degree.
        :return: [H(0), ..., H(N)], H(k) = number of order-reversing maps of degree k.
        :raises ResourceCapExceeded: when some H(k) exceeds count_cap.
        """
        for k in range(N + 1):
            if k not in self._hilbert_cache:
                value = self._count_order_reversing(k)
                self.check_cap('count_cap', value)
                self._hilbert_cache[k] = value
        return [self._hilbert_cache[k] for k in range(N + 1)]

    def h_vector(self) -> List[int]:
        """
        Coefficients of (1-t)^(|P|+1) * sum_{k<=2|P|+2} H(k) t^k; everything above index |P|
        must vanish.

        :raises InternalConsistencyError: nonzero tail or negative entry.
        """
        p = self.poset.size
        d = p + 1
        top = 2 * p + 2
        hilbert = self.hilbert_function(top)
        coefficients = [sum((-1) ** j * comb(d, j) * hilbert[k - j] for j in range(min(d, k) + 1))
                        for k in range(top + 1)]
        if any(coefficients[p + 1:]):
            self.log_and_raise_error(InternalConsistencyError(
                f"h-vector has a nonzero tail beyond index {p}: {coefficients}"))
        h = coefficients[:p + 1]
        if any(c < 0 for c in h):
            self.log_and_raise_error(InternalConsistencyError(f"negative h-vector entry: {h}"))
        while len(h) > 1 and h[-1] == 0:
            h.pop()
        return h

    def check_hilbert_consistency(self, hilbert: Sequence[int], h: Sequence[int]):
        """
        H(k) must equal sum_i h_i * C(k - i + d - 1, d - 1) for every computed k.

        :raises InternalConsistencyError: on the first mismatch.
        """
        d = self.dim
        for k, value in enumerate(hilbert):
            expected = sum(h_i * comb(k - i + d - 1, d - 1) for i, h_i in enumerate(h) if k >= i)
            if expected != value:
                self.log_and_raise_error(InternalConsistencyError(
                    f"H({k}) = {value} but the h-vector predicts {expected}"))

    def h_vector_descents(self) -> List[int]:
        """
        h_i = number of linear extensions with exactly i descents with respect to the
        reference (natural) labeling of P.

        :raises ResourceCapExceeded: more than extension_cap linear extensions.
        """
        reference = self.poset.reference_labeling()
        rank_of = {x: i for i, x in enumerate(reference)}
        counts: Counter = Counter()
        total = 0
        for extension in self.poset.linear_extensions():
            total += 1
            self.check_cap('extension_cap', total)
            counts[sum(1 for a, b in zip(extension, extension[1:]) if rank_of[a] > rank_of[b])] += 1
        return [counts.get(i, 0) for i in range(max(counts) + 1)]

    # canonical module ----------------------------------------------------------------------------

    def strict_maps(self, degree: int) -> Iterator[GradedMap]:
        """
        Yields every nu in T(P) with nu(-inf) = degree. Values are assigned top-down;
        x takes values between (max over upper covers) + 1 and degree - 1 - height(x).
        """
        poset = self.poset
        n = poset.size
        if n == 0:
            if degree >= 1:
                yield GradedMap((degree, 0))
            return
        order = tuple(reversed(poset.topological_order))
        high = [degree - 1 - poset.height(x) for x in range(n)]
        values = [0] * n

        def assign(i: int) -> Iterator[GradedMap]:
            if i == n:
                yield GradedMap(tuple(values) + (degree, 0))
                return
            x = order[i]
            low = max((values[y] for y in poset.upper_covers(x)), default=0) + 1
            for v in range(low, high[x] + 1):
                values[x] = v
                yield from assign(i + 1)

        yield from assign(0)

    def random_strict_map(self, degree: int, rng: random.Random) -> GradedMap:
        """
        A random element of T(P) of the given degree; every choice stays feasible because
        x never exceeds degree - 1 - height(x).

        :raises PreconditionError: degree below rank(P^).
        """
        if degree < self.rank_phat:
            raise PreconditionError(f"no strictly order-reversing map of degree {degree} < {self.rank_phat}")
        poset = self.poset
        values = [0] * poset.size
        for x in reversed(poset.topological_order):
            low = max((values[y] for y in poset.upper_covers(x)), default=0) + 1
            values[x] = rng.randint(low, degree - 1 - poset.height(x))
        return GradedMap(tuple(values) + (degree, 0))

    def reducing_ideal(self, nu: MapLike) -> Optional[frozenset]:
        """
        Finds an ideal I with nu - mu_I still strictly order reversing, or None.

        Starting from -inf, walk down along every cover and up along the covers where nu drops
        by exactly one. If inf is never reached, the reached set is down-closed, no tight cover
        leaves it, and subtracting its indicator keeps nu strict; if inf is reached, every
        candidate ideal is crossed by a tight cover.
        """
        values = _values(nu)
        phat = self.phat
        reached = {phat.bot}
        stack = [phat.bot]
        while stack:
            x = stack.pop()
            for y in phat.lower_covers(x):
                if y not in reached:
                    reached.add(y)
                    stack.append(y)
            for y in phat.upper_covers(x):
                if y not in reached and values[x] - values[y] == 1:
                    reached.add(y)
                    stack.append(y)
        if phat.top in reached:
            return None
        return frozenset(reached - {phat.bot})

    def is_minimal_generator(self, nu: MapLike, exhaustive: bool = False) -> bool:
        """
        nu in T(P) is a minimal generator of the canonical module iff nu - mu_I is not in T(P)
        for every ideal I of P (I empty included).

        :param exhaustive: try every ideal instead of the closure shortcut.
        :raises PreconditionError: nu is not strictly order reversing.
        """
        if not self.is_strict(nu):
            raise PreconditionError("only strictly order-reversing maps can generate the canonical module")
        if not exhaustive:
            return self.reducing_ideal(nu) is None
        values = _values(nu)
        for mask in self.poset.ideal_masks(self._caps['ideal_cap']):
            ideal = {x for x in range(self.poset.size) if (mask >> x) & 1}
            if self.is_strict(GradedMap(values) - GradedMap.indicator(self.poset, ideal)):
                return False
        return True

    def default_generator_cap(self) -> int:
        if self._generator_cap is not None:
            return self._generator_cap
        # two empty degrees above rank(P^) are needed before a scan can count as stabilized
        return max(self.rank_phat + self.poset.size + 1, self.rank_phat + 2)

    def canonical_generators(self, cap: Optional[int] = None) -> GeneratorScan:
        """
        Scans degrees rank(P^)..cap for minimal generators of the canonical module.
        ``stabilized`` is True iff the two highest scanned degrees held no generator.

        :raises PreconditionError: cap below rank(P^).
        :raises ResourceCapExceeded: more than enumeration_cap strict maps visited.
        """
        r = self.rank_phat
        cap = self.default_generator_cap() if cap is None else cap
        if cap < r:
            raise PreconditionError(f"generator cap {cap} is below rank(P^) = {r}")
        generators: List[GradedMap] = []
        counts_by_degree: Dict[int, int] = {}
        visited = 0
        for degree in range(r, cap + 1):
            found = []
            for nu in self.strict_maps(degree):
                visited += 1
                self.check_cap('enumeration_cap', visited)
                if self.reducing_ideal(nu) is None:
                    found.append(nu)
            counts_by_degree[degree] = len(found)
            generators.extend(sorted(found, key=lambda g: g.values))
        stabilized = cap >= r + 1 and counts_by_degree[cap] == 0 and counts_by_degree[cap - 1] == 0
        if not stabilized:
            self._logger.warning(f"generator scan up to degree {cap} did not stabilize for {self.poset!r}")
        return GeneratorScan(tuple(generators), cap, stabilized, counts_by_degree)

    # purity and the construction lemma ------------------------------------------------------------

    @cached_property
    def _filter_purity(self) -> bool:
        poset, phat = self.poset, self.phat
        by_filters = all(poset.is_pure(poset.principal_filter(x)) for x in range(poset.size))
        by_covers = all(phat.coheight(x) == phat.coheight(y) + 1 for (x, y) in poset.covers)
        if by_filters != by_covers:
            self.log_and_raise_error(InternalConsistencyError(
                "filter purity disagrees with its cover-wise coheight form"))
        return by_filters

    @cached_property
    def _ideal_purity(self) -> bool:
        poset, phat = self.poset, self.phat
        by_ideals = all(poset.is_pure(poset.principal_ideal(x)) for x in range(poset.size))
        by_covers = all(phat.height(y) == phat.height(x) + 1 for (x, y) in poset.covers)
        if by_ideals != by_covers:
            self.log_and_raise_error(InternalConsistencyError(
                "ideal purity disagrees with its cover-wise height form"))
        return by_ideals

    def filter_purity(self) -> bool:
        """True iff {y >= x} is pure for every x in P."""
        return self._filter_purity

    def ideal_purity(self) -> bool:
        """True iff {y <= x} is pure for every x in P."""
        return self._ideal_purity

    def nu0(self, nu: MapLike, dual: bool = False) -> GradedMap:
        """
        The minimal-degree part of nu. With r = rank(P^) and d = nu(-inf):
            nu0(x) = max{coht(x), r - d + nu(x)}       (filter-pure P)
            nu0(x) = min{r - ht(x), nu(x)}              (ideal-pure P, dual=True)
        Guarantees, all asserted: nu0 in T(P), nu0(-inf) = r, nu - nu0 in T-bar(P), and on every
        cover x < y of P^: nu0(x) > nu0(y) and nu(x) - nu(y) >= nu0(x) - nu0(y).

        :raises PreconditionError: nu not strict, or the purity hypothesis does not hold.
        :raises TheoremViolation: a guarantee fails.
        """
        values = _values(nu)
        if not self.is_strict(values):
            raise PreconditionError("nu must be strictly order reversing")
        if dual and not self.ideal_purity():
            raise PreconditionError("the height form needs every principal ideal to be pure")
        if not dual and not self.filter_purity():
            raise PreconditionError("the coheight form needs every principal filter to be pure")

        phat = self.phat
        r = self.rank_phat
        degree = values[phat.bot]
        if dual:
            nu0 = tuple(min(r - phat.height(x), values[x]) for x in range(phat.size))
        else:
            nu0 = tuple(max(phat.coheight(x), r - degree + values[x]) for x in range(phat.size))
        result = GradedMap(nu0)
        self._assert_lemma(values, result)
        return result

    def _assert_lemma(self, values: Tuple[int, ...], nu0: GradedMap):
        phat = self.phat
        for (x, y) in phat.covers:
            if not (nu0[x] > nu0[y] and values[x] - values[y] >= nu0[x] - nu0[y]):
                self.log_and_raise_error(TheoremViolation(
                    f"cover claim fails on {phat.labels[x]} < {phat.labels[y]} for nu={values}, nu0={nu0.values}"))
        if nu0.degree != self.rank_phat:
            self.log_and_raise_error(TheoremViolation(f"nu0 has degree {nu0.degree}, not {self.rank_phat}"))
        if not self.is_strict(nu0):
            self.log_and_raise_error(TheoremViolation(f"nu0={nu0.values} is not strictly order reversing"))
        if not self.is_order_reversing(GradedMap(values) - nu0):
            self.log_and_raise_error(TheoremViolation(f"nu - nu0 is not order reversing for nu={values}"))

    def lemma_forms(self) -> Tuple[str, ...]:
        forms = []
        if self.filter_purity():
            forms.append('coheight')
        if self.ideal_purity():
            forms.append('height')
        return tuple(forms)

    def verify_lemma(self, extra: int = 3, trials: int = 0, seed: Optional[int] = None) -> LemmaReport:
        """
        Applies nu0 to every nu in T(P) of degree up to rank(P^) + extra, then to ``trials``
        random strict maps of higher degree drawn with a seeded generator.

        :raises PreconditionError: P has neither pure filters nor pure ideals.
        """
        forms = self.lemma_forms()
        if not forms:
            raise PreconditionError("neither every principal filter nor every principal ideal is pure")
        r = self.rank_phat
        exhaustive = 0
        for degree in range(r, r + extra + 1):
            for nu in self.strict_maps(degree):
                exhaustive += 1
                self.check_cap('enumeration_cap', exhaustive)
                for form in forms:
                    self.nu0(nu, dual=form == 'height')
        rng = random.Random(seed)
        for _ in range(trials):
            nu = self.random_strict_map(rng.randint(r, r + extra + 1 + self.poset.size), rng)
            for form in forms:
                self.nu0(nu, dual=form == 'height')
        self._logger.debug(f"lemma held on {exhaustive} swept and {trials} random maps")
        return LemmaReport(self.poset.to_dict(), forms, r + extra, exhaustive, trials)

    # report --------------------------------------------------------------------------------------

    def analyze(self) -> HibiReport:
        """
        Computes every invariant and asserts the levelness theorem (filter purity gives
        generators all in degree rank(P^)), its dual (ideal purity gives a single generator
        degree) and the h-vector/type relation of level rings.

        :raises TheoremViolation: a purity hypothesis holds but the ring is not level.
        :raises InternalConsistencyError: the h-vector and the generators disagree.
        """
        r = self.rank_phat
        p = self.poset.size
        hilbert = self.hilbert_function(2 * p + 2)
        h = self.h_vector()
        self.check_hilbert_consistency(hilbert, h)

        scan = self.canonical_generators()
        degrees = scan.degrees
        cm_type = len(degrees)
        if cm_type == 0:
            self.log_and_raise_error(InternalConsistencyError("canonical module without generators"))
        is_level = len(set(degrees)) == 1
        filter_pure, ideal_pure = self.filter_purity(), self.ideal_purity()

        if filter_pure and (not is_level or degrees[0] != r):
            self.log_and_raise_error(TheoremViolation(
                f"pure filters but generator degrees {degrees} for {self.poset!r}"))
        if ideal_pure and not is_level:
            self.log_and_raise_error(TheoremViolation(
                f"pure ideals but generator degrees {degrees} for {self.poset!r}"))
        if scan.stabilized:
            if is_level and h[-1] != cm_type:
                self.log_and_raise_error(InternalConsistencyError(
                    f"level ring with h_s = {h[-1]} but type {cm_type}"))
            if not is_level and h[-1] >= cm_type:
                self.log_and_raise_error(InternalConsistencyError(
                    f"non-level ring with h_s = {h[-1]} >= type {cm_type}"))

        return HibiReport(poset=self.poset.to_dict(), rank_phat=r, dim=self.dim,
                          hilbert_prefix=tuple(hilbert), h_vector=tuple(h), generator_degrees=tuple(degrees),
                          cm_type=cm_type, is_level=is_level, filter_purity=filter_pure,
                          ideal_purity=ideal_pure, generator_cap_used=scan.cap, stabilized=scan.stabilized)


def analyze(poset: Poset, **kwargs) -> HibiReport:
    return HibiRing(poset, **kwargs).analyze()


def _scan_posets(max_n: int, poset_limit: int) -> Iterator[Poset]:
    if max_n > poset_limit:
        raise ResourceCapExceeded(cap_name='poset_limit', cap=poset_limit)
    for n in range(1, max_n + 1):
        yield from enumerate_posets(n, poset_limit)


def search_nonlevel(max_n: int, poset_limit: int = POSET_LIMIT_DEFAULT, **kwargs) -> List[Tuple[Poset, HibiReport]]:
    """
    :return: every poset on at most max_n elements (up to isomorphism) whose Hibi ring is not level.
    :raises TheoremViolation: a returned instance satisfies one of the purity hypotheses.
    """
    found = []
    for poset in _scan_posets(max_n, poset_limit):
        report = analyze(poset, **kwargs)
        if not report.is_level:
            if report.filter_purity or report.ideal_purity:
                raise TheoremViolation(f"non-level ring with a purity hypothesis: {poset!r}")
            found.append((poset, report))
    logger.info(f"{len(found)} non-level posets on at most {max_n} elements")
    return found


def theorem_scan(max_n: int, check_descents: bool = True, poset_limit: int = POSET_LIMIT_DEFAULT,
                 **kwargs) -> ScanSummary:
    """
    Analyzes every poset on at most max_n elements; analyze() raises on any counterexample
    to the theorem or its dual. Optionally cross-checks the h-vector against the descent
    statistic of linear extensions.
    """
    summary = ScanSummary(max_n=max_n)
    for poset in _scan_posets(max_n, poset_limit):
        ring = HibiRing(poset, **kwargs)
        report = ring.analyze()
        summary.scanned += 1
        summary.by_size[poset.size] = summary.by_size.get(poset.size, 0) + 1
        summary.filter_pure += report.filter_purity
        summary.ideal_pure += report.ideal_purity
        summary.level += report.is_level
        summary.non_level += not report.is_level
        summary.not_stabilized += not report.stabilized
        if check_descents:
            if list(report.h_vector) != ring.h_vector_descents():
                raise InternalConsistencyError(f"h-vector and descent oracle disagree on {poset!r}")
            summary.descent_checks += 1
    logger.info(f"theorem scan: {summary.scanned} posets on at most {max_n} elements, by size {summary.by_size}")
    return summary


def lemma_scan(max_n: int, extra: int = 3, trials: int = 0, seed: Optional[int] = None,
               poset_limit: int = POSET_LIMIT_DEFAULT, **kwargs) -> List[LemmaReport]:
    """verify_lemma over every poset on at most max_n elements with pure filters or pure ideals."""
    reports = []
    for poset in _scan_posets(max_n, poset_limit):
        ring = HibiRing(poset, **kwargs)
        if ring.lemma_forms():
            reports.append(ring.verify_lemma(extra=extra, trials=trials, seed=seed))
    return reports
