"""
Schubert cycles of the Grassmannian G(m, n): the distributive lattices
Gamma(X; gamma) = {delta >= gamma} of increasing m-tuples, their join-irreducible
posets, and the levelness pipeline on top of HibiRing.
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from networkx.algorithms.isomorphism import DiGraphMatcher
import networkx as nx

from HibiLevelAJM.backend.errors import (InternalConsistencyError, InvalidSchubertSpecError, NotALatticeError,
                                         NotDistributiveError, TheoremViolation)
from HibiLevelAJM.helpers.bases import BaseComputation
from HibiLevelAJM.helpers.hibi import HibiReport, HibiRing
from HibiLevelAJM.helpers.lattice import DistLattice
from HibiLevelAJM.helpers.poset_core import EXTENSION_CAP_DEFAULT, IDEAL_CAP_DEFAULT, Poset


@dataclass(frozen=True, order=True)
class GrassTuple:
    """
    An index [c_1, ..., c_m] with 1 <= c_1 < ... < c_m <= n. Python ordering is lexicographic;
    the Schubert order is the componentwise one, see leq().
    """
    entries: Tuple[int, ...]
    n: int

    def __post_init__(self):
        entries = tuple(int(c) for c in self.entries)
        object.__setattr__(self, 'entries', entries)
        if not entries:
            raise InvalidSchubertSpecError("an index needs at least one entry")
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise InvalidSchubertSpecError(f"index {list(entries)} is not strictly increasing")
        if entries[0] < 1 or entries[-1] > self.n:
            raise InvalidSchubertSpecError(f"index {list(entries)} leaves [1, {self.n}]")

    @property
    def m(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def leq(self, other: 'GrassTuple') -> bool:
        return all(c <= d for c, d in zip(self.entries, other.entries))

    def meet(self, other: 'GrassTuple') -> 'GrassTuple':
        return GrassTuple(tuple(map(min, self.entries, other.entries)), self.n)

    def join(self, other: 'GrassTuple') -> 'GrassTuple':
        return GrassTuple(tuple(map(max, self.entries, other.entries)), self.n)

    def __str__(self):
        return '[' + ','.join(str(c) for c in self.entries) + ']'


def _check_shape(m: int, n: int):
    if not 1 <= m <= n:
        raise InvalidSchubertSpecError(f"need 1 <= m <= n, got m={m}, n={n}")


def gamma_from_a(m: int, n: int, a: Sequence[int]) -> GrassTuple:
    """
    b_i = n + 1 - a_{m+1-i}. The map is an involution, so it also recovers a from b.

    :raises InvalidSchubertSpecError: a is not an increasing m-tuple in [1, n].
    """
    _check_shape(m, n)
    a = GrassTuple(tuple(a), n)
    if a.m != m:
        raise InvalidSchubertSpecError(f"expected {m} entries, got {list(a.entries)}")
    return GrassTuple(tuple(n + 1 - a[m - 1 - i] for i in range(m)), n)


@dataclass(frozen=True)
class SchubertSpec:
    m: int
    n: int
    gamma: GrassTuple
    a: Tuple[int, ...]

    @classmethod
    def from_gamma(cls, m: int, n: int, gamma: Sequence[int]) -> 'SchubertSpec':
        _check_shape(m, n)
        b = GrassTuple(tuple(gamma), n)
        if b.m != m:
            raise InvalidSchubertSpecError(f"expected {m} entries, got {list(b.entries)}")
        return cls(m, n, b, gamma_from_a(m, n, b.entries).entries)

    @classmethod
    def from_a(cls, m: int, n: int, a: Sequence[int]) -> 'SchubertSpec':
        b = gamma_from_a(m, n, a)
        return cls(m, n, b, tuple(int(c) for c in a))

    @property
    def is_grassmannian(self) -> bool:
        """gamma = [1, ..., m], the whole Grassmannian."""
        return self.gamma.entries == tuple(range(1, self.m + 1))

    def to_dict(self) -> dict:
        return {'m': self.m, 'n': self.n, 'gamma': list(self.gamma.entries), 'a': list(self.a)}

    def __str__(self):
        return f"G({self.m},{self.n}) gamma={self.gamma}"


def all_gammas(m: int, n: int) -> List[SchubertSpec]:
    """Every spec for G(m, n), in lexicographic order of gamma."""
    _check_shape(m, n)
    return [SchubertSpec.from_gamma(m, n, c) for c in combinations(range(1, n + 1), m)]


def gamma_lattice(spec: SchubertSpec, cap: int = IDEAL_CAP_DEFAULT) -> DistLattice:
    """
    Gamma(X; gamma) under the componentwise order, verified distributive and realized as J(P).

    :raises InternalConsistencyError: the set is not closed under componentwise max/min,
        or the lattice checks fail.
    """
    elements = [delta for delta in (GrassTuple(c, spec.n) for c in combinations(range(1, spec.n + 1), spec.m))
                if spec.gamma.leq(delta)]
    members = set(elements)
    for alpha, beta in combinations(elements, 2):
        if alpha.meet(beta) not in members or alpha.join(beta) not in members:
            raise InternalConsistencyError(f"{alpha} and {beta} have a meet or join outside Gamma(X; {spec.gamma})")
    try:
        return DistLattice.from_elements(elements, GrassTuple.leq, cap)
    except (NotALatticeError, NotDistributiveError) as e:
        raise InternalConsistencyError(f"Gamma(X; {spec.gamma}) failed the lattice checks: {e}") from e


@dataclass(frozen=True)
class NNEmbedding:
    """
    found is True when the order-dual of the poset is isomorphic to a finite ideal of N x N;
    cells maps each element label to its (row, column).
    """
    found: bool
    cells: Dict[str, Tuple[int, int]] = field(default_factory=dict)

    @property
    def image(self) -> frozenset:
        return frozenset(self.cells.values())

    def to_dict(self) -> dict:
        return {'found': self.found, 'cells': {k: list(v) for k, v in sorted(self.cells.items())}}


def _young_diagrams(size: int, rows: int, cols: int) -> Iterator[Tuple[int, ...]]:
    def parts(remaining: int, row: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if row == rows:
            return
        for part in range(min(largest, remaining), 0, -1):
            for rest in parts(remaining - part, row + 1, part):
                yield (part,) + rest

    yield from parts(size, 0, cols)


def _diagram_graph(shape: Tuple[int, ...]) -> nx.DiGraph:
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    graph = nx.DiGraph()
    graph.add_nodes_from(cells)
    present = set(cells)
    for (i, j) in cells:
        for up in ((i + 1, j), (i, j + 1)):
            if up in present:
                graph.add_edge((i, j), up)
    return graph


def nn_ideal_check(poset: Poset, rows: Optional[int] = None, cols: Optional[int] = None) -> NNEmbedding:
    """
    Searches the finite ideals of N x N inside [0, rows) x [0, cols) for one whose
    componentwise order is isomorphic to the order-dual of poset. Hasse diagrams are
    compared, which is enough for finite posets.

    :param rows: box height, defaults to |P|.
    :param cols: box width, defaults to |P|.
    """
    size = poset.size
    rows = size if rows is None else rows
    cols = size if cols is None else cols
    dual_graph = poset.dual().hasse_diagram()
    for shape in _young_diagrams(size, rows, cols):
        matcher = DiGraphMatcher(dual_graph, _diagram_graph(shape))
        if matcher.is_isomorphic():
            return NNEmbedding(True, {poset.labels[x]: cell for x, cell in sorted(matcher.mapping.items())})
    return NNEmbedding(False)


def u_gamma_support(spec: SchubertSpec) -> Tuple[Tuple[bool, ...], ...]:
    """
    Zero pattern of the m x n matrix U_gamma: row i (1-based) is live from column b_i on.
    Indexed from 0.
    """
    return tuple(tuple(j >= b for j in range(1, spec.n + 1)) for b in spec.gamma)


@dataclass(frozen=True)
class SchubertReport:
    spec: SchubertSpec
    lattice_size: int
    join_irreducibles: dict
    embedding: NNEmbedding
    hibi: HibiReport

    @property
    def is_level(self) -> bool:
        return self.hibi.is_level

    def to_dict(self) -> dict:
        return {**self.spec.to_dict(),
                'grassmannian': self.spec.is_grassmannian,
                'lattice_size': self.lattice_size,
                'join_irreducibles': self.join_irreducibles,
                'nn_embedding': self.embedding.to_dict(),
                'hibi': self.hibi.to_dict()}


class SchubertCycle(BaseComputation):
    """
    Runs the levelness pipeline for one Schubert cycle:
    lattice Gamma(X; gamma) -> join-irreducible poset P -> N x N ideal check on P ->
    HibiRing(P).analyze(), asserting a purity hypothesis, levelness, and type 1 for the
    whole Grassmannian.
    """
    _CAP_NAMES = ('ideal_cap', 'count_cap', 'enumeration_cap', 'extension_cap')
    _DEFAULT_IDEAL_CAP = IDEAL_CAP_DEFAULT
    _DEFAULT_COUNT_CAP = HibiRing._DEFAULT_COUNT_CAP
    _DEFAULT_ENUMERATION_CAP = HibiRing._DEFAULT_ENUMERATION_CAP
    _DEFAULT_EXTENSION_CAP = EXTENSION_CAP_DEFAULT

    def __init__(self, spec: SchubertSpec, **kwargs):
        super().__init__(**kwargs)
        self.spec = spec
        self._lattice = None

    @property
    def lattice(self) -> DistLattice:
        if self._lattice is None:
            self._lattice = gamma_lattice(self.spec, self._caps['ideal_cap'])
        return self._lattice

    @property
    def join_irreducible_poset(self) -> Poset:
        return self.lattice.base

    def check_level(self) -> SchubertReport:
        spec = self.spec
        poset = self.join_irreducible_poset
        self._logger.info(f"{spec}: |Gamma| = {self.lattice.size}, |P| = {poset.size}")

        embedding = nn_ideal_check(poset, spec.m, spec.n - spec.m)
        if not embedding.found:
            self.log_and_raise_error(TheoremViolation(
                f"{spec}: join-irreducible poset is not dual to an ideal of N x N"))

        report = HibiRing(poset, **self.cap_kwargs).analyze()
        if not (report.filter_purity or report.ideal_purity):
            self.log_and_raise_error(TheoremViolation(f"{spec}: neither purity hypothesis holds"))
        if not report.is_level:
            self.log_and_raise_error(TheoremViolation(f"{spec}: Hibi ring is not level"))
        if spec.is_grassmannian and report.cm_type != 1:
            self.log_and_raise_error(TheoremViolation(
                f"{spec}: Grassmannian coordinate ring has type {report.cm_type}, not 1"))
        return SchubertReport(spec, self.lattice.size, poset.to_dict(), embedding, report)


def sweep(m: int, n: int, **kwargs) -> List[SchubertReport]:
    """check_level for every gamma of G(m, n), in lexicographic order."""
    return [SchubertCycle(spec, **kwargs).check_level() for spec in all_gammas(m, n)]
