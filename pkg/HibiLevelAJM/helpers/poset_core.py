"""
Finite posets stored as a dense order table, with the order queries the Hibi ring
computations need (rank, height, coheight, purity, ideals, linear extensions) and
exhaustive generation of small posets up to isomorphism.
"""
import json
import logging
from functools import cached_property, lru_cache
from itertools import permutations, product
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from HibiLevelAJM.backend.errors import (CycleDetectedError, EmptyPosetError, InternalConsistencyError,
                                         InvalidPosetError, PosetFormatError, ResourceCapExceeded)

logger = logging.getLogger(__name__)

IDEAL_CAP_DEFAULT = 10 ** 7
EXTENSION_CAP_DEFAULT = 10 ** 7
POSET_LIMIT_DEFAULT = 7

Pair = Tuple[int, int]


class Poset:
    """
    An immutable finite poset on the indices 0..size-1.

    The full order relation is kept as a size x size boolean table; the cover
    relation is derived from it. Elements keep their input order everywhere so that
    results are reproducible.

    :param labels: display names, one per element.
    :param leq: leq[i][j] is True iff element i <= element j.
    :param covers: optional precomputed cover relation (trusted, used by from_covers).
    :raises InvalidPosetError: when leq is not reflexive, antisymmetric and transitive.
    """

    def __init__(self, labels: Sequence, leq: Sequence[Sequence[bool]], covers: Optional[Iterable[Pair]] = None):
        self._size = len(labels)
        self._labels = tuple(str(x) for x in labels)
        self._leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self._validate()
        if covers is None:
            covers = self._derive_covers()
        self._covers = frozenset((int(x), int(y)) for x, y in covers)

    def _validate(self):
        n = self._size
        if len(self._leq) != n or any(len(row) != n for row in self._leq):
            raise InvalidPosetError(f"order table must be {n}x{n}")
        for i in range(n):
            if not self._leq[i][i]:
                raise InvalidPosetError(f"order is not reflexive at {self._labels[i]}")
            for j in range(i + 1, n):
                if self._leq[i][j] and self._leq[j][i]:
                    raise InvalidPosetError(
                        f"order is not antisymmetric: {self._labels[i]} and {self._labels[j]}")
        for i in range(n):
            for j in range(n):
                if self._leq[i][j]:
                    for k in range(n):
                        if self._leq[j][k] and not self._leq[i][k]:
                            raise InvalidPosetError("order is not transitive")

    def _derive_covers(self) -> List[Pair]:
        n = self._size
        covers = []
        for x in range(n):
            for y in range(n):
                if x != y and self._leq[x][y] and not any(
                        z not in (x, y) and self._leq[x][z] and self._leq[z][y] for z in range(n)):
                    covers.append((x, y))
        return covers

    # construction ------------------------------------------------------------------

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Pair], labels: Optional[Sequence] = None) -> 'Poset':
        """
        Builds the poset whose order is the reflexive-transitive closure of the given pairs.
        The stored cover relation is the transitive reduction, so redundant input pairs are dropped.

        :param n: number of elements.
        :type n: int
        :param covers: pairs (i, j) meaning i is below j.
        :param labels: optional display names, defaults to "0".."n-1".
        :return: the poset.
        :rtype: Poset
        :raises InvalidPosetError: index out of range or wrong label count.
        :raises CycleDetectedError: the pairs contain a cycle.
        """
        if n < 0:
            raise InvalidPosetError("size must be non-negative")
        labels = [str(i) for i in range(n)] if labels is None else list(labels)
        if len(labels) != n:
            raise InvalidPosetError(f"expected {n} labels, got {len(labels)}")
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        for pair in covers:
            x, y = pair
            if not (isinstance(x, int) and isinstance(y, int)) or not (0 <= x < n and 0 <= y < n):
                raise InvalidPosetError(f"cover pair {tuple(pair)} has an index outside [0, {n})")
            graph.add_edge(x, y)
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle:
            raise CycleDetectedError(cycle=[labels[u] for u, _ in cycle] + [labels[cycle[0][0]]])

        closure = nx.transitive_closure_dag(graph)
        leq = [[i == j or closure.has_edge(i, j) for j in range(n)] for i in range(n)]
        reduction = nx.transitive_reduction(graph)
        return cls(labels, leq, covers=reduction.edges())

    @classmethod
    def from_leq(cls, labels: Sequence, leq: Sequence[Sequence[bool]]) -> 'Poset':
        return cls(labels, leq)

    @classmethod
    def chain(cls, k: int) -> 'Poset':
        return cls.from_covers(k, [(i, i + 1) for i in range(k - 1)])

    @classmethod
    def antichain(cls, k: int) -> 'Poset':
        return cls.from_covers(k, [])

    @classmethod
    def product_of_chains(cls, a: int, b: int) -> 'Poset':
        """
        The grid [a] x [b] with the componentwise order; element (i, j) has index i*b + j
        and label "(i+1,j+1)".
        """
        labels = [f"({i + 1},{j + 1})" for i in range(a) for j in range(b)]
        covers = [(i * b + j, (i + 1) * b + j) for i in range(a - 1) for j in range(b)]
        covers += [(i * b + j, i * b + j + 1) for i in range(a) for j in range(b - 1)]
        return cls.from_covers(a * b, covers, labels)

    # basic accessors ---------------------------------------------------------------

    @property
    def size(self) -> int:
        return self._size

    def __len__(self):
        return self._size

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def covers(self) -> frozenset:
        return self._covers

    @property
    def order_table(self) -> Tuple[Tuple[bool, ...], ...]:
        return self._leq

    def leq(self, x: int, y: int) -> bool:
        return self._leq[x][y]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self._leq[x][y]

    def index_of(self, label: str) -> int:
        try:
            return self._labels.index(str(label))
        except ValueError:
            raise InvalidPosetError(f"unknown element {label!r}") from None

    @cached_property
    def _upper_covers(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(y for (x, y) in self._covers if x == i)) for i in range(self._size))

    @cached_property
    def _lower_covers(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(x for (x, y) in self._covers if y == i)) for i in range(self._size))

    def upper_covers(self, x: int) -> Tuple[int, ...]:
        return self._upper_covers[x]

    def lower_covers(self, x: int) -> Tuple[int, ...]:
        return self._lower_covers[x]

    @cached_property
    def topological_order(self) -> Tuple[int, ...]:
        """
        A fixed linear extension: elements sorted by the size of their principal ideal,
        ties broken by index.
        """
        return tuple(sorted(range(self._size),
                            key=lambda x: (sum(self._leq[y][x] for y in range(self._size)), x)))

    def hasse_diagram(self) -> nx.DiGraph:
        """
        :return: the cover relation as a directed graph on 0..size-1, edges pointing upwards.
        :rtype: nx.DiGraph
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self._size))
        graph.add_edges_from(sorted(self._covers))
        return graph

    # rank, height, coheight ----------------------------------------------------------

    @cached_property
    def _heights(self) -> Tuple[int, ...]:
        heights = [0] * self._size
        for x in self.topological_order:
            heights[x] = max((heights[y] + 1 for y in self._lower_covers[x]), default=0)
        return tuple(heights)

    @cached_property
    def _coheights(self) -> Tuple[int, ...]:
        coheights = [0] * self._size
        for x in reversed(self.topological_order):
            coheights[x] = max((coheights[y] + 1 for y in self._upper_covers[x]), default=0)
        return tuple(coheights)

    def rank(self) -> int:
        """
        :return: the maximum length of a chain.
        :raises EmptyPosetError: for the empty poset.
        """
        if self._size == 0:
            raise EmptyPosetError()
        return max(self._heights)

    def height(self, x: int) -> int:
        """Rank of the principal ideal {y <= x}."""
        return self._heights[x]

    def coheight(self, x: int) -> int:
        """Rank of the principal filter {y >= x}."""
        return self._coheights[x]

    # subsets -------------------------------------------------------------------------

    def principal_filter(self, x: int) -> frozenset:
        return frozenset(y for y in range(self._size) if self._leq[x][y])

    def principal_ideal(self, x: int) -> frozenset:
        return frozenset(y for y in range(self._size) if self._leq[y][x])

    def induced(self, subset: Iterable[int]) -> 'Poset':
        """
        :param subset: element indices.
        :return: the induced subposet, elements kept in increasing index order.
        :rtype: Poset
        """
        members = sorted(set(subset))
        return Poset([self._labels[x] for x in members],
                     [[self._leq[x][y] for y in members] for x in members])

    def maximal_chain_lengths(self, subset: Optional[Iterable[int]] = None) -> frozenset:
        """
        :param subset: optional subset; the induced order is used.
        :return: the set of lengths of the maximal chains.
        :raises EmptyPosetError: for an empty subset.
        """
        sub = self if subset is None else self.induced(subset)
        if sub.size == 0:
            raise EmptyPosetError()
        # maximal chains are the saturated paths from a minimal to a maximal element
        lengths = [frozenset()] * sub.size
        for x in reversed(sub.topological_order):
            ups = sub.upper_covers(x)
            lengths[x] = frozenset({0}) if not ups else frozenset(l + 1 for y in ups for l in lengths[y])
        minimal = [x for x in range(sub.size) if not sub.lower_covers(x)]
        return frozenset().union(*(lengths[x] for x in minimal))

    def is_pure(self, subset: Optional[Iterable[int]] = None) -> bool:
        """
        :param subset: optional subset; the induced order is used.
        :return: True iff all maximal chains of the (sub)poset have the same length.
        :raises EmptyPosetError: for an empty subset.
        """
        return len(self.maximal_chain_lengths(subset)) == 1

    def is_chain(self) -> bool:
        return all(self._leq[x][y] or self._leq[y][x] for x in range(self._size) for y in range(self._size))

    def dual(self) -> 'Poset':
        n = self._size
        return Poset(self._labels, [[self._leq[j][i] for j in range(n)] for i in range(n)],
                     covers=[(y, x) for (x, y) in self._covers])

    def extended(self) -> 'ExtendedPoset':
        return ExtendedPoset(self)

    # ideals and linear extensions ------------------------------------------------------

    @cached_property
    def _lower_cover_masks(self) -> Tuple[int, ...]:
        return tuple(sum(1 << y for y in self._lower_covers[x]) for x in range(self._size))

    def ideal_masks(self, cap: int = IDEAL_CAP_DEFAULT) -> List[int]:
        """
        All poset ideals as bitmasks (bit x set iff x is in the ideal), ordered by
        cardinality, then lexicographically on the sorted member indices, so {0, 2} comes
        before {1, 2}. On characteristic sequences (x_0, x_1, ...) this is decreasing
        lexicographic order.
        The family is checked to be closed under union and intersection.

        :param cap: maximum number of ideals to produce.
        :raises ResourceCapExceeded: when there are more than cap ideals.
        """
        order = self.topological_order
        lower = self._lower_cover_masks
        n = self._size
        found: List[int] = []

        def extend(pos: int, mask: int):
            if pos == n:
                found.append(mask)
                if len(found) > cap:
                    raise ResourceCapExceeded(cap_name='ideal_cap', cap=cap)
                return
            x = order[pos]
            extend(pos + 1, mask)
            if lower[x] & mask == lower[x]:
                extend(pos + 1, mask | (1 << x))

        extend(0, 0)
        self._check_ideal_closure(found)
        members = {m: tuple(i for i in range(n) if (m >> i) & 1) for m in found}
        return sorted(found, key=lambda m: (len(members[m]), members[m]))

    def _check_ideal_closure(self, masks: List[int]):
        """
        Every ideal is the union of the principal ideals of its members, so closure under
        adding one principal ideal gives closure under union and intersection.

        :raises InternalConsistencyError: a mask is not down-closed or the family is not closed.
        """
        lower = self._lower_cover_masks
        family = set(masks)
        principal = [sum(1 << y for y in self.principal_ideal(x)) for x in range(self._size)]
        if 0 not in family:
            raise InternalConsistencyError("the empty ideal is missing")
        for mask in masks:
            for x in range(self._size):
                if (mask >> x) & 1 and lower[x] & mask != lower[x]:
                    raise InternalConsistencyError(f"ideal mask {mask:b} is not down-closed at {self._labels[x]}")
                if mask | principal[x] not in family:
                    raise InternalConsistencyError(f"ideals are not closed under union: {mask:b} | {principal[x]:b}")

    def ideals(self, cap: int = IDEAL_CAP_DEFAULT) -> List[frozenset]:
        """
        :return: all down-closed subsets, including the empty set and the whole poset.
        :rtype: list of frozenset
        """
        return [frozenset(i for i in range(self._size) if (m >> i) & 1) for m in self.ideal_masks(cap)]

    def linear_extensions(self) -> Iterator[Tuple[int, ...]]:
        """
        Yields every ordering of the elements compatible with the order, each exactly once.
        """
        if self._size == 0:
            yield ()
            return
        for extension in nx.all_topological_sorts(self.hasse_diagram()):
            yield tuple(extension)

    def reference_labeling(self) -> Tuple[int, ...]:
        """
        The natural labeling used for descent counting: the input order when it is
        a linear extension, otherwise the lexicographically least linear extension.
        """
        identity = tuple(range(self._size))
        if all(x < y for (x, y) in self._covers):
            return identity
        return tuple(nx.lexicographical_topological_sort(self.hasse_diagram()))

    # isomorphism -------------------------------------------------------------------------

    @staticmethod
    def _compress(raw: List) -> List[int]:
        index = {key: i for i, key in enumerate(sorted(set(raw)))}
        return [index[r] for r in raw]

    def _refined_colours(self) -> List[int]:
        n = self._size
        colours = self._compress([(self._heights[x], self._coheights[x],
                                   sum(self._leq[y][x] for y in range(n)),
                                   sum(self._leq[x][y] for y in range(n))) for x in range(n)])
        while True:
            refined = self._compress([(colours[x],
                                       tuple(sorted(colours[y] for y in self._lower_covers[x])),
                                       tuple(sorted(colours[y] for y in self._upper_covers[x])))
                                      for x in range(n)])
            if len(set(refined)) == len(set(colours)):
                return refined
            colours = refined

    @cached_property
    def _canonical(self) -> Tuple[tuple, Tuple[int, ...]]:
        n = self._size
        colours = self._refined_colours()
        classes = [[x for x in range(n) if colours[x] == c] for c in sorted(set(colours))]
        best_code, best_order = None, None
        for choice in product(*(permutations(cls) for cls in classes)):
            order = [x for part in choice for x in part]
            code = tuple(self._leq[order[i]][order[j]] for i in range(n) for j in range(n))
            if best_code is None or code < best_code:
                best_code, best_order = code, tuple(order)
        return (n, best_code), best_order

    def canonical_form(self) -> tuple:
        """
        An isomorphism invariant that determines the poset up to isomorphism: the minimum
        order table over all orderings that respect a colour refinement of the elements.
        """
        return self._canonical[0]

    def is_isomorphic(self, other: 'Poset') -> bool:
        return self.canonical_form() == other.canonical_form()

    def relabel(self, order: Sequence[int], labels: Optional[Sequence] = None) -> 'Poset':
        """
        :param order: order[i] is the old index that becomes new index i.
        :param labels: optional new labels, defaults to the old labels carried along.
        """
        labels = [self._labels[x] for x in order] if labels is None else labels
        position = {old: new for new, old in enumerate(order)}
        return Poset(labels, [[self._leq[x][y] for y in order] for x in order],
                     covers=[(position[x], position[y]) for (x, y) in self._covers])

    def canonical(self) -> 'Poset':
        """The isomorphic copy in canonical element order, labelled "0".."n-1"."""
        return self.relabel(self._canonical[1], labels=[str(i) for i in range(self._size)])

    # dunder and serialization ---------------------------------------------------------------

    def to_dict(self) -> dict:
        return {'elements': list(self._labels),
                'covers': [[self._labels[x], self._labels[y]] for (x, y) in sorted(self._covers)]}

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self._labels == other._labels and self._leq == other._leq

    def __hash__(self):
        return hash((self._labels, self._leq))

    def __repr__(self):
        covers = ', '.join(f"{self._labels[x]}<{self._labels[y]}" for (x, y) in sorted(self._covers))
        return f"{self.__class__.__name__}(size={self._size}, covers=[{covers}])"


class ExtendedPoset(Poset):
    """
    The poset P with two new elements, bot (-inf) below everything and top (inf) above
    everything. The base elements keep their indices; bot is index n, top is index n+1.
    """
    BOT_LABEL = '-inf'
    TOP_LABEL = 'inf'

    def __init__(self, base: Poset):
        n = base.size
        leq = [list(row) + [False, True] for row in base.order_table]
        leq.append([True] * n + [True, True])
        leq.append([False] * n + [False, True])
        covers = set(base.covers)
        minimal = [x for x in range(n) if not base.lower_covers(x)]
        maximal = [x for x in range(n) if not base.upper_covers(x)]
        covers.update((n, x) for x in minimal)
        covers.update((x, n + 1) for x in maximal)
        if n == 0:
            covers.add((n, n + 1))
        super().__init__(list(base.labels) + [self.BOT_LABEL, self.TOP_LABEL], leq, covers=covers)
        self.base = base

    @property
    def bot(self) -> int:
        return self.base.size

    @property
    def top(self) -> int:
        return self.base.size + 1


# exhaustive generation ------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _iso_classes(n: int) -> Tuple[Poset, ...]:
    if n == 1:
        return (Poset(['0'], [[True]]),)
    classes = {}
    for smaller in _iso_classes(n - 1):
        for mask in smaller.ideal_masks():
            leq = [list(row) + [bool((mask >> i) & 1)] for i, row in enumerate(smaller.order_table)]
            leq.append([False] * (n - 1) + [True])
            candidate = Poset([str(i) for i in range(n)], leq)
            form = candidate.canonical_form()
            if form not in classes:
                classes[form] = candidate.canonical()
    logger.debug(f"{len(classes)} posets on {n} elements up to isomorphism")
    return tuple(classes.values())


def enumerate_posets(n: int, limit: int = POSET_LIMIT_DEFAULT) -> Iterator[Poset]:
    """
    Yields all posets on n elements up to isomorphism, each isomorphism class exactly once.
    Every poset arises from a smaller one by adjoining a new maximal element above one of its
    ideals; candidates are deduplicated by canonical form.

    :param n: number of elements, at least 1.
    :param limit: largest n accepted.
    :raises ResourceCapExceeded: when n is above limit.
    """
    if n > limit:
        raise ResourceCapExceeded(cap_name='poset_limit', cap=limit)
    if n < 1:
        raise InvalidPosetError("posets are enumerated for n >= 1")
    yield from _iso_classes(n)


# file formats -----------------------------------------------------------------------------

def _loads_json(text: str) -> Poset:
    try:
        data = json.loads(text)
        elements = [str(e) for e in data['elements']]
        cover_labels = [(str(a), str(b)) for a, b in data.get('covers', [])]
    except (ValueError, KeyError, TypeError) as e:
        raise PosetFormatError(f"bad JSON poset: {e}") from None
    if len(set(elements)) != len(elements):
        raise InvalidPosetError("duplicate element names")
    index = {label: i for i, label in enumerate(elements)}
    for a, b in cover_labels:
        for label in (a, b):
            if label not in index:
                raise InvalidPosetError(f"cover mentions unknown element {label!r}")
    return Poset.from_covers(len(elements), [(index[a], index[b]) for a, b in cover_labels], elements)


def _loads_text(text: str) -> Poset:
    lines = [line.split('#')[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise PosetFormatError("empty poset text")
    try:
        n = int(lines[0])
        pairs = [tuple(int(tok) for tok in line.split()) for line in lines[1:]]
    except ValueError as e:
        raise PosetFormatError(f"bad text poset: {e}") from None
    if any(len(p) != 2 for p in pairs):
        raise PosetFormatError("each cover line must hold exactly two indices")
    return Poset.from_covers(n, pairs)


def loads_poset(text: str) -> Poset:
    """
    Parses either {"elements": [...], "covers": [[a, b], ...]} or the text form
    (first line n, then one "i j" line per cover).
    """
    if text.lstrip().startswith('{'):
        return _loads_json(text)
    return _loads_text(text)


def load_poset(path: Union[str, Path]) -> Poset:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise PosetFormatError(f"cannot read {path}: {e}") from None
    return loads_poset(text)
