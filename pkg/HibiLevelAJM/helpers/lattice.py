"""
Finite distributive lattices and the Birkhoff correspondence D ~ J(P).

Every lattice is normalized to its ideal representation over the poset P of its
join-irreducible elements; downstream code only ever consumes P.
"""
from typing import Any, Callable, Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from HibiLevelAJM.backend.errors import (InternalConsistencyError, InvalidInputError, NotALatticeError,
                                         NotDistributiveError)
from HibiLevelAJM.helpers.poset_core import IDEAL_CAP_DEFAULT, Poset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class DistLattice:
    """
    A finite distributive lattice realized as J(P): every element is an ideal of the base poset,
    order is containment, join is union and meet is intersection.

    When the lattice was built from explicit elements, ``source_elements`` keeps the input
    elements and ``phi`` / ``psi`` translate between them and their ideals.

    Methods:
        from_poset(P): the lattice J(P).
        from_elements(elems, leq): verify an explicit lattice is distributive and normalize it.
        join_irreducibles(): the poset of elements covering exactly one element.
        phi(alpha) / psi(ideal): the Birkhoff maps.
    """

    def __init__(self, base: Poset, elements: Sequence[frozenset],
                 phi_map: Optional[Dict[Hashable, frozenset]] = None):
        self._base = base
        self._elements = tuple(elements)
        self._members = frozenset(self._elements)
        self._phi = dict(phi_map) if phi_map is not None else None
        self._psi = {ideal: alpha for alpha, ideal in self._phi.items()} if self._phi is not None else None

    # construction -----------------------------------------------------------------------

    @classmethod
    def from_poset(cls, poset: Poset, cap: int = IDEAL_CAP_DEFAULT) -> 'DistLattice':
        """
        :param poset: the poset P.
        :param cap: ideal-count cap.
        :return: J(P) ordered by inclusion.
        :raises ResourceCapExceeded: when P has more than cap ideals.
        """
        return cls(poset, poset.ideals(cap))

    @classmethod
    def from_elements(cls, elems: Sequence[Hashable], leq: Callable[[Any, Any], bool],
                      cap: int = IDEAL_CAP_DEFAULT) -> 'DistLattice':
        """
        Verifies that (elems, leq) is a distributive lattice, extracts its join-irreducible
        elements and returns the J(P) realization, with phi(alpha) = {x in P | x <= alpha}.

        :param elems: the lattice elements (hashable, distinct).
        :param leq: the order as a predicate leq(a, b).
        :raises NotALatticeError: some pair has no unique join or meet (witness pair attached).
        :raises NotDistributiveError: the distributive law fails (witness triple attached).
        :raises InvalidPosetError: leq is not a partial order.
        """
        elems = list(elems)
        if len(set(elems)) != len(elems):
            raise InvalidInputError("lattice elements must be distinct")
        if not elems:
            raise NotALatticeError("a lattice needs at least one element")
        n = len(elems)
        table = [[bool(leq(a, b)) for b in elems] for a in elems]
        order = Poset([str(e) for e in elems], table)

        up = [sum(1 << j for j in range(n) if table[i][j]) for i in range(n)]
        down = [sum(1 << j for j in range(n) if table[j][i]) for i in range(n)]
        join = cls._bound_table(elems, up, 'join')
        meet = cls._bound_table(elems, down, 'meet')

        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                        raise NotDistributiveError(triple=(elems[a], elems[b], elems[c]))

        irreducible = [x for x in range(n) if len(order.lower_covers(x)) == 1]
        base = order.induced(irreducible)
        phi_map = {elems[a]: frozenset(t for t, x in enumerate(irreducible) if table[x][a]) for a in range(n)}

        ideals = base.ideals(cap)
        if len(ideals) != n or set(ideals) != set(phi_map.values()):
            raise InternalConsistencyError(
                f"Birkhoff map is not a bijection: |D|={n}, |J(P)|={len(ideals)}")
        return cls(base, ideals, phi_map)

    @staticmethod
    def _bound_table(elems: List, cones: List[int], operation: str) -> List[List[int]]:
        n = len(elems)
        table = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                common = cones[i] & cones[j]
                least = [k for k in _bits(common) if cones[k] & common == common]
                if len(least) != 1:
                    raise NotALatticeError(operation=operation, pair=(elems[i], elems[j]))
                table[i][j] = table[j][i] = least[0]
        return table

    # accessors --------------------------------------------------------------------------

    @property
    def base(self) -> Poset:
        return self._base

    @property
    def elements(self) -> Tuple[frozenset, ...]:
        return self._elements

    @property
    def source_elements(self) -> Optional[List]:
        return None if self._phi is None else [self._psi[ideal] for ideal in self._elements]

    @property
    def size(self) -> int:
        return len(self._elements)

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, ideal):
        return ideal in self._members

    # lattice operations -----------------------------------------------------------------

    def leq(self, alpha: frozenset, beta: frozenset) -> bool:
        return alpha <= beta

    def join(self, alpha: frozenset, beta: frozenset) -> frozenset:
        return alpha | beta

    def meet(self, alpha: frozenset, beta: frozenset) -> frozenset:
        return alpha & beta

    def phi(self, alpha: Hashable) -> frozenset:
        """Birkhoff map from an input element to its ideal; the identity on ideals of J(P)."""
        if self._phi is None:
            return frozenset(alpha)
        return self._phi[alpha]

    def psi(self, ideal: frozenset) -> Hashable:
        """Inverse of phi: the join of the join-irreducibles in the ideal."""
        ideal = frozenset(ideal)
        if self._psi is None:
            return ideal
        return self._psi[ideal]

    def covers(self) -> List[Tuple[frozenset, frozenset]]:
        """
        :return: pairs (alpha, beta) with beta covering alpha; in J(P) that means beta = alpha + one element.
        """
        return [(ideal - {x}, ideal) for ideal in self._elements for x in sorted(ideal)
                if ideal - {x} in self._members]

    def join_irreducibles(self) -> Poset:
        """
        :return: the induced subposet of the elements covering exactly one element; D ~ J(result).
        :rtype: Poset
        """
        irreducible = [ideal for ideal in self._elements
                       if sum(1 for x in ideal if ideal - {x} in self._members) == 1]
        labels = []
        for ideal in irreducible:
            if self._psi is not None:
                labels.append(str(self._psi[ideal]))
            else:
                top = [x for x in ideal if not any(self._base.lt(x, y) for y in ideal)]
                labels.append(self._base.labels[top[0]])
        return Poset(labels, [[a <= b for b in irreducible] for a in irreducible])

    def __repr__(self):
        return f"{self.__class__.__name__}(size={self.size}, base={self._base!r})"
