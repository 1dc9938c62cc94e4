"""
Exact checks of the initial-algebra picture for G(U_gamma): the maximal minors of the
generic matrix U_gamma, their leading monomials under the diagonal degree-lexicographic
order, and the standard monomials of the Hibi ring of Gamma(X; gamma).
"""
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from HibiLevelAJM.backend.errors import InternalConsistencyError, PreconditionError, TheoremViolation
from HibiLevelAJM.helpers.bases import BaseComputation
from HibiLevelAJM.helpers.hibi import HibiRing
from HibiLevelAJM.helpers.lattice import DistLattice
from HibiLevelAJM.helpers.poset_core import IDEAL_CAP_DEFAULT
from HibiLevelAJM.helpers.schubert import GrassTuple, SchubertSpec, gamma_lattice, u_gamma_support

Var = Tuple[int, int]


@dataclass(frozen=True)
class Monomial:
    """A product of the variables U_ij; ``powers`` is sorted by variable, exponents positive."""
    powers: Tuple[Tuple[Var, int], ...] = ()

    @classmethod
    def of(cls, variables: Iterable[Var]) -> 'Monomial':
        exponents: Dict[Var, int] = {}
        for var in variables:
            exponents[var] = exponents.get(var, 0) + 1
        return cls(tuple(sorted(exponents.items())))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    def exponent(self, var: Var) -> int:
        return dict(self.powers).get(var, 0)

    def expanded(self) -> Tuple[Var, ...]:
        """The variables with multiplicity, in increasing (row, column) order."""
        return tuple(var for var, e in self.powers for _ in range(e))

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        exponents = dict(self.powers)
        for var, e in other.powers:
            exponents[var] = exponents.get(var, 0) + e
        return Monomial(tuple(sorted(exponents.items())))

    def __str__(self):
        if not self.powers:
            return '1'
        return '*'.join(f"U_{i}_{j}" + (f"^{e}" if e > 1 else '') for (i, j), e in self.powers)


ONE = Monomial()


class TermOrder:
    """
    Degree-lexicographic order with U_11 > U_12 > ... > U_1n > U_21 > ... > U_mn.
    Within a degree, the monomial holding more of the first variable where two monomials
    differ is the larger one; on sorted variable lists that is the lexicographically smaller list.
    """

    @staticmethod
    def key(monomial: Monomial) -> tuple:
        return monomial.degree, tuple((-i, -j) for (i, j) in monomial.expanded())

    def greater(self, u: Monomial, v: Monomial) -> bool:
        return self.key(u) > self.key(v)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)

    def sorted(self, monomials: Iterable[Monomial]) -> List[Monomial]:
        """Largest first."""
        return sorted(monomials, key=self.key, reverse=True)


DEGLEX = TermOrder()


class Polynomial:
    """
    A sparse polynomial with integer coefficients in the variables U_ij.
    Zero coefficients are never stored.
    """

    def __init__(self, terms: Optional[Dict[Monomial, int]] = None):
        self._terms = {mono: c for mono, c in (terms or {}).items() if c}

    @classmethod
    def variable(cls, i: int, j: int) -> 'Polynomial':
        return cls({Monomial.of([(i, j)]): 1})

    @classmethod
    def constant(cls, c: int) -> 'Polynomial':
        return cls({ONE: c})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    @property
    def monomials(self):
        return self._terms.keys()

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial: Monomial) -> int:
        return self._terms.get(monomial, 0)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return Polynomial(terms)

    def __neg__(self) -> 'Polynomial':
        return Polynomial({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        return self + (-other)

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        terms: Dict[Monomial, int] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u * v
                terms[w] = terms.get(w, 0) + a * b
        return Polynomial(terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return '0'
        out = []
        for mono in DEGLEX.sorted(self._terms):
            c = self._terms[mono]
            sign = '-' if c < 0 else '+'
            body = str(mono) if abs(c) == 1 and mono != ONE else (
                f"{abs(c)}" if mono == ONE else f"{abs(c)}*{mono}")
            out.append(f"{sign} {body}")
        text = ' '.join(out)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]

    def __repr__(self):
        return f"Polynomial({self})"


def _sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def minor(spec: SchubertSpec, delta: GrassTuple) -> Polynomial:
    """
    The maximal minor of U_gamma on the columns delta, by Leibniz expansion; terms through a
    structural zero (column below b_i in row i) are skipped.
    """
    if delta.m != spec.m or delta.n != spec.n:
        raise PreconditionError(f"{delta} is not an index of G({spec.m},{spec.n})")
    support = u_gamma_support(spec)
    terms: Dict[Monomial, int] = {}
    for perm in permutations(range(spec.m)):
        columns = [delta[perm[i]] for i in range(spec.m)]
        if not all(support[i][c - 1] for i, c in enumerate(columns)):
            continue
        mono = Monomial.of((i + 1, c) for i, c in enumerate(columns))
        terms[mono] = terms.get(mono, 0) + _sign(perm)
    return Polynomial(terms)


def leading_monomial(p: Polynomial, order: TermOrder = DEGLEX) -> Monomial:
    """
    :raises PreconditionError: p is zero.
    """
    if p.is_zero():
        raise PreconditionError("the zero polynomial has no leading monomial")
    return order.max(p.monomials)


def diagonal(delta: GrassTuple) -> Monomial:
    """U_{1,delta_1} * ... * U_{m,delta_m}."""
    return Monomial.of((i + 1, c) for i, c in enumerate(delta))


def _require_member(spec: SchubertSpec, *deltas: GrassTuple):
    for delta in deltas:
        if not spec.gamma.leq(delta):
            raise PreconditionError(f"{delta} is not in Gamma(X; {spec.gamma})")


def lm_multiplicativity_check(spec: SchubertSpec, alpha: GrassTuple, beta: GrassTuple,
                              order: TermOrder = DEGLEX) -> bool:
    """lm(minor(alpha)) * lm(minor(beta)) == lm(minor(alpha meet beta)) * lm(minor(alpha join beta))."""
    _require_member(spec, alpha, beta)
    lhs = leading_monomial(minor(spec, alpha), order) * leading_monomial(minor(spec, beta), order)
    rhs = (leading_monomial(minor(spec, alpha.meet(beta)), order)
           * leading_monomial(minor(spec, alpha.join(beta)), order))
    return lhs == rhs


def straightening_lm_check(spec: SchubertSpec, alpha: GrassTuple, beta: GrassTuple,
                           order: TermOrder = DEGLEX) -> bool:
    """
    For incomparable alpha, beta: minor(alpha)minor(beta) - minor(meet)minor(join) is zero or has a
    leading monomial strictly below lm(minor(alpha)) * lm(minor(beta)).

    :raises PreconditionError: alpha and beta are comparable.
    """
    _require_member(spec, alpha, beta)
    if alpha.leq(beta) or beta.leq(alpha):
        raise PreconditionError(f"{alpha} and {beta} are comparable")
    top = leading_monomial(minor(spec, alpha), order) * leading_monomial(minor(spec, beta), order)
    remainder = (minor(spec, alpha) * minor(spec, beta)
                 - minor(spec, alpha.meet(beta)) * minor(spec, alpha.join(beta)))
    return remainder.is_zero() or order.greater(top, leading_monomial(remainder, order))


def _multichains(elements: List[GrassTuple], length: int) -> Iterator[Tuple[GrassTuple, ...]]:
    # elements are in a linear extension, so each chain only looks forward
    def extend(start: int, remaining: int, chain: Tuple[GrassTuple, ...]):
        if remaining == 0:
            yield chain
            return
        for k in range(start, len(elements)):
            if not chain or chain[-1].leq(elements[k]):
                yield from extend(k, remaining - 1, chain + (elements[k],))

    yield from extend(0, length, ())


@dataclass(frozen=True)
class StandardMonomialScan:
    degree: int
    count: int
    distinct_leading_terms: int
    hilbert: int

    def to_dict(self) -> dict:
        return {'degree': self.degree, 'count': self.count,
                'distinct_leading_terms': self.distinct_leading_terms, 'hilbert': self.hilbert}


@dataclass(frozen=True)
class SagbiReport:
    spec: SchubertSpec
    lattice_size: int
    diagonal_checked: int
    zero_minors_checked: int
    multiplicative_pairs: int
    straightening_pairs: int
    scans: Tuple[StandardMonomialScan, ...]

    def to_dict(self) -> dict:
        return {**self.spec.to_dict(),
                'lattice_size': self.lattice_size,
                'diagonal_checked': self.diagonal_checked,
                'zero_minors_checked': self.zero_minors_checked,
                'multiplicative_pairs': self.multiplicative_pairs,
                'straightening_pairs': self.straightening_pairs,
                'standard_monomials': [s.to_dict() for s in self.scans]}


class SagbiVerifier(BaseComputation):
    """
    Verifies, for one (m, n, gamma):
        diagonal leading terms: lm(minor(delta)) is the main diagonal for every delta >= gamma,
            and minor(delta) vanishes for every other delta;
        leading-monomial multiplicativity over all pairs;
        top-term cancellation of the straightening relation over all incomparable pairs;
        standard monomials (multichains) of each degree have pairwise distinct leading
            monomials and are exactly as many as H(d) of the Hibi ring.
    Any failure raises TheoremViolation.
    """
    _CAP_NAMES = ('ideal_cap', 'count_cap', 'multichain_cap')
    _DEFAULT_IDEAL_CAP = IDEAL_CAP_DEFAULT
    _DEFAULT_COUNT_CAP = HibiRing._DEFAULT_COUNT_CAP
    _DEFAULT_MULTICHAIN_CAP = 10 ** 6

    def __init__(self, spec: SchubertSpec, order: TermOrder = DEGLEX, **kwargs):
        super().__init__(**kwargs)
        self.spec = spec
        self.order = order
        self._lattice: Optional[DistLattice] = None
        self._minors: Dict[GrassTuple, Polynomial] = {}

    @property
    def lattice(self) -> DistLattice:
        if self._lattice is None:
            self._lattice = gamma_lattice(self.spec, self._caps['ideal_cap'])
        return self._lattice

    @property
    def elements(self) -> List[GrassTuple]:
        """Gamma(X; gamma), listed along a linear extension of the componentwise order."""
        return self.lattice.source_elements

    def minor(self, delta: GrassTuple) -> Polynomial:
        if delta not in self._minors:
            self._minors[delta] = minor(self.spec, delta)
        return self._minors[delta]

    def leading(self, delta: GrassTuple) -> Monomial:
        return leading_monomial(self.minor(delta), self.order)

    def check_diagonals(self) -> Tuple[int, int]:
        diagonal_checked = zero_checked = 0
        for c in combinations(range(1, self.spec.n + 1), self.spec.m):
            delta = GrassTuple(c, self.spec.n)
            p = self.minor(delta)
            if self.spec.gamma.leq(delta):
                if p.is_zero() or self.leading(delta) != diagonal(delta):
                    self.log_and_raise_error(TheoremViolation(
                        f"{self.spec}: leading monomial of minor {delta} is not its diagonal"))
                diagonal_checked += 1
            else:
                if not p.is_zero():
                    self.log_and_raise_error(TheoremViolation(
                        f"{self.spec}: minor {delta} outside Gamma(X; gamma) does not vanish"))
                zero_checked += 1
        return diagonal_checked, zero_checked

    def check_pairs(self) -> Tuple[int, int]:
        multiplicative = straightening = 0
        for alpha, beta in combinations(self.elements, 2):
            lhs = self.leading(alpha) * self.leading(beta)
            if lhs != self.leading(alpha.meet(beta)) * self.leading(alpha.join(beta)):
                self.log_and_raise_error(TheoremViolation(
                    f"{self.spec}: leading monomials of {alpha}, {beta} are not multiplicative"))
            multiplicative += 1
            if not (alpha.leq(beta) or beta.leq(alpha)):
                if not straightening_lm_check(self.spec, alpha, beta, self.order):
                    self.log_and_raise_error(TheoremViolation(
                        f"{self.spec}: straightening of {alpha}, {beta} keeps its top term"))
                straightening += 1
        return multiplicative, straightening

    def standard_monomial_scan(self, degree: int) -> StandardMonomialScan:
        """
        Leading monomials of products are products of leading monomials (Z is a domain), so
        each standard monomial's leading term is the product of its diagonals.

        :raises ResourceCapExceeded: more than multichain_cap multichains.
        :raises TheoremViolation: repeated leading terms, or the count differs from H(degree).
        """
        seen = set()
        count = 0
        for chain in _multichains(self.elements, degree):
            count += 1
            self.check_cap('multichain_cap', count)
            lm = ONE
            for delta in chain:
                lm = lm * self.leading(delta)
            seen.add(lm)
        if len(seen) != count:
            self.log_and_raise_error(TheoremViolation(
                f"{self.spec}: {count} standard monomials of degree {degree} share leading terms"))
        ring = HibiRing(self.lattice.base, **self.cap_kwargs)
        hilbert = ring.hilbert_function(degree)[degree]
        if hilbert != count:
            self.log_and_raise_error(TheoremViolation(
                f"{self.spec}: {count} standard monomials of degree {degree} but H({degree}) = {hilbert}"))
        return StandardMonomialScan(degree, count, len(seen), hilbert)

    def verify(self, max_degree: int = 3) -> SagbiReport:
        if max_degree < 0:
            raise PreconditionError("max_degree must be non-negative")
        diagonal_checked, zero_checked = self.check_diagonals()
        multiplicative, straightening = self.check_pairs()
        scans = tuple(self.standard_monomial_scan(d) for d in range(max_degree + 1))
        if diagonal_checked != self.lattice.size:
            self.log_and_raise_error(InternalConsistencyError(
                f"{self.spec}: {diagonal_checked} diagonal checks for {self.lattice.size} lattice elements"))
        self._logger.info(f"{self.spec}: sagbi checks passed up to degree {max_degree}")
        return SagbiReport(self.spec, self.lattice.size, diagonal_checked, zero_checked,
                           multiplicative, straightening, scans)


def standard_monomial_scan(spec: SchubertSpec, degree: int, **kwargs) -> StandardMonomialScan:
    return SagbiVerifier(spec, **kwargs).standard_monomial_scan(degree)
