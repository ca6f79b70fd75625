"""Numerical semigroups and their oracle-grade invariants.

A `NumericalSemigroup` is built from a generator list with gcd 1. Gaps are
enumerated by a membership sieve, Apéry sets by a shortest-path search over
residue classes. Derived values (gap set, Apéry sets) are cached on the
instance at most once each.
"""

import heapq
import logging
import math
import threading
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (
    EmptyGenerators,
    EnumerationCapExceeded,
    FullSemigroup,
    ModulusNotInSemigroup,
    NonCoprimeGenerators,
    ZeroGenerator,
    ZeroModulus,
)
from .schemas import AperySet, GapSet, SetEqualities
from .utils import check_int_sequence, exact_int

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 10 ** 8


def representable_sieve(generators: Sequence[int], bound: int) -> np.ndarray:
    """Boolean array `r` with r[n] true iff n in [0, bound] is representable.

    Each generator g is folded in with shifts g, 2g, 4g, ... so that after the
    last shift every multiple c*g <= bound has been added.
    """
    reach = np.zeros(bound + 1, dtype=bool)
    reach[0] = True
    for g in generators:
        shift = g
        while shift <= bound:
            reach[shift:] |= reach[:-shift].copy()
            shift *= 2
    return reach


class NumericalSemigroup:
    """The numerical semigroup generated by a coprime set of positive integers.

    Generators are sorted and deduplicated but not reduced to a minimal
    system.

    Args:
        generators: positive integers with gcd 1
        enumeration_cap: largest window the gap sieve may allocate
    """

    def __init__(
        self,
        generators: Iterable[int],
        enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    ):
        gens = check_int_sequence(generators, "generators")
        if not gens:
            raise EmptyGenerators()
        for g in gens:
            if g <= 0:
                raise ZeroGenerator(g)
        d = math.gcd(*gens)
        if d != 1:
            raise NonCoprimeGenerators(d)
        if enumeration_cap < 1:
            raise ValueError("enumeration_cap must be >= 1")
        self.generators: tuple[int, ...] = tuple(sorted(set(gens)))
        self.enumeration_cap = int(enumeration_cap)
        self._lock = threading.Lock()
        self._gap_set: Optional[GapSet] = None
        self._gap_lookup: Optional[frozenset[int]] = None
        self._apery: dict[int, AperySet] = {}

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    @property
    def multiplicity(self) -> int:
        """Smallest generator (the smallest nonzero element when 1 is absent)."""
        return self.generators[0]

    @property
    def is_full(self) -> bool:
        """True when S = N0."""
        return self.generators[0] == 1

    # -- membership -------------------------------------------------------

    def contains(self, n: int) -> bool:
        """Whether n is a non-negative combination of the generators."""
        if n < 0:
            return False
        if n == 0 or self.is_full or n in self.generators:
            return True
        if self._gap_lookup is not None:
            return n not in self._gap_lookup
        m = self.multiplicity
        if m in self._apery:
            return n >= self._apery[m].elements[n % m]
        if n <= self.enumeration_cap:
            return bool(representable_sieve(self.generators, n)[n])
        return n >= self.apery_set(m).elements[n % m]

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and not isinstance(n, bool) and self.contains(n)

    def witness(self, n: int) -> Optional[tuple[int, ...]]:
        """Coefficients (one per generator) of some combination equal to n.

        Walks the shortest-path tree of Ap(S;m) back from n mod m and pads
        with copies of m. Returns None when n is not in the semigroup.
        """
        if n < 0:
            return None
        m = self.multiplicity
        dist, parent = self._residue_paths(m)
        r = n % m
        if n < dist[r]:
            return None
        position = {g: idx for idx, g in enumerate(self.generators)}
        coeffs = [0] * len(self.generators)
        coeffs[0] = (n - dist[r]) // m
        while r:
            g = parent[r]
            coeffs[position[g]] += 1
            r = (r - g) % m
        return tuple(coeffs)

    # -- gaps -------------------------------------------------------------

    def gaps(self) -> GapSet:
        """Enumerate NR by sieving until m consecutive members follow the last gap.

        m is the multiplicity; once m consecutive integers are representable,
        adding m to each reaches every larger integer.
        """
        if self._gap_set is not None:
            return self._gap_set
        gap_set = self._enumerate_gaps()
        with self._lock:
            if self._gap_set is None:
                self._gap_lookup = frozenset(gap_set.gaps)
                self._gap_set = gap_set
                logger.info(
                    f"{self!r}: enumerated {gap_set.genus} gaps, "
                    f"frobenius {gap_set.frobenius}"
                )
        return self._gap_set

    def _enumerate_gaps(self) -> GapSet:
        if self.is_full:
            return GapSet(gaps=(), genus=0, frobenius=-1)
        m = self.multiplicity
        bound = min(max(4 * self.generators[-1], 64), self.enumeration_cap)
        while True:
            reach = representable_sieve(self.generators, bound)
            gap_positions = np.flatnonzero(~reach)
            last = int(gap_positions[-1])
            if bound - last >= m:
                gaps = tuple(int(v) for v in gap_positions)
                return GapSet(gaps=gaps, genus=len(gaps), frobenius=gaps[-1])
            if bound >= self.enumeration_cap:
                raise EnumerationCapExceeded(bound, self.enumeration_cap)
            logger.debug(f"{self!r}: no run of {m} members below {bound}, doubling")
            bound = min(2 * bound, self.enumeration_cap)

    # -- Apéry sets -------------------------------------------------------

    def _check_modulus(self, t: int) -> None:
        if t == 0:
            raise ZeroModulus()
        if not self.contains(t):
            raise ModulusNotInSemigroup(t)

    def _residue_paths(self, t: int) -> tuple[list[int], list[int]]:
        """Dijkstra on residues mod t, one edge r -> r+g per generator.

        Returns the distance to each residue and the generator on the last
        edge of its shortest path (0 at the root).
        """
        dist: list[Optional[int]] = [None] * t
        parent = [0] * t
        dist[0] = 0
        steps = [g for g in self.generators if g % t]
        heap = [(0, 0)]
        while heap:
            d, r = heapq.heappop(heap)
            if d > dist[r]:
                continue
            for g in steps:
                s = (r + g) % t
                nd = d + g
                if dist[s] is None or nd < dist[s]:
                    dist[s] = nd
                    parent[s] = g
                    heapq.heappush(heap, (nd, s))
        return [int(w) for w in dist], parent

    def apery_set(self, t: int) -> AperySet:
        """Ap(S;t): the least element of S in each residue class mod t."""
        cached = self._apery.get(t)
        if cached is not None:
            return cached
        self._check_modulus(t)
        elements = tuple(self._residue_paths(t)[0])
        ap = AperySet(
            modulus=t,
            elements=elements,
            below_t=tuple(sorted(w for w in elements if w < t)),
        )
        with self._lock:
            self._apery.setdefault(t, ap)
        logger.debug(f"{self!r}: Apery set of {t} computed")
        return self._apery[t]

    def frobenius_via_apery(self, t: Optional[int] = None) -> int:
        """F(S) = max(Ap(S;t)) - t."""
        if self.is_full:
            raise FullSemigroup()
        t = self.multiplicity if t is None else t
        return max(self.apery_set(t).elements) - t

    def genus_via_apery(self, t: Optional[int] = None) -> int:
        """g(S) = -(t-1)/2 + sum(Ap(S;t))/t, evaluated exactly."""
        t = self.multiplicity if t is None else t
        ap = self.apery_set(t)
        value = Fraction(-(t - 1), 2) + Fraction(sum(ap.elements), t)
        return exact_int(value, "genus")

    @property
    def frobenius(self) -> int:
        if self._gap_set is not None:
            return self._gap_set.frobenius
        return -1 if self.is_full else self.frobenius_via_apery()

    @property
    def genus(self) -> int:
        if self._gap_set is not None:
            return self._gap_set.genus
        return self.genus_via_apery()

    def is_symmetric(self) -> bool:
        """F(S) = 2 g(S) - 1; the full semigroup is reported as not symmetric."""
        if self.is_full:
            return False
        return self.frobenius == 2 * self.genus - 1

    def set_equalities(self, t: int) -> SetEqualities:
        """Both sides of (NR+t)\\NR = Ap\\Ap_t and NR\\(NR+t) = [0,t)\\Ap_t."""
        ap = self.apery_set(t)
        nr = frozenset(self.gaps().gaps)
        shifted = frozenset(n + t for n in nr)
        below = frozenset(ap.below_t)
        return SetEqualities(
            modulus=t,
            shifted_minus_gaps=shifted - nr,
            apery_minus_below=frozenset(ap.elements) - below,
            gaps_minus_shifted=nr - shifted,
            interval_minus_below=frozenset(range(t)) - below,
        )


def make_semigroup(
    generators: Iterable[int], enumeration_cap: int = DEFAULT_ENUMERATION_CAP
) -> NumericalSemigroup:
    return NumericalSemigroup(generators, enumeration_cap=enumeration_cap)


def contains(S: NumericalSemigroup, n: int) -> bool:
    return S.contains(n)


def gaps(S: NumericalSemigroup) -> GapSet:
    return S.gaps()


def apery_set(S: NumericalSemigroup, t: int) -> AperySet:
    return S.apery_set(t)


def frobenius_via_apery(S: NumericalSemigroup, t: int) -> int:
    return S.frobenius_via_apery(t)


def genus_via_apery(S: NumericalSemigroup, t: int) -> int:
    return S.genus_via_apery(t)


def is_symmetric(S: NumericalSemigroup) -> bool:
    return S.is_symmetric()


def is_symmetric_direct(S: NumericalSemigroup) -> bool:
    """Check "exactly one of n, F-n lies in S" for every n in [0, F]."""
    if S.is_full:
        return False
    f = S.gaps().frobenius
    return all(S.contains(n) != S.contains(f - n) for n in range(f + 1))
