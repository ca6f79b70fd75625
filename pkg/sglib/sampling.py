"""Seeded instance generators for the property checks and tests."""

import math
import random
from dataclasses import dataclass
from typing import Optional

from .schemas import SuitablePair
from .smooth import compound_from_pair, permute_rho

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True)
class CompoundInstance:
    """A compound sequence, the pair it came from, and an optional rho_j image."""
    pair: SuitablePair
    compound: tuple[int, ...]
    j: int
    sequence: tuple[int, ...]
    frobenius: int


def random_generators(
    rng: random.Random, max_generators: int = 4, max_value: int = 30
) -> tuple[int, ...]:
    """Two to `max_generators` integers in [2, max_value] with gcd 1."""
    while True:
        k = rng.randint(2, max_generators)
        gens = tuple(rng.randint(2, max_value) for _ in range(k))
        if math.gcd(*gens) == 1:
            return gens


def _random_factor(rng: random.Random, pool: list[int], max_factors: int) -> int:
    value = 1
    for _ in range(rng.randint(0, max_factors)):
        if pool:
            value *= rng.choice(pool)
    return value


def random_suitable_pair(
    rng: random.Random, k: int, max_factors: int = 2
) -> SuitablePair:
    """B from products of small primes; each a_i avoids the primes of b_1..b_i."""
    b = [_random_factor(rng, list(SMALL_PRIMES), max_factors) for _ in range(k)]
    a = []
    for i in range(k):
        pool = [p for p in SMALL_PRIMES if all(bj % p for bj in b[: i + 1])]
        a.append(_random_factor(rng, pool, max_factors))
    return SuitablePair(a=tuple(a), b=tuple(b))


def compound_frobenius(pair: SuitablePair) -> int:
    """F = -g_0 + sum (a_i - 1) g_i for the compound sequence of `pair`."""
    seq = compound_from_pair(pair)
    return -seq[0] + sum((a - 1) * g for a, g in zip(pair.a, seq[1:]))


def random_compound(
    rng: random.Random,
    max_k: int = 3,
    frobenius_limit: int = 10 ** 4,
    max_g0: Optional[int] = None,
    permute: bool = True,
) -> CompoundInstance:
    """Draw a compound sequence (optionally rho_j-permuted) with F below the limit."""
    while True:
        k = rng.randint(1, max_k)
        pair = random_suitable_pair(rng, k)
        compound = compound_from_pair(pair)
        frobenius = compound_frobenius(pair)
        if frobenius > frobenius_limit:
            continue
        j = rng.randint(0, k) if permute else 0
        sequence = permute_rho(compound, j)[0] if j else compound
        if max_g0 is not None and sequence[0] > max_g0:
            continue
        return CompoundInstance(
            pair=pair, compound=compound, j=j, sequence=sequence, frobenius=frobenius
        )
