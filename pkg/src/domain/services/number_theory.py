"""Integer arithmetic support.

Factorization, the arithmetic functions phi / mu / omega, primitive roots,
unitary splits, and deterministic searches for primes in residue classes.
Primality and factoring are delegated to sympy.
"""

import logging
from math import gcd
from typing import Iterator, List, NamedTuple, Tuple

from sympy import divisors as _sympy_divisors
from sympy import factorint, isprime, nextprime, primefactors, primerange, sieve

from src.domain.entities.factorization import Factorization
from src.domain.exceptions.domain_exceptions import (
    InvalidInputException,
    SearchCapExceededException,
)

logger = logging.getLogger(__name__)

DEFAULT_PRIME_CAP = 10_000_000

# Generators the multiplicative construction pins for the small primes.
FIXED_GENERATORS = {2: 1, 3: 2, 5: 3}


class ArithmeticValues(NamedTuple):
    """Euler totient, Moebius value and number of distinct prime factors."""

    phi: int
    mu: int
    omega: int


def factorize(n: int) -> Factorization:
    """Exact prime factorization.

    Args:
        n: Integer >= 1

    Returns:
        Factorization with increasing primes; empty for n = 1

    Raises:
        InvalidInputException: If n <= 0
    """
    if n <= 0:
        raise InvalidInputException(f"Cannot factorize {n}")
    return Factorization(pairs=tuple(sorted(factorint(n).items())))


def arith_functions(n: int) -> ArithmeticValues:
    """Compute phi(n), mu(n) and omega(n) from one factorization.

    Raises:
        InvalidInputException: If n <= 0
    """
    factors = factorize(n)
    phi = 1
    for q, e in factors.pairs:
        phi *= (q - 1) * q ** (e - 1)
    mu = (-1) ** factors.omega if factors.is_squarefree else 0
    return ArithmeticValues(phi=phi, mu=mu, omega=factors.omega)


def divisors(n: int) -> List[int]:
    """Positive divisors of n in increasing order."""
    if n <= 0:
        raise InvalidInputException(f"Cannot list divisors of {n}")
    return list(_sympy_divisors(n))


def unitary_splits(n: int) -> List[Tuple[int, int]]:
    """All ways of splitting n into coprime prime-power blocks.

    For each of the 2^omega(n) assignments a_i in {0, 1}, returns the pair
    (product of blocks with a_i = 1, product of blocks with a_i = 0).
    """
    blocks = factorize(n).prime_powers()
    splits = []
    for mask in range(1 << len(blocks)):
        top, bottom = 1, 1
        for i, block in enumerate(blocks):
            if mask >> i & 1:
                top *= block
            else:
                bottom *= block
        splits.append((top, bottom))
    return splits


def is_prime(n: int) -> bool:
    """Deterministic primality test."""
    return bool(isprime(n))


def next_prime_at_least(n: int) -> int:
    """Smallest prime >= n."""
    return n if n >= 2 and is_prime(n) else int(nextprime(max(n, 2) - 1))


def primes_up_to(limit: int) -> Iterator[int]:
    """Primes q <= limit in increasing order."""
    return (int(q) for q in primerange(2, limit + 1))


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in (Z/pZ)^x for a prime p."""
    factors = factorize(p - 1)
    order = p - 1
    for q, e in factors.pairs:
        for _ in range(e):
            if pow(a, order // q, p) == 1:
                order //= q
            else:
                break
    return order


def primitive_root(p: int) -> int:
    """Smallest g >= 2 generating (Z/pZ)^x.

    Args:
        p: Odd prime

    Returns:
        The least primitive root

    Raises:
        InvalidInputException: If p is not an odd prime
    """
    if p < 3 or not is_prime(p):
        raise InvalidInputException(f"{p} is not an odd prime")
    cofactors = [(p - 1) // q for q in factorize(p - 1).primes]
    g = 2
    while any(pow(g, c, p) == 1 for c in cofactors):
        g += 1
    return g


def construction_generator(p: int) -> int:
    """Generator used by the multiplicative construction for prime p.

    The small primes 2, 3, 5 use pinned values; other primes use the least
    primitive root.
    """
    if p in FIXED_GENERATORS:
        return FIXED_GENERATORS[p]
    return primitive_root(p)


def dirichlet_prime(a: int, b: int, index: int = 1, cap: int = DEFAULT_PRIME_CAP) -> int:
    """The index-th prime q = a (mod b), scanning upward.

    Args:
        a: Residue
        b: Modulus >= 1 with gcd(a, b) = 1
        index: Which prime to return, counted from 1
        cap: Largest candidate inspected

    Returns:
        A prime q <= cap with q = a mod b

    Raises:
        InvalidInputException: If gcd(a, b) != 1, b < 1 or index < 1
        SearchCapExceededException: If fewer than index primes lie below cap
    """
    if b < 1 or index < 1:
        raise InvalidInputException(f"Invalid progression {a} mod {b}, index {index}")
    if gcd(a, b) != 1:
        raise InvalidInputException(f"gcd({a}, {b}) != 1")
    candidate = a % b or b
    found = 0
    while candidate <= cap:
        if is_prime(candidate):
            found += 1
            if found == index:
                return candidate
        candidate += b
    raise SearchCapExceededException(
        f"Only {found} primes = {a} mod {b} below {cap}; raise the cap"
    )


def admissible_primes(p: int, count: int) -> List[int]:
    """The first ``count`` primes strictly greater than p."""
    primes: List[int] = []
    q = p
    while len(primes) < count:
        q = int(nextprime(q))
        primes.append(q)
    return primes


class ArithmeticTables(NamedTuple):
    """phi(n) and mu(n) for 0 <= n <= limit; index 0 holds 0."""

    phi: List[int]
    mu: List[int]


def arithmetic_tables(limit: int) -> ArithmeticTables:
    """Sieve phi and mu up to ``limit``."""
    phi = [0] + [int(v) for v in sieve.totientrange(1, limit + 1)]
    mu = [0] + [int(v) for v in sieve.mobiusrange(1, limit + 1)]
    return ArithmeticTables(phi=phi, mu=mu)


def prime_divisors(n: int) -> List[int]:
    """Distinct primes dividing n, increasing."""
    if n <= 0:
        raise InvalidInputException(f"Cannot list prime divisors of {n}")
    return [int(q) for q in primefactors(n)]
