"""Exact integer arithmetic: factorization, prime sets, prime-power recognition.

Everything here is deterministic and exact for inputs up to MAX_SUPPORTED
(unsigned 63-bit).  Larger inputs are rejected rather than silently
mishandled.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator, Optional

MAX_SUPPORTED = 2**63 - 1

# Trial division bound; every composite below _TRIAL_BOUND**2 is fully
# factored by trial division alone.
_TRIAL_BOUND = 1000


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i in range(limit + 1) if flags[i])

_SMALL_PRIMES = _sieve(_TRIAL_BOUND)

# Miller-Rabin with these witnesses is a proven deterministic primality
# test for all n < 3.3e24, which covers the full 63-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _check_range(n: int) -> None:
    if n > MAX_SUPPORTED:
        raise OverflowError(f"{n} exceeds the supported 63-bit range")


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n <= MAX_SUPPORTED."""
    _check_range(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:12]:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # n is odd, composite, with no factor below _TRIAL_BOUND.
    for c in range(1, n):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise AssertionError(f"rho failed on {n}")  # unreachable for composite n


@dataclass(frozen=True)
class Factorization:
    """Prime factorization: factors sorted ascending, exponents >= 1."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError("factors must be sorted ascending with exponents >= 1")
            prev = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not reconstruct {self.value}")

    def primes(self) -> "PrimeSet":
        return PrimeSet(p for p, _ in self.factors)


@dataclass(frozen=True)
class PrimeSet:
    """Immutable sorted set of primes with the usual set algebra."""

    primes: tuple[int, ...]

    def __init__(self, primes=()):  # accepts any iterable of primes
        ps = sorted(set(primes))
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", tuple(ps))

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __or__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(self.primes + other.primes)

    def __and__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(p for p in self.primes if p in other)

    def __sub__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(p for p in self.primes if p not in other)

    def __le__(self, other: "PrimeSet") -> bool:
        return all(p in other for p in self.primes)

    def max(self) -> int:
        return max(self.primes)


def factor(n: int) -> Factorization:
    """Factor n >= 1 into primes.  factor(1) has an empty factor list."""
    if n < 1:
        raise ValueError("factor requires n >= 1")
    _check_range(n)
    counts: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(n, tuple(sorted(counts.items())))


def prime_set(n: int) -> PrimeSet:
    """Set of distinct prime divisors of n >= 1."""
    return factor(n).primes()


def as_prime_power(n: int) -> Optional[tuple[int, int]]:
    """Return (p, f) with p**f == n if n >= 2 is a prime power, else None."""
    if n < 2:
        raise ValueError("as_prime_power requires n >= 2")
    _check_range(n)
    f = factor(n)
    if len(f.factors) != 1:
        return None
    return f.factors[0]


def is_mersenne_prime_exponent(s: int) -> bool:
    """True iff s is prime and 2**s - 1 is prime."""
    if s < 2:
        raise ValueError("exponent must be >= 2")
    return is_prime(s) and 2**s - 1 <= MAX_SUPPORTED and is_prime(2**s - 1)
