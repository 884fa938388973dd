"""Exact integer primitives shared by the rest of the package.

Everything is arbitrary precision on purpose: the certified shift values grow
like 2**(mu-1) * P**mu for a product P of primes drawn from nine small
differences, which leaves any fixed-width integer type behind almost
immediately.  Plain Python ints are the point, not a convenience.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable

TRIAL_DIVISION_BOUND = 10**6
MAX_DIGITS = 64

# Miller-Rabin with these bases is a deterministic primality proof below
# 3_317_044_064_679_887_385_961_981 (25 digits).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_EXTRA_MR_ROUNDS = 64


class FactorizationIncomplete(Exception):
    """The input exceeded the configured factorization effort.

    Raised instead of ever returning a wrong or partial factorization.
    """


def gcd(x: int, y: int) -> int:
    """Non-negative greatest common divisor; gcd(0, 0) == 0.

    The zero convention makes coprimality predicates (which demand gcd == 1
    or == 2) fail automatically on degenerate all-equal parameters.
    """
    return math.gcd(x, y)


def elementary_symmetric(k: int, xs: Iterable[int]) -> int:
    """sigma_k(xs): the sum over all k-element subsets of xs of their products.

    sigma_0 == 1 (empty product).  Equivalently the coefficient of y**(m-k)
    in prod_j (y + x_j) for m = len(xs).
    """
    values = tuple(xs)
    if not 0 <= k <= len(values):
        raise ValueError(f"k={k} out of range for a sequence of length {len(values)}")
    # multiply out (y + x) factor by factor, keeping degrees up to k only
    coeffs = [1] + [0] * k
    top = 0
    for x in values:
        top = min(top + 1, k)
        for i in range(top, 0, -1):
            coeffs[i] += x * coeffs[i - 1]
    return coeffs[k]


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality check.

    Deterministic (a proof) for n below ~3.3e24; beyond that, 64 extra
    rounds with bases drawn from a generator seeded by n itself, so the
    answer is reproducible across runs.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a: int) -> bool:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    for a in _MR_BASES:
        if witness(a):
            return False
    if n >= _MR_DETERMINISTIC_LIMIT:
        rng = random.Random(n)
        for _ in range(_EXTRA_MR_ROUNDS):
            if witness(rng.randrange(2, n - 1)):
                return False
    return True


def _brent_rho(n: int, rng: random.Random) -> int:
    """One Brent-cycle attempt at a nontrivial factor of odd composite n.

    Returns n on failure; the caller retries with fresh parameters.
    """
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g


@dataclass(frozen=True)
class Factorization:
    """Sign and multiset of (prime, exponent) pairs for a nonzero integer.

    Primes are strictly increasing and each one passes a primality check;
    the original integer is recoverable via ``value``.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "factors", tuple((int(p), int(e)) for p, e in self.factors))
        previous = 1
        for p, e in self.factors:
            if p <= previous:
                raise ValueError(f"primes must be strictly increasing, got {self.factors}")
            if e < 1:
                raise ValueError(f"exponent for prime {p} must be >= 1, got {e}")
            if not is_probable_prime(p):
                raise ValueError(f"{p} is not prime")
            previous = p

    @property
    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __str__(self) -> str:
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors) or "1"
        return ("-" if self.sign < 0 else "") + body


def factorize(
    n: int,
    *,
    trial_bound: int = TRIAL_DIVISION_BOUND,
    max_digits: int = MAX_DIGITS,
    seed: int | None = None,
) -> Factorization:
    """Factor a nonzero integer into primes, or refuse explicitly.

    Trial division up to ``trial_bound``, then Brent's rho seeded
    deterministically from the input (and from ``seed``, if given), then a
    primality check on every surviving piece.  Inputs wider than
    ``max_digits`` decimal digits, and composites rho cannot split within
    its attempt budget, raise FactorizationIncomplete rather than risking a
    wrong answer.
    """
    if n == 0:
        raise ValueError("0 has no prime factorization")
    sign = 1 if n > 0 else -1
    m = abs(n)
    if len(str(m)) > max_digits:
        raise FactorizationIncomplete(
            f"|n| has {len(str(m))} digits, above the {max_digits}-digit effort bound"
        )

    counts: dict[int, int] = {}
    while m % 2 == 0:
        counts[2] = counts.get(2, 0) + 1
        m //= 2
    d = 3
    while d <= trial_bound and d * d <= m:
        while m % d == 0:
            counts[d] = counts.get(d, 0) + 1
            m //= d
        d += 2
    if 1 < m and m <= trial_bound * trial_bound:
        # trial division ran past sqrt(m), so the cofactor is prime
        counts[m] = counts.get(m, 0) + 1
        m = 1

    pending = [m] if m > 1 else []
    while pending:
        m = pending.pop()
        if is_probable_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        rng = random.Random(m if seed is None else f"{m}:{seed}")
        factor = m
        for _ in range(64):
            factor = _brent_rho(m, rng)
            if 1 < factor < m:
                break
        else:
            raise FactorizationIncomplete(f"could not split composite {m}")
        pending.append(factor)
        pending.append(m // factor)

    result = Factorization(sign, tuple(sorted(counts.items())))
    if result.value != n:
        raise FactorizationIncomplete(f"internal reconstruction mismatch for {n}")
    return result
