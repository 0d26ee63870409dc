"""Deterministic primality testing and exact factorization of integers and rationals.

Trial division up to 10^6 covers everything at desk scale; larger cofactors go
through deterministic Miller-Rabin witnesses and Brent's variant of the rho
method.  The primality test refuses inputs beyond the range its witness set is
known to decide instead of silently turning probabilistic.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

TRIAL_DIVISION_LIMIT = 10**6

# The base set below decides primality for every n smaller than this bound.
_MILLER_RABIN_LIMIT = 3_317_044_064_679_887_385_961_981
_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < ~3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= _MILLER_RABIN_LIMIT:
        raise ValueError(f"primality of {n} is outside the deterministic witness range")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_brent(n: int) -> int:
    """Return a nontrivial factor of composite odd n; deterministic parameter sweep."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, r, q = 2, 1, 1
        g, x, ys = 1, y, y
        m = 128
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def factorint(n: int) -> dict[int, int]:
    """Factor n >= 1 into a prime -> exponent map."""
    if n < 1:
        raise ValueError(f"factorint expects n >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 7
    increments = (4, 2, 4, 2, 4, 6, 2, 6)  # wheel mod 30
    i = 0
    while f <= TRIAL_DIVISION_LIMIT and f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += increments[i]
        i = (i + 1) % 8
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if m <= TRIAL_DIVISION_LIMIT * TRIAL_DIVISION_LIMIT and isqrt(m) ** 2 == m and is_prime(isqrt(m)):
                r = isqrt(m)
                factors[r] = factors.get(r, 0) + 2
                continue
            if is_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            g = _rho_brent(m)
            stack.append(g)
            stack.append(m // g)
    return dict(sorted(factors.items()))


def factor_fraction(x: Fraction | int) -> tuple[int, dict[int, int]]:
    """Factor a nonzero rational into (sign parity, prime -> signed exponent).

    The parity is 1 for negative x; denominator primes carry negative exponents.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("cannot factor zero")
    parity = 1 if x < 0 else 0
    exps = dict(factorint(abs(x.numerator)))
    for p, e in factorint(x.denominator).items():
        exps[p] = exps.get(p, 0) - e
    return parity, {p: e for p, e in sorted(exps.items()) if e != 0}


def prime_support(x: Fraction | int) -> tuple[int, ...]:
    """Sorted primes dividing the numerator or denominator of nonzero x."""
    _, exps = factor_fraction(x)
    return tuple(sorted(exps))
