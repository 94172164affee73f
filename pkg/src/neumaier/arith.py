"""Exact integer arithmetic helpers: primality, factorization, CRT, orders.

Everything here is deterministic and exact over Python integers. Primality
uses Miller-Rabin with a fixed witness set that is deterministic far beyond
the supported 63-bit range; factorization combines trial division with
Brent's cycle variant of Pollard rho.
"""

import math

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

FACTOR_LIMIT = 1 << 63


def is_prime(n: int) -> bool:
    """Deterministic primality test for 2 <= n < 2**63."""
    if n < 2:
        raise ValueError(f"primality is defined for n >= 2, got {n}")
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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


def _pollard_brent(n: int) -> int:
    # Deterministic: sweep the polynomial offset c instead of sampling it.
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise AssertionError(f"pollard rho failed on {n}")


def factorize(n: int) -> list[int]:
    """Prime factorization of n as a sorted list with multiplicity."""
    if n < 2:
        raise ValueError(f"factorization is defined for n >= 2, got {n}")
    if n >= FACTOR_LIMIT:
        raise ValueError(f"n = {n} exceeds the supported range (< 2**63)")
    factors = []
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        while n % p == 0:
            factors.append(p)
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors.append(m)
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return sorted(factors)


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    return sorted(set(factorize(n)))


def prime_power_factorization(n: int) -> list[tuple[int, int]]:
    """[(p, e), ...] with p ascending and n = prod p**e."""
    out = []
    for p in prime_factors(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def nu2(n: int) -> int:
    """2-adic valuation of n > 0."""
    r = 0
    while n % 2 == 0:
        n //= 2
        r += 1
    return r


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2."""
    if math.gcd(m1, m2) != 1:
        raise ValueError(f"moduli {m1}, {m2} are not coprime")
    inv = pow(m1 % m2, -1, m2)
    return (r1 + (r2 - r1) * inv % m2 * m1) % (m1 * m2)


def crt(residues, moduli) -> int:
    """CRT over pairwise coprime moduli."""
    x, m = 0, 1
    for r, mod in zip(residues, moduli):
        x = crt_pair(x, m, r, mod)
        m *= mod
    return x


def multiplicative_order(x: int, mod: int) -> int:
    """Order of x in (Z/mod)*; requires gcd(x, mod) = 1."""
    if math.gcd(x, mod) != 1:
        raise ValueError(f"{x} is not a unit modulo {mod}")
    group = euler_phi(mod)
    order = group
    for p in prime_factors(group):
        while order % p == 0 and pow(x, order // p, mod) == 1:
            order //= p
    return order


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in prime_power_factorization(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def is_generator(x: int, p: int) -> bool:
    """True iff x generates the multiplicative group of the prime field F_p."""
    if x % p == 0:
        return False
    return all(pow(x, (p - 1) // f, p) != 1 for f in prime_factors(p - 1))


def smallest_generator(p: int) -> int:
    for g in range(2, p):
        if is_generator(g, p):
            return g
    raise ValueError(f"{p} is not an odd prime")


def find_generator(p: int, predicate) -> int:
    """Smallest generator of F_p* satisfying predicate(g).

    Mirrors the incremental search used in the worked constructions; the
    callers only use predicates that provably admit a generator.
    """
    for g in range(2, p):
        if is_generator(g, p) and predicate(g):
            return g
    raise ArithmeticError(f"no generator of F_{p}* satisfies the predicate")


def validate_cayley_triple(p: int, q: int, a: int) -> None:
    """Check the admissibility of (p, q, a) for the two-modulus Cayley graphs.

    Raises ValueError naming the first violated condition:
    p odd prime, q odd >= 3 coprime to p, a a unit mod pq whose reduction
    generates F_p* and with a^((p-1)/2) = -1 (mod pq).
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p = {p} is not an odd prime")
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q = {q} is not an odd integer >= 3")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p = {p} and q = {q} are not coprime")
    n = p * q
    if math.gcd(a, n) != 1:
        raise ValueError(f"a = {a} is not a unit modulo {n}")
    if not is_generator(a % p, p):
        raise ValueError(f"a = {a} does not generate the multiplicative group mod {p}")
    if pow(a, (p - 1) // 2, n) != n - 1:
        raise ValueError(f"a^((p-1)/2) is not -1 modulo {n} for a = {a}")
