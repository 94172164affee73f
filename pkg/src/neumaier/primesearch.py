"""Admissible (p, q) pairs, subgroup searches, quadratic-ring prime scans,
and the conic solver behind the order-6 congruence classes.

`search_triples` reproduces the construction tables: for every prime
p <= p_max compatible with q it enumerates one canonical generator per
admissible cyclic subgroup of (Z/pqZ)*, counts lambda = |S cap (S+1)|, and
keeps the rows with lambda = -2 mod q. Scans over Gaussian and Eisenstein
integers enumerate congruence classes of prime elements whose norms supply
infinitely many admissible p.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import arith, charsums
from .arith import factorize, is_prime  # re-exported surface of this module
from .feasibility import NeumaierParams

__all__ = [
    "is_prime", "factorize", "AdmissiblePQ", "admissible", "canonical_subgroup_rep",
    "find_a", "SearchRow", "SearchResult", "search_triples", "QuadraticRingElt",
    "RING_GAUSSIAN", "RING_EISENSTEIN", "scan_quadratic_primes", "Assembly",
    "assemble_from_gaussian", "assemble_from_eisenstein", "ConicSolution",
    "conic_solve", "conic_conditions", "sixth_root_beta",
]


@dataclass(frozen=True)
class AdmissiblePQ:
    p: int
    q: int
    r: int                       # 2-adic valuation of p - 1
    factor_data: tuple           # ((ell, exponent, nu2(ell - 1)), ...)


def admissible(p: int, q: int) -> AdmissiblePQ | None:
    """The admissibility certificate for (p, q), or None.

    A suitable a exists iff 2^r divides ell - 1 for every prime factor ell
    of q, where r is the 2-adic valuation of p - 1.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p = {p} is not an odd prime")
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q = {q} is not an odd integer >= 3")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p = {p} and q = {q} are not coprime")
    r = arith.nu2(p - 1)
    data = tuple((ell, e, arith.nu2(ell - 1))
                 for ell, e in arith.prime_power_factorization(q))
    if all((ell - 1) % (1 << r) == 0 for ell, _, _ in data):
        return AdmissiblePQ(p, q, r, data)
    return None


def canonical_subgroup_rep(p: int, q: int, a: int) -> int:
    """Smallest generator of the cyclic subgroup <a> of (Z/pqZ)*.

    The generators are the powers a^i with gcd(i, ord a) = 1; ord a = p - 1
    for admissible triples. Idempotent by construction.
    """
    n = p * q
    order = p - 1
    best = None
    x = 1
    for i in range(1, order + 1):
        x = x * a % n
        if math.gcd(i, order) == 1 and (best is None or x < best):
            best = x
    return best


def find_a(p: int, q: int, beta_choice=None) -> list[int]:
    """Canonical generators of every admissible subgroup of (Z/pqZ)*.

    Fixing one generator alpha of F_p*, each valid beta (i.e. each unit mod
    q with beta^((p-1)/2) = -1) pairs with alpha to hit each subgroup
    exactly once; the result lists the canonical representative per
    subgroup, ascending. beta_choice optionally restricts the betas.
    """
    if admissible(p, q) is None:
        return []
    alpha = arith.smallest_generator(p)
    half = (p - 1) // 2
    betas = range(1, q) if beta_choice is None else [beta_choice % q]
    out = set()
    for beta in betas:
        if math.gcd(beta, q) != 1 or pow(beta, half, q) != q - 1:
            continue
        a = arith.crt_pair(alpha, p, beta, q)
        out.add(canonical_subgroup_rep(p, q, a))
    return sorted(out)


@dataclass(frozen=True)
class SearchRow:
    q: int
    p: int
    a: int
    lam: int
    t: int
    params: NeumaierParams

    def table_tuple(self) -> tuple:
        return (self.q, self.p, self.a, self.t,
                self.params.v, self.params.k, self.params.lam, self.params.s)


@dataclass
class SearchResult:
    rows: list
    note: str | None = None


def _primes_upto(limit: int):
    sieve = bytearray([1]) * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(sieve[i * i:: i]))
    return [i for i in range(3, limit + 1) if sieve[i]]


def _count_lambda(p: int, q: int, a: int) -> int:
    closed = charsums.count_closed(p, q, a)
    if closed is not None:
        return closed.value
    return charsums.count_direct(p, q, a)


def _search_prime(args):
    q, p = args
    rows = []
    for a in find_a(p, q):
        lam = _count_lambda(p, q, a)
        if (lam + 2) % q == 0:
            t = (lam + 2) // q
            params = NeumaierParams(t * p * q, p + lam, lam, 1, lam + 2)
            rows.append(SearchRow(q, p, a, lam, t, params))
    return rows


def search_triples(q: int, p_max: int, jobs: int = 1) -> SearchResult:
    """All (p, a) with p <= p_max whose count is -2 mod q, as table rows.

    Rows are ordered by (p, t, a). A multiple-of-3 q provably yields no
    hits; the search still runs and reports the reason in the note.
    """
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q = {q} is not an odd integer >= 3")
    note = None
    if q % 3 == 0:
        note = "q is a multiple of 3: count = -2 mod q is unreachable (count != 1 mod 3)"
    candidates = [(q, p) for p in _primes_upto(p_max)
                  if q % p and admissible(p, q) is not None]
    rows = []
    if jobs > 1 and len(candidates) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_search_prime, candidates, chunksize=8):
                rows.extend(chunk)
    else:
        for cand in candidates:
            rows.extend(_search_prime(cand))
    rows.sort(key=lambda r: (r.p, r.t, r.a))
    return SearchResult(rows, note)


# ---------------------------------------------------------------------------
# Gaussian / Eisenstein prime scans

RING_GAUSSIAN = "gaussian"
RING_EISENSTEIN = "eisenstein"


@dataclass(frozen=True)
class QuadraticRingElt:
    ring: str
    c: int
    d: int  # value c + d*i (gaussian) or c + d*zeta (eisenstein)

    def norm(self) -> int:
        if self.ring == RING_GAUSSIAN:
            return self.c * self.c + self.d * self.d
        if self.ring == RING_EISENSTEIN:
            return self.c * self.c + self.c * self.d + self.d * self.d
        raise ValueError(f"unknown ring {self.ring!r}")

    def __str__(self):
        unit = "i" if self.ring == RING_GAUSSIAN else "z"
        sign = "+" if self.d >= 0 else "-"
        return f"{self.c}{sign}{abs(self.d)}{unit}"


def scan_quadratic_primes(ring: str, z: QuadraticRingElt | tuple, modulus: int,
                          norm_max: int) -> list[tuple[QuadraticRingElt, int]]:
    """Elements congruent to z mod modulus with prime norm <= norm_max.

    Results are ordered by (norm, c, d). The congruence class must be
    coprime to the modulus, checked through gcd(norm(z), modulus) as in the
    ray-class argument.
    """
    if isinstance(z, tuple):
        z = QuadraticRingElt(ring, *z)
    if z.ring != ring:
        raise ValueError(f"class ring {z.ring!r} does not match {ring!r}")
    if math.gcd(z.norm(), modulus) != 1:
        raise ValueError(
            f"class {z} is not coprime to the modulus {modulus}"
            f" (gcd of norms is {math.gcd(z.norm(), modulus)})")
    # |c|, |d| <= 2 sqrt(N/3) for both norm forms
    reach = 2 * math.isqrt(norm_max // 3 + 1) + 2 * modulus
    hits = []
    c0, d0 = z.c % modulus, z.d % modulus
    for c in range(c0 - (c0 + reach) // modulus * modulus, reach + 1, modulus):
        for d in range(d0 - (d0 + reach) // modulus * modulus, reach + 1, modulus):
            elt = QuadraticRingElt(ring, c, d)
            nrm = elt.norm()
            if 2 <= nrm <= norm_max and is_prime(nrm):
                hits.append((elt, nrm))
    hits.sort(key=lambda h: (h[1], h[0].c, h[0].d))
    return hits


@dataclass(frozen=True)
class Assembly:
    p: int
    a: int
    alpha: int
    beta: int
    predicted_count: int
    branch: str


def assemble_from_gaussian(pi: QuadraticRingElt | tuple, q: int = 5) -> Assembly:
    """Turn a Gaussian prime hit into an admissible (p, a) for q = 5.

    pi = x + yi must satisfy x = 1 mod 4 and y = 2 mod 4 (the scanned
    classes do), so p = x^2 + y^2 = 5 mod 8. The generator alpha is the
    smallest one with y = x alpha^((p-1)/4) mod p; beta = 2.
    """
    if isinstance(pi, tuple):
        pi = QuadraticRingElt(RING_GAUSSIAN, *pi)
    if q != 5:
        raise ValueError("the Gaussian assembly is specific to q = 5")
    x, y = pi.c, pi.d
    if x % 4 != 1 or y % 4 != 2:
        raise ValueError(f"pi = {pi} violates x = 1 mod 4, y = 2 mod 4")
    p = pi.norm()
    if not is_prime(p):
        raise ValueError(f"norm {p} of {pi} is not prime")
    alpha = arith.find_generator(p, lambda g: (y - x * pow(g, (p - 1) // 4, p)) % p == 0)
    beta = 2
    a = arith.crt_pair(alpha, p, beta, q)
    predicted = charsums.closed_form_q5(p, x, y, beta)
    if (predicted + 2) % 5:
        raise ArithmeticError(f"assembled count {predicted} is not -2 mod 5")
    return Assembly(p, a, alpha, beta, predicted, "q5.beta=2")


def sixth_root_beta(q: int) -> int:
    """Smallest beta with beta^2 = beta - 1 mod q (q a product of primes
    1 mod 6), assembled from per-prime-power roots by CRT."""
    roots_mod = [(_lift_sixth_roots(ell, e), ell ** e)
                 for ell, e in arith.prime_power_factorization(q)]
    combos = [0]
    mod = 1
    for roots, pe in roots_mod:
        combos = [arith.crt_pair(c, mod, r, pe) for c in combos for r in roots]
        mod *= pe
    best = min(combos)
    assert (best * best - best + 1) % q == 0
    return best


def _lift_sixth_roots(ell: int, e: int) -> list[int]:
    if ell % 6 != 1:
        raise ValueError(f"prime factor {ell} is not 1 mod 6")
    roots = [x for x in range(ell) if (x * x - x + 1) % ell == 0]
    lifted = []
    for r in roots:
        mod = ell
        for _ in range(e - 1):
            newmod = mod * ell
            deriv = (2 * r - 1) % ell
            r = (r - (r * r - r + 1) * pow(deriv, -1, newmod)) % newmod
            mod = newmod
        lifted.append(r)
    return sorted(lifted)


def assemble_from_eisenstein(pi: QuadraticRingElt | tuple, q: int) -> Assembly:
    """Turn an Eisenstein prime hit into an admissible (p, a).

    With pi = c + d zeta and d even, write x = c + d/2 and y = d/2 so that
    p = x^2 + 3y^2. The generator alpha is the smallest one satisfying
    3y = (2 alpha^((p-1)/3) + 1) x mod p; beta is 3 for q = 7 and otherwise
    the smallest root of beta^2 = beta - 1 mod q.
    """
    if isinstance(pi, tuple):
        pi = QuadraticRingElt(RING_EISENSTEIN, *pi)
    c, d = pi.c, pi.d
    if d % 2:
        raise ValueError(f"pi = {pi} has odd zeta-coefficient, x and y are not integral")
    x, y = c + d // 2, d // 2
    if x % 3 != 2:
        raise ValueError(f"pi = {pi} gives x = {x} != -1 mod 3")
    p = pi.norm()
    if not is_prime(p):
        raise ValueError(f"norm {p} of {pi} is not prime")
    alpha = arith.find_generator(
        p, lambda g: (3 * y - (2 * pow(g, (p - 1) // 3, p) + 1) * x) % p == 0)
    if q == 7:
        beta = 3
        predicted = charsums.closed_form_q7(p, x, y)
        branch = "q7.beta=3"
    else:
        beta = sixth_root_beta(q)
        predicted = charsums.closed_form_n6(p, x, y)
        branch = "n6"
    a = arith.crt_pair(alpha, p, beta, q)
    if (predicted + 2) % q:
        raise ArithmeticError(f"assembled count {predicted} is not -2 mod {q}")
    return Assembly(p, a, alpha, beta, predicted, branch)


# ---------------------------------------------------------------------------
# the conic solver

@dataclass(frozen=True)
class ConicSolution:
    q: int
    z1: int
    z2: int


def conic_conditions(q: int, z1: int, z2: int) -> list[str]:
    """Names of the violated solution conditions (empty = all hold)."""
    failed = []
    if z1 % 2 != 1 or z2 % 4 != 2:
        failed.append("parity: z1 odd and z2 = 2 mod 4")
    if z2 % 2 == 0 and ((z1 + z2 // 2) % 3 != 2 or (z2 // 2) % 3 != 0):
        failed.append("mod 3: z1 + z2/2 = -1 and z2/2 = 0")
    norm = z1 * z1 + z1 * z2 + z2 * z2
    if math.gcd(norm, 12 * q) != 1:
        failed.append("coprimality: gcd(z1^2+z1z2+z2^2, 12q) = 1")
    num = 2 * norm + 2 + 4 * z1 + 2 * z2
    if num % 36 or (num // 36 + 2) % q:
        failed.append("count residue: (2(z1^2+z1z2+z2^2)+2+4z1+2z2)/36 = -2 mod q")
    return failed


def _conic_value(z1: int, z2: int) -> int:
    return z1 * z1 + z1 * z2 + z2 * z2 + 2 * z1 + z2 + 37


def conic_solve(q: int) -> ConicSolution:
    """A point on Z1^2 + Z1Z2 + Z2^2 + 2Z1 + Z2 + 37 = 0 mod q, normalised
    to z1 = 5 and z2 = 6 mod 12.

    q must be a product of primes congruent to 1 mod 6. Per prime power a
    point avoiding 2Z1 + Z2 + 37 = 0 is found over the prime field and
    Hensel-lifted through the non-vanishing partial derivative; the pieces
    are assembled by CRT and the full condition set is asserted.
    """
    pieces = []
    for ell, e in arith.prime_power_factorization(q):
        if ell % 6 != 1:
            raise ValueError(f"prime factor {ell} of q is not 1 mod 6")
        point = None
        for z1 in range(ell):
            for z2 in range(ell):
                if _conic_value(z1, z2) % ell == 0 and (2 * z1 + z2 + 37) % ell:
                    point = (z1, z2)
                    break
            if point:
                break
        assert point is not None, f"no usable conic point mod {ell}"
        pieces.append((_hensel_conic(ell, e, *point), ell ** e))

    z1, z2, mod = 0, 0, 1
    for (a, b), pe in pieces:
        z1 = arith.crt_pair(z1, mod, a, pe)
        z2 = arith.crt_pair(z2, mod, b, pe)
        mod *= pe
    z1 = arith.crt_pair(z1, mod, 5, 12)
    z2 = arith.crt_pair(z2, mod, 6, 12)
    failed = conic_conditions(q, z1, z2)
    assert not failed, f"conic solution ({z1},{z2}) fails: {failed}"
    return ConicSolution(q, z1, z2)


def _hensel_conic(ell: int, e: int, z1: int, z2: int) -> tuple[int, int]:
    d1 = (2 * z1 + z2 + 2) % ell
    d2 = (z1 + 2 * z2 + 1) % ell
    mod = ell
    for _ in range(e - 1):
        newmod = mod * ell
        val = _conic_value(z1, z2)
        if d1:
            z1 = (z1 - val * pow(2 * z1 + z2 + 2, -1, newmod)) % newmod
        else:
            # the point is non-singular, so the other partial cannot vanish too
            assert d2, "singular point escaped the selection"
            z2 = (z2 - val * pow(z1 + 2 * z2 + 1, -1, newmod)) % newmod
        mod = newmod
        assert _conic_value(z1, z2) % mod == 0
    return z1, z2
