"""Exact Jacobi-sum arithmetic over Z[zeta_n] and the counting formulas for
lambda = |S cap (S+1)|.

The master formula expresses the count through Jacobi sums of the order-n
character chi determined by a: writing beta = a mod q, n = ord(beta),
B = {b in <beta> : b - 1 in <beta>} and psi(beta^j) = zeta_n^j,

    n^2 * count = (p+1)|B| + sum_{1 <= i <= j < n-i} 2(2 - delta_ij) Re(c_ij J(chi^i, chi^j))

with c_ij = sum_{b in B} psi(b)^-i psi(1-b)^-j. All arithmetic stays in
Z[zeta_n]: real parts are taken as z + conj(z), so the accumulated total is
2 n^2 * count and the final division is checked exactly. Closed forms for
q = 5, q = 7 and the order-6 beta with beta^2 = beta - 1 evaluate the same
formula through quadratic decompositions p = x^2 + y^2 or p = x^2 + 3y^2.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from . import arith


# ---------------------------------------------------------------------------
# Z[zeta_n], canonical modulo the n-th cyclotomic polynomial

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of Phi_n, ascending degree."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _poly_divexact(num, den):
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if not c:
            continue
        f = c // den[dd]
        out[i - dd] = f
        for j, dc in enumerate(den):
            num[i - dd + j] -= f * dc
    assert all(c == 0 for c in num), "inexact polynomial division"
    return out


def _reduce(coeffs, n: int) -> tuple:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs)
    if len(c) < n:
        c += [0] * (n - len(c))
    for i in range(len(c) - 1, deg - 1, -1):
        f = c[i]
        if not f:
            continue
        c[i] = 0
        for j in range(deg):
            c[i - deg + j] -= f * phi[j]
    return tuple(c[:deg]) + (0,) * (n - deg)


class CyclotomicInt:
    """An element of Z[zeta_n] in canonical form.

    coeffs has length n; entries at degree >= phi(n) are zero after
    reduction, so equal values always compare equal coefficient-wise.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.coeffs = _reduce(coeffs, n)

    @classmethod
    def zero(cls, n: int) -> "CyclotomicInt":
        return cls.from_integer(n, 0)

    @classmethod
    def from_integer(cls, n: int, value: int) -> "CyclotomicInt":
        return cls(n, (value,) + (0,) * (n - 1))

    @classmethod
    def zeta_power(cls, n: int, j: int, coefficient: int = 1) -> "CyclotomicInt":
        v = [0] * n
        v[j % n] = coefficient
        return cls(n, v)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"mixed cyclotomic orders {self.n} and {other.n}")

    def __add__(self, other):
        self._check(other)
        return CyclotomicInt(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return CyclotomicInt(self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.n, [other * a for a in self.coeffs])
        self._check(other)
        out = [0] * self.n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % self.n] += a * b
        return CyclotomicInt(self.n, out)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def conjugate(self) -> "CyclotomicInt":
        out = [0] * self.n
        for j, a in enumerate(self.coeffs):
            out[(self.n - j) % self.n] += a
        return CyclotomicInt(self.n, out)

    def is_rational_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_integer(self) -> int:
        if not self.is_rational_integer():
            raise ArithmeticError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def norm_against_conjugate(self) -> "CyclotomicInt":
        return self * self.conjugate()

    def __eq__(self, other):
        return (isinstance(other, CyclotomicInt)
                and self.n == other.n and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"CyclotomicInt(n={self.n}, {self.coeffs})"


# ---------------------------------------------------------------------------
# characters mod p and Jacobi sums

class CharContext:
    """A multiplicative character of order n modulo the odd prime p.

    chi(g^e) = zeta_n^e for the chosen generator g; chi(0) is treated as 0
    for nontrivial characters. A full discrete-log table makes each Jacobi
    sum a single O(p) pass.
    """

    def __init__(self, p: int, n: int, g: int):
        if (p - 1) % n:
            raise ValueError(f"order n = {n} does not divide p - 1 = {p - 1}")
        if not arith.is_generator(g, p):
            raise ValueError(f"g = {g} does not generate F_{p}*")
        self.p = p
        self.n = n
        self.g = g
        dlog = [0] * p
        x = 1
        for e in range(p - 1):
            dlog[x] = e
            x = x * g % p
        self.dlog = dlog


def jacobi_sum(ctx: CharContext, i: int, j: int) -> CyclotomicInt:
    """J(chi^i, chi^j) = sum over c + d = 1 of chi^i(c) chi^j(d), exactly."""
    p, n, dlog = ctx.p, ctx.n, ctx.dlog
    i %= n
    j %= n
    if i == 0 and j == 0:
        return CyclotomicInt.from_integer(n, p)
    if i == 0 or j == 0:
        return CyclotomicInt.zero(n)
    counts = [0] * n
    for c in range(2, p):  # c != 0, 1 so both characters are nonzero
        counts[(i * dlog[c] + j * dlog[p + 1 - c]) % n] += 1
    return CyclotomicInt(n, counts)


# ---------------------------------------------------------------------------
# the three counting routes

def count_direct(p: int, q: int, a: int) -> int:
    """|S cap (S+1)| by explicit membership over the p-1 elements of S."""
    arith.validate_cayley_triple(p, q, a)
    n = p * q
    S = set()
    x = 1
    for _ in range(p - 1):
        x = x * a % n
        S.add(x)
    return sum(1 for s in S if (s - 1) % n in S)


def _beta_logs(q: int, beta: int):
    """(n, dlog) for the cyclic group generated by beta mod q."""
    logs = {}
    x = 1
    for e in range(arith.euler_phi(q) + 1):
        if x in logs:
            break
        logs[x] = e
        x = x * beta % q
    return len(logs), logs


def b_set(q: int, beta: int) -> list[int]:
    """B = {b in <beta> : b - 1 in <beta>}, ascending."""
    _, logs = _beta_logs(q, beta)
    return sorted(b for b in logs if (b - 1) % q in logs)


def count_jacobi(p: int, q: int, a: int) -> int:
    """|S cap (S+1)| through the Jacobi-sum master formula.

    The character generator is fixed to alpha = a mod p, matching the
    normalisation used by the quadratic decompositions.
    """
    arith.validate_cayley_triple(p, q, a)
    beta = a % q
    alpha = a % p
    n, blog = _beta_logs(q, beta)
    if pow(beta, n // 2, q) != q - 1:
        raise ArithmeticError(f"beta = {beta} mod {q} has beta^(n/2) != -1")
    B = b_set(q, beta)
    if not B:
        return 0
    ctx = CharContext(p, n, alpha)
    # accumulate 2 n^2 count = 2(p+1)|B| + sum 2(2-delta)(w + conj w)
    acc = CyclotomicInt.from_integer(n, 2 * (p + 1) * len(B))
    for i in range(1, n):
        for j in range(i, n - i):
            cij = [0] * n
            for b in B:
                cij[(-i * blog[b] - j * blog[(1 - b) % q]) % n] += 1
            w = CyclotomicInt(n, cij) * jacobi_sum(ctx, i, j)
            acc = acc + (2 * (2 - (i == j))) * (w + w.conjugate())
    total = acc.rational_integer()
    if total % (2 * n * n):
        raise ArithmeticError(
            f"master formula total {total} not divisible by 2n^2 = {2 * n * n}")
    count = total // (2 * n * n)
    if count < 0:
        raise ArithmeticError(f"master formula produced negative count {count}")
    return count


# ---------------------------------------------------------------------------
# quadratic decompositions and closed forms

FORM_TWO_SQUARES = "x^2+y^2"
FORM_THREE_SQUARES = "x^2+3y^2"


@dataclass(frozen=True)
class QuadDecomp:
    form: str
    p: int
    x: int
    y: int


def quad_decomp(p: int, form: str, g: int) -> QuadDecomp:
    """The unique normalised representation of p by the given form.

    x^2+y^2  (p = 1 mod 4): x = -(2|p) mod 4 and y = x g^((p-1)/4) mod p.
    x^2+3y^2 (p = 1 mod 3): x = -1 mod 3 and 3y = (2 g^((p-1)/3) + 1) x mod p.
    """
    if not arith.is_generator(g, p):
        raise ValueError(f"g = {g} does not generate F_{p}*")
    if form == FORM_TWO_SQUARES:
        if p % 4 != 1:
            raise ValueError(f"p = {p} is not 1 mod 4")
        # -(2|p) mod 4: the Legendre symbol of 2 is +1 exactly when p = +-1 mod 8
        want_x = 3 if p % 8 in (1, 7) else 1
        gq = pow(g, (p - 1) // 4, p)
        for x in range(1, math.isqrt(p) + 1):
            rest = p - x * x
            y = math.isqrt(rest)
            if y * y != rest:
                continue
            for sx in (x, -x):
                if sx % 4 != want_x:
                    continue
                for sy in (y, -y):
                    if (sy - sx * gq) % p == 0:
                        return QuadDecomp(form, p, sx, sy)
        raise ArithmeticError(f"no normalised two-squares decomposition for {p}")
    if form == FORM_THREE_SQUARES:
        if p % 3 != 1:
            raise ValueError(f"p = {p} is not 1 mod 3")
        gq = pow(g, (p - 1) // 3, p)
        for y in range(1, math.isqrt(p // 3) + 2):
            rest = p - 3 * y * y
            if rest < 0:
                break
            x = math.isqrt(rest)
            if x * x != rest:
                continue
            for sx in (x, -x):
                if sx % 3 != 2:
                    continue
                for sy in (y, -y):
                    if (3 * sy - (2 * gq + 1) * sx) % p == 0:
                        return QuadDecomp(form, p, sx, sy)
        raise ArithmeticError(f"no normalised x^2+3y^2 decomposition for {p}")
    raise ValueError(f"unknown form {form!r}")


def rsuv_split(x: int, y: int) -> tuple[int, int, int, int]:
    """The (r, s, u, v) companion of an x^2+3y^2 decomposition.

    Branches on y mod 3; both outputs satisfy 4p = r^2 + 3s^2 = u^2 + 3v^2.
    """
    m = y % 3
    if m == 0:
        r, s, u, v = 2 * x, 2 * y, 2 * x, 2 * y
    elif m == 1:
        r, s, u, v = -x + 3 * y, -x - y, -x - 3 * y, x - y
    else:
        r, s, u, v = -x - 3 * y, x - y, -x + 3 * y, -x - y
    lhs = x * x + 3 * y * y
    assert r * r + 3 * s * s == 4 * lhs and u * u + 3 * v * v == 4 * lhs
    return r, s, u, v


def closed_form_q5(p: int, x: int, y: int, beta: int = 2) -> int:
    """3(p + 1 + 2x +- 4y)/16 for q = 5; the sign follows beta in {2, -2}."""
    if beta % 5 == 2:
        num = 3 * (p + 1 + 2 * x + 4 * y)
    elif beta % 5 == 3:
        num = 3 * (p + 1 + 2 * x - 4 * y)
    else:
        raise ValueError(f"beta = {beta} is not +-2 mod 5")
    if num % 16:
        raise ArithmeticError(f"q=5 closed form is not integral at (p,x,y)=({p},{x},{y})")
    return num // 16


def closed_form_q7(p: int, x: int, y: int) -> int:
    """The beta = 3 closed form for q = 7, branching on y mod 3."""
    m = y % 3
    if m == 0:
        num = 5 * p + 5 + 10 * x + 36 * y
    elif m == 1:
        num = 5 * p + 5 + 40 * x + 60 * y
    else:
        num = 5 * p + 5 + 22 * x + 12 * y
    if num % 36:
        raise ArithmeticError(f"q=7 closed form is not integral at (p,x,y)=({p},{x},{y})")
    return num // 36


def closed_form_n6(p: int, x: int, y: int) -> int:
    """Closed form for order-6 beta with beta^2 = beta - 1 (q > 7)."""
    m = y % 3
    if m == 0:
        num = 2 * p + 2 + 4 * x
    elif m == 1:
        num = 2 * p + 2 + 16 * x + 24 * y
    else:
        num = 2 * p + 2 + 16 * x - 24 * y
    if num % 36:
        raise ArithmeticError(f"order-6 closed form is not integral at (p,x,y)=({p},{x},{y})")
    return num // 36


@dataclass(frozen=True)
class ClosedCount:
    value: int
    branch: str


def count_closed(p: int, q: int, a: int) -> ClosedCount | None:
    """Closed-form count where one applies, tagged with the branch used.

    Covers: empty B (count 0), q = 3, q = 5 (both signs of beta), q = 7
    with order-6 beta (beta = 5 reduces to the beta = 3 branch through the
    inverse generator, which negates y), and any q whose beta satisfies
    beta^2 = beta - 1. Returns None when no closed form is known.
    """
    arith.validate_cayley_triple(p, q, a)
    beta = a % q
    alpha = a % p
    n, _ = _beta_logs(q, beta)
    if not b_set(q, beta):
        return ClosedCount(0, "B-empty")
    if q == 3:
        return ClosedCount((p + 1) // 4, "q3")
    if q == 5:
        d = quad_decomp(p, FORM_TWO_SQUARES, alpha)
        return ClosedCount(closed_form_q5(p, d.x, d.y, beta), f"q5.beta={beta}")
    if q == 7 and n == 6:
        d = quad_decomp(p, FORM_THREE_SQUARES, alpha)
        if beta == 3:
            return ClosedCount(closed_form_q7(p, d.x, d.y), "q7.beta=3")
        # beta = 5: the inverse generator swaps to the beta=3 branch with y -> -y
        return ClosedCount(closed_form_q7(p, d.x, -d.y), "q7.beta=-2")
    if n == 6 and (beta * beta - beta + 1) % q == 0:
        d = quad_decomp(p, FORM_THREE_SQUARES, alpha)
        return ClosedCount(closed_form_n6(p, d.x, d.y), "n6")
    return None


# ---------------------------------------------------------------------------
# congruence and vanishing results

@dataclass(frozen=True)
class Mod6Prediction:
    delta: int
    epsilon: int
    residue: int


def mod6_predict(p: int, q: int, a: int) -> Mod6Prediction:
    """The residue 3*delta + 2*epsilon of the count mod 6.

    delta records whether 2 lies in S; epsilon whether some element of
    multiplicative order 6 in S lies in S + 1.
    """
    arith.validate_cayley_triple(p, q, a)
    n = p * q
    S = set()
    x = 1
    for _ in range(p - 1):
        x = x * a % n
        S.add(x)
    delta = 1 if 2 % n in S else 0
    epsilon = 0
    if (p - 1) % 6 == 0:
        for e in ((p - 1) // 6, 5 * (p - 1) // 6):
            z = pow(a, e, n)
            if (z - 1) % n in S:
                epsilon = 1
                break
    return Mod6Prediction(delta, epsilon, (3 * delta + 2 * epsilon) % 6)


def fermat_vanishing(q: int) -> bool:
    """True when a Fermat prime factor >= 5 plus a factor 3 mod 4 force
    the count to vanish for every admissible (p, a)."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q = {q} is not an odd integer >= 3")
    factors = arith.prime_factors(q)
    has_fermat = any(f >= 5 and (f - 1) & (f - 2) == 0 for f in factors)
    has_3mod4 = any(f % 4 == 3 for f in factors)
    return has_fermat and has_3mod4
