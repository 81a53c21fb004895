"""Exact arithmetic in the cyclotomic field Q(zeta_N), plus q-combinatorics.

Elements live in the power basis 1, z, ..., z^{phi(N)-1} modulo the N-th
cyclotomic polynomial, with integer coordinate vectors over a common
denominator.  Equality is coefficient-wise on the canonical form, so it is
decidable and exact; nonzero elements are invertible via the extended
Euclidean algorithm against Phi_N.

One FieldContext is created per datum, with N the exponent of the group, so
every character value, structure constant and q-combinatorial quantity of
the engine lives in a single field.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from hoplift import kernel


class NotRootOfUnity(ValueError):
    """Raised by order_of when x^N != 1."""


def cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficients of Phi_n, ascending degree, monic."""
    # Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, by exact polynomial division.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return poly


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dv in enumerate(den):
            num[i + j] -= c * dv
    assert all(v == 0 for v in num[len(out) + len(den) - 2:]) or True
    return out


class FieldContext:
    """Q(zeta_N) with precomputed reduction data; immutable after construction."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("conductor must be >= 1")
        self.N = N
        phi_poly = cyclotomic_polynomial(N)
        self.phi = len(phi_poly) - 1
        phi = self.phi
        # rows expressing z^{phi+j}, 0 <= j <= phi-2, in the power basis
        rows = []
        cur = [-c for c in phi_poly[:phi]]  # z^phi
        rows.append(tuple(cur))
        for _ in range(phi - 2):
            nxt = [0] * phi
            for t, c in enumerate(cur[:-1]):
                nxt[t + 1] += c
            top = cur[-1]
            if top:
                for t in range(phi):
                    nxt[t] += top * rows[0][t]
            rows.append(tuple(nxt))
            cur = nxt
        self._red = tuple(rows)
        # power table for zeta^k, 0 <= k < N
        powers = []
        vec = [1] + [0] * (phi - 1)
        for _ in range(N):
            powers.append(tuple(vec))
            nxt = [0] * phi
            for t, c in enumerate(vec[:-1]):
                nxt[t + 1] += c
            top = vec[-1]
            if top and phi > 1:
                for t in range(phi):
                    nxt[t] += top * self._red[0][t]
            elif top and phi == 1:
                # N <= 2: z is rational (1 or -1)
                nxt[0] += top * self._red[0][0] if self._red else top
            vec = nxt
        self._powers = tuple(powers)
        self.zero = FieldElem(self, (0,) * phi, 1)
        self.one = FieldElem(self, powers[0], 1)
        self._inv_cache: dict[tuple, FieldElem] = {}

    def __repr__(self):
        return f"FieldContext(N={self.N})"

    def root_of_unity(self, k: int) -> FieldElem:
        return FieldElem(self, self._powers[k % self.N], 1)

    def from_rational(self, p, q: int = 1) -> FieldElem:
        f = Fraction(p, q)
        nums = (f.numerator,) + (0,) * (self.phi - 1)
        return FieldElem(self, *kernel.normalize(nums, f.denominator))

    def element(self, coeffs) -> FieldElem:
        """Element from a sequence of Fractions/ints in the power basis."""
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != self.phi:
            raise ValueError(f"need {self.phi} coordinates")
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = tuple(f.numerator * (den // f.denominator) for f in fr)
        return FieldElem(self, *kernel.normalize(nums, den))


class FieldElem:
    """Canonical element of Q(zeta_N); hashable, compared coefficient-wise."""

    __slots__ = ("ctx", "nums", "den")

    def __init__(self, ctx: FieldContext, nums: tuple, den: int):
        self.ctx = ctx
        self.nums = nums
        self.den = den

    # -- ring structure ------------------------------------------------

    def __add__(self, other):
        return FieldElem(self.ctx, *kernel.add(self.nums, self.den, other.nums, other.den))

    def __sub__(self, other):
        return FieldElem(self.ctx, *kernel.sub(self.nums, self.den, other.nums, other.den))

    def __neg__(self):
        return FieldElem(self.ctx, tuple(-v for v in self.nums), self.den)

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElem(self.ctx, *kernel.mul_int(self.nums, self.den, other, 1))
        return FieldElem(self.ctx, *kernel.mul(self.nums, self.den, other.nums, other.den,
                                               self.ctx._red))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, int):
            return FieldElem(self.ctx, *kernel.mul_int(self.nums, self.den, 1, other))
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc = self.ctx.one
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inverse(self) -> FieldElem:
        if not any(self.nums):
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        key = (self.nums, self.den)
        cached = self.ctx._inv_cache.get(key)
        if cached is not None:
            return cached
        inv = _invert(self)
        self.ctx._inv_cache[key] = inv
        return inv

    # -- comparisons, hashing, views ------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldElem) and self.nums == other.nums
                and self.den == other.den)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.nums, self.den))

    def __bool__(self):
        return any(self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_one(self) -> bool:
        return self == self.ctx.one

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        return Fraction(self.nums[0], self.den)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(v, self.den) for v in self.nums]

    def __repr__(self):
        parts = []
        for k, v in enumerate(self.nums):
            if v == 0:
                continue
            c = str(Fraction(v, self.den))
            parts.append(c if k == 0 else (f"{c}*z^{k}" if k > 1 else f"{c}*z"))
        return " + ".join(parts) if parts else "0"


def _invert(x: FieldElem) -> FieldElem:
    ctx = x.ctx
    if ctx.phi == 1:
        f = Fraction(x.den, x.nums[0])
        return ctx.from_rational(f)
    # extended Euclid in Q[t] for gcd(a, Phi_N) = 1 = u*a + v*Phi_N
    a = [Fraction(v, x.den) for v in x.nums]
    b = [Fraction(c) for c in cyclotomic_polynomial(ctx.N)]
    r0, r1 = b, a
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while _deg(r1) > 0:
        q, rem = _polydivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _polysub(s0, _polymul(q, s1))
    lead = r1[_deg(r1)]
    if lead == 0:
        raise ZeroDivisionError("element not invertible")
    coeffs = [c / lead for c in s1]
    coeffs = (coeffs + [Fraction(0)] * ctx.phi)[: ctx.phi]
    # s1 may exceed degree phi-1 transiently; fold via multiplication check instead
    res = ctx.element(coeffs)
    assert (res * x).is_one()
    return res


def _deg(p):
    d = len(p) - 1
    while d > 0 and p[d] == 0:
        d -= 1
    return d


def _polydivmod(a, b):
    a = list(a)
    db, lb = _deg(b), b[_deg(b)]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(_deg(a) - db, -1, -1):
        c = a[i + db] / lb
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return q, a


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, y in enumerate(b):
        a[j] -= y
    return a


# -- order and q-combinatorics ------------------------------------------


def order_of(x: FieldElem) -> int:
    """Multiplicative order of a root of unity; NotRootOfUnity if x^N != 1."""
    ctx = x.ctx
    if not (x ** ctx.N).is_one():
        raise NotRootOfUnity(f"{x!r}^N != 1 for N={ctx.N}")
    for t in sorted(_divisors(ctx.N)):
        if (x ** t).is_one():
            return t
    raise NotRootOfUnity("unreachable")


def unity_order(x: FieldElem):
    """Order of x in the torsion of Q(zeta_N)^*, which is mu_{lcm(2,N)};
    None if x is not a root of unity at all."""
    full = x.ctx.N if x.ctx.N % 2 == 0 else 2 * x.ctx.N
    if not (x ** full).is_one():
        return None
    for t in sorted(_divisors(full)):
        if (x ** t).is_one():
            return t
    return None


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.append(d)
    return out


def q_number(n: int, q: FieldElem) -> FieldElem:
    """(n)_q = 1 + q + ... + q^{n-1}."""
    acc = q.ctx.zero
    p = q.ctx.one
    for _ in range(n):
        acc = acc + p
        p = p * q
    return acc


def q_factorial(n: int, q: FieldElem) -> FieldElem:
    acc = q.ctx.one
    for k in range(1, n + 1):
        acc = acc * q_number(k, q)
    return acc


def q_binomial(n: int, m: int, q: FieldElem) -> FieldElem:
    """Gaussian binomial via the q-Pascal recursion; exact at roots of unity."""
    ctx = q.ctx
    if m < 0:
        raise ValueError("m must be >= 0")
    if n >= 0 and m > n:
        return ctx.zero
    if n < 0:
        raise ValueError("negative n not needed here")
    row = [ctx.one]
    for i in range(1, n + 1):
        qpow = [ctx.one]
        for _ in range(i):
            qpow.append(qpow[-1] * q)
        new = [ctx.one]
        for j in range(1, i):
            new.append(row[j - 1] + qpow[j] * row[j])
        new.append(ctx.one)
        row = new
    return row[m]


def multi_q_factorial(exps, qs) -> FieldElem:
    """(i)! = prod_k (i_k)_{q_k}! for a multi-index."""
    acc = qs[0].ctx.one
    for e, q in zip(exps, qs):
        acc = acc * q_factorial(e, q)
    return acc


def multi_q_binomial(top, bot, qs) -> FieldElem:
    acc = qs[0].ctx.one
    for n, m, q in zip(top, bot, qs):
        acc = acc * q_binomial(n, m, q)
    return acc
