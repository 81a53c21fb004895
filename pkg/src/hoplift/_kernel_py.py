"""Pure-Python scalar kernel for cyclotomic arithmetic.

An element of Q(zeta_N) is carried as (nums, den): a tuple of ints of
length phi(N) (coordinates in the power basis 1, z, ..., z^{phi-1}) over a
single positive denominator, with gcd(*nums, den) == 1.  Multiplication
reduces degrees >= phi through `red`, the precomputed integer rows
expressing z^{phi+j} in the power basis.

The compiled twin in _speedups.pyx implements the same four functions;
hoplift.kernel picks whichever is importable.
"""

from math import gcd

BACKEND = "python"


def normalize(nums, den):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    g = den
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            break
    if den < 0:
        g = -g
    if g != 1:
        den //= g
        nums = tuple(v // g for v in nums)
    elif not isinstance(nums, tuple):
        nums = tuple(nums)
    return nums, den


def add(anums, aden, bnums, bden):
    if aden == bden:
        return normalize(tuple(x + y for x, y in zip(anums, bnums)), aden)
    return normalize(tuple(x * bden + y * aden for x, y in zip(anums, bnums)), aden * bden)


def sub(anums, aden, bnums, bden):
    if aden == bden:
        return normalize(tuple(x - y for x, y in zip(anums, bnums)), aden)
    return normalize(tuple(x * bden - y * aden for x, y in zip(anums, bnums)), aden * bden)


def mul(anums, aden, bnums, bden, red):
    phi = len(anums)
    if phi == 1:
        return normalize((anums[0] * bnums[0],), aden * bden)
    conv = [0] * (2 * phi - 1)
    for i, a in enumerate(anums):
        if a:
            for j, b in enumerate(bnums):
                if b:
                    conv[i + j] += a * b
    # fold tails z^{phi+j} back into the power basis
    for j in range(2 * phi - 2, phi - 1, -1):
        c = conv[j]
        if c:
            row = red[j - phi]
            for t in range(phi):
                r = row[t]
                if r:
                    conv[t] += c * r
    return normalize(tuple(conv[:phi]), aden * bden)


def mul_int(anums, aden, k_num, k_den):
    return normalize(tuple(v * k_num for v in anums), aden * k_den)
