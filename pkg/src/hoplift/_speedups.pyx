# cython: language_level=3
"""Compiled twin of _kernel_py: same four kernel functions, C-level loops.

Coefficients stay Python ints (arbitrary precision is required: denominators
like |G| and q-factorials compound), so the win comes from loop and call
overhead, not machine arithmetic.
"""

from math import gcd

BACKEND = "cython"


def normalize(nums, den):
    cdef Py_ssize_t i, n
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    g = den
    n = len(nums)
    for i in range(n):
        g = gcd(g, nums[i])
        if g == 1:
            break
    if den < 0:
        g = -g
    if g != 1:
        den //= g
        return tuple([v // g for v in nums]), den
    return tuple(nums), den


def add(anums, aden, bnums, bden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] + bnums[i]
        return normalize(out, aden)
    for i in range(n):
        out[i] = anums[i] * bden + bnums[i] * aden
    return normalize(out, aden * bden)


def sub(anums, aden, bnums, bden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] - bnums[i]
        return normalize(out, aden)
    for i in range(n):
        out[i] = anums[i] * bden - bnums[i] * aden
    return normalize(out, aden * bden)


def mul(anums, aden, bnums, bden, red):
    cdef Py_ssize_t i, j, t, phi = len(anums)
    if phi == 1:
        return normalize((anums[0] * bnums[0],), aden * bden)
    cdef list conv = [0] * (2 * phi - 1)
    for i in range(phi):
        a = anums[i]
        if a:
            for j in range(phi):
                b = bnums[j]
                if b:
                    conv[i + j] = conv[i + j] + a * b
    for j in range(2 * phi - 2, phi - 1, -1):
        c = conv[j]
        if c:
            row = red[j - phi]
            for t in range(phi):
                r = row[t]
                if r:
                    conv[t] = conv[t] + c * r
    return normalize(conv[:phi], aden * bden)


def mul_int(anums, aden, k_num, k_den):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = anums[i] * k_num
    return normalize(out, aden * k_den)
