"""numba-compiled int64 kernels.

Every kernel returns ``(result, ok)``. ``ok`` is False as soon as a value
would leave the safe int64 band ``|x| < 2**62``; the caller then reruns the
operation on Python integers.
"""
import numpy as np
from numba import njit

LIMIT = 1 << 62
LIMIT_F = float(LIMIT) * 0.5


@njit(cache=True)
def convolve(a, b, n):
    out = np.zeros(n + 1, np.int64)
    la = min(a.size, n + 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        lim = min(b.size, n + 1 - i)
        for j in range(lim):
            out[i + j] += ai * b[j]
    for k in range(n + 1):
        if abs(out[k]) >= LIMIT:
            return out, False
    return out, True


@njit(cache=True)
def inverse(a, n):
    out = np.zeros(n + 1, np.int64)
    s = a[0]
    out[0] = s
    amax = 0.0
    for j in range(1, min(a.size, n + 1)):
        v = abs(a[j])
        if v > amax:
            amax = float(v)
    bmax = 1.0
    for k in range(1, n + 1):
        if amax * bmax * k >= LIMIT_F:
            return out, False
        acc = 0
        for j in range(1, min(k, a.size - 1) + 1):
            acc += a[j] * out[k - j]
        v = -s * acc
        out[k] = v
        if abs(v) > bmax:
            bmax = float(abs(v))
    return out, True


@njit(cache=True)
def mul_binomial(arr, c0, a0, b0, c1, a1, b1):
    rows, cols = arr.shape
    out = np.zeros_like(arr)
    for m in range(rows):
        for e in range(cols):
            v = 0
            if m >= a0 and e >= b0:
                v += c0 * arr[m - a0, e - b0]
            if m >= a1 and e >= b1:
                v += c1 * arr[m - a1, e - b1]
            if abs(v) >= LIMIT:
                return out, False
            out[m, e] = v
    return out, True


@njit(cache=True)
def divide_binomial(arr, s, a, b):
    out = arr.copy()
    rows, cols = out.shape
    for m in range(a, rows):
        for e in range(b, cols):
            v = out[m, e] + s * out[m - a, e - b]
            if abs(v) >= LIMIT:
                return out, False
            out[m, e] = v
    return out, True


@njit(cache=True)
def convolve2d(a, b, rows, cols):
    out = np.zeros((rows, cols), np.int64)
    ra = min(a.shape[0], rows)
    for i in range(ra):
        for j in range(min(b.shape[0], rows - i)):
            for x in range(min(a.shape[1], cols)):
                ax = a[i, x]
                if ax == 0:
                    continue
                for y in range(min(b.shape[1], cols - x)):
                    out[i + j, x + y] += ax * b[j, y]
    for i in range(rows):
        for x in range(cols):
            if abs(out[i, x]) >= LIMIT:
                return out, False
    return out, True
