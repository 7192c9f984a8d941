"""Pure-numpy kernels.

Same contract as the numba kernels, but dtype-generic: on ``object`` arrays
(Python integers) they are exact at any magnitude and never report
overflow. On int64 arrays each step is bounds-checked before it can wrap.
"""
import numpy as np

LIMIT = 1 << 62
LIMIT_F = float(LIMIT) * 0.5


def _is_int64(arr):
    return arr.dtype != object


def _too_big(block):
    return block.size > 0 and int(np.abs(block).max()) >= LIMIT


def _absmax(arr):
    return int(np.abs(arr).max()) if arr.size else 0


def convolve(a, b, n):
    a = a[: n + 1]
    b = b[: n + 1]
    out = np.zeros(n + 1, dtype=np.result_type(a, b))
    if a.size and b.size:
        full = np.convolve(a, b)[: n + 1]
        out[: full.size] = full
    if _is_int64(out) and _too_big(out):
        return out, False
    return out, True


def inverse(a, n):
    int64 = _is_int64(a)
    out = np.zeros(n + 1, dtype=a.dtype)
    s = a[0]
    out[0] = s
    tail = a[1 : n + 1]
    amax = float(_absmax(tail)) if int64 else 0.0
    bmax = 1.0
    for k in range(1, n + 1):
        if int64 and amax * bmax * k >= LIMIT_F:
            return out, False
        j = min(k, a.size - 1)
        if j == 0:
            continue
        # a[1..j] against out[k-1 .. k-j]
        acc = np.dot(a[1 : j + 1], out[k - 1 : k - j - 1 if k - j - 1 >= 0 else None : -1])
        out[k] = -s * acc
        if int64:
            bmax = max(bmax, float(abs(out[k])))
    return out, True


def mul_binomial(arr, c0, a0, b0, c1, a1, b1):
    rows, cols = arr.shape
    out = np.zeros_like(arr)
    for c, a, b in ((c0, a0, b0), (c1, a1, b1)):
        if c == 0 or a >= rows or b >= cols:
            continue
        out[a:, b:] += c * arr[: rows - a, : cols - b]
    if _is_int64(out) and _too_big(out):
        return out, False
    return out, True


def _signed_cumsum(x, s, axis):
    # y_k = x_k + s * y_{k-1} along ``axis``
    if s == 1:
        return np.cumsum(x, axis=axis)
    k = np.arange(x.shape[axis])
    shape = [1] * x.ndim
    shape[axis] = -1
    sign = np.where(k % 2 == 0, 1, -1).reshape(shape)
    if x.dtype == object:
        sign = sign.astype(object)
    return sign * np.cumsum(sign * x, axis=axis)


def divide_binomial(arr, s, a, b):
    out = arr.copy()
    rows, cols = out.shape
    int64 = _is_int64(out)
    if a == 0:
        if b >= cols:
            return out, True
        # residue classes mod b are independent chains; run them as blocks
        nblocks = -(-cols // b)
        padded = np.zeros((rows, nblocks * b), dtype=out.dtype)
        padded[:, :cols] = out
        blocks = padded.reshape(rows, nblocks, b)
        if int64:
            bound = np.abs(blocks).astype(np.float64).sum(axis=1)
            if bound.size and bound.max() >= LIMIT_F:
                return out, False
        res = _signed_cumsum(blocks, s, axis=1)
        out[:, :] = res.reshape(rows, nblocks * b)[:, :cols]
        return out, True
    if b >= cols:
        return out, True
    for m in range(a, rows):
        out[m, b:] += s * out[m - a, : cols - b]
        if int64 and _too_big(out[m]):
            return out, False
    return out, True


def convolve2d(a, b, rows, cols):
    out = np.zeros((rows, cols), dtype=np.result_type(a, b))
    for i in range(min(a.shape[0], rows)):
        ai = a[i, :cols]
        if not ai.any():
            continue
        for j in range(min(b.shape[0], rows - i)):
            bj = b[j, :cols]
            full = np.convolve(ai, bj)[:cols]
            out[i + j, : full.size] += full
    if _is_int64(out) and _too_big(out):
        return out, False
    return out, True
