"""Table construction for rings whose elements are n x n matrices over a base ring.

Elements are stored as arrays of base-ring indices of shape ``(count, n, n)``.
Each matrix has an integer code: its row-major entries read as a big-endian
number in base ``|R|``.  Element sets are kept sorted by code, so the zero
matrix (code 0) is always index 0.
"""

from __future__ import annotations

import numpy as np

from .errors import ConstructionNotARing

_BLOCK = 1 << 21


def weights(q: int, n: int) -> np.ndarray:
    return np.array([q ** (n * n - 1 - p) for p in range(n * n)], dtype=np.int64)


def encode(entries: np.ndarray, q: int) -> np.ndarray:
    n = entries.shape[-1]
    flat = entries.reshape(entries.shape[0], n * n).astype(np.int64)
    return flat @ weights(q, n)


def all_matrices(q: int, n: int) -> np.ndarray:
    codes = np.arange(q ** (n * n), dtype=np.int64)
    return decode(codes, q, n)


def decode(codes: np.ndarray, q: int, n: int) -> np.ndarray:
    out = np.empty((len(codes), n * n), dtype=np.int64)
    rest = np.asarray(codes, dtype=np.int64).copy()
    for p in range(n * n - 1, -1, -1):
        out[:, p] = rest % q
        rest //= q
    return out.reshape(len(codes), n, n)


def _lookup(codes: np.ndarray, block_codes: np.ndarray):
    idx = np.searchsorted(codes, block_codes)
    idx = np.minimum(idx, len(codes) - 1)
    return idx, codes[idx] == block_codes


def matrix_tables(base, entries: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Addition and multiplication tables for a set of matrices over ``base``.

    ``entries`` must be sorted by code.  Raises ConstructionNotARing with the
    first (a, b) pair, in row-major order, whose sum or product leaves the set.
    """
    size, n, _ = entries.shape
    q = base.size
    codes = encode(entries, q)
    w = weights(q, n)
    badd, bmul = base.add, base.mul
    flat = entries.reshape(size, n * n)
    add = np.empty((size, size), dtype=np.int32)
    mul = np.empty((size, size), dtype=np.int32)
    live = flat.any(axis=0)  # positions that are nonzero somewhere in the set
    block = max(1, _BLOCK // size)
    for start in range(0, size, block):
        rows = slice(start, min(size, start + block))
        sum_code = np.zeros((rows.stop - start, size), dtype=np.int64)
        for p in np.flatnonzero(live):
            sum_code += badd[flat[rows, p][:, None], flat[None, :, p]].astype(np.int64) * w[p]
        prod_code = np.zeros_like(sum_code)
        for i in range(n):
            for j in range(n):
                acc = None
                for k in range(n):
                    if not (live[i * n + k] and live[k * n + j]):
                        continue
                    term = bmul[entries[rows, i, k][:, None], entries[None, :, k, j]]
                    acc = term if acc is None else badd[acc, term]
                if acc is not None:
                    prod_code += acc.astype(np.int64) * w[i * n + j]
        for table, block_codes, op in ((add, sum_code, "sum"), (mul, prod_code, "product")):
            idx, found = _lookup(codes, block_codes)
            if not found.all():
                a, b = np.unravel_index(np.argmin(found), found.shape)
                raise ConstructionNotARing(
                    f"{op} of elements {start + a} and {b} leaves the element set",
                    (op, int(start + a), int(b)),
                )
            table[rows] = idx
    return add, mul


def matrix_label(base, mat: np.ndarray) -> str:
    n = mat.shape[0]
    nz = np.argwhere(mat != 0)
    if len(nz) == 0:
        return "0"
    if base.one is not None and base.size > 1:
        if len(nz) == n and all(i == j for i, j in nz) and all(mat[i, i] == base.one for i in range(n)):
            return "I"
        if len(nz) == 1:
            i, j = nz[0]
            if mat[i, j] == base.one:
                return f"E{i + 1}{j + 1}"
    rows = ",".join("[" + ",".join(base.labels[v] for v in row) + "]" for row in mat)
    return f"[{rows}]"


def unit_matrix(n: int, i: int, j: int, value: int) -> np.ndarray:
    """The matrix with ``value`` at 1-based position (i, j) and zeros elsewhere."""
    m = np.zeros((n, n), dtype=np.int64)
    m[i - 1, j - 1] = value
    return m
