"""Bit-twiddling inner loops over uint64 world codes.

Each kernel ships twice: a plain-loop version compiled with numba when it
is available, and a vectorized pure-numpy fallback. Set SUPERVENE_NUMBA=0
to force the numpy path. benchmarks/bench_kernels.py compares the two.
"""

import os

import numpy as np


def _ws_witness_loop(codes, super_mask, base_mask):
    # first pair differing inside super_mask while equal inside base_mask
    n = codes.size
    for i in range(n):
        ci = codes[i]
        for j in range(i + 1, n):
            d = ci ^ codes[j]
            if (d & super_mask) != 0 and (d & base_mask) == 0:
                return i, j
    return -1, -1


def _det_witness_loop(codes, base_mask, super_mask):
    # first pair equal inside base_mask while unequal inside super_mask
    n = codes.size
    for i in range(n):
        ci = codes[i]
        for j in range(i + 1, n):
            d = ci ^ codes[j]
            if (d & base_mask) == 0 and (d & super_mask) != 0:
                return i, j
    return -1, -1


def _hamming_edges_loop(codes, n_bits):
    # codes are distinct; emit each unordered pair once, from the endpoint
    # whose differing bit is clear
    n = codes.size
    order = np.argsort(codes)
    sorted_codes = codes[order]
    count = 0
    for i in range(n):
        c = codes[i]
        for b in range(n_bits):
            bit = np.uint64(1) << np.uint64(b)
            if (c & bit) == 0:
                partner = c ^ bit
                pos = np.searchsorted(sorted_codes, partner)
                if pos < n and sorted_codes[pos] == partner:
                    count += 1
    edges = np.empty((count, 2), dtype=np.int64)
    k = 0
    for i in range(n):
        c = codes[i]
        for b in range(n_bits):
            bit = np.uint64(1) << np.uint64(b)
            if (c & bit) == 0:
                partner = c ^ bit
                pos = np.searchsorted(sorted_codes, partner)
                if pos < n and sorted_codes[pos] == partner:
                    j = order[pos]
                    if i < j:
                        edges[k, 0] = i
                        edges[k, 1] = j
                    else:
                        edges[k, 0] = j
                        edges[k, 1] = i
                    k += 1
    keys = edges[:, 0] * n + edges[:, 1]
    perm = np.argsort(keys)
    out = np.empty_like(edges)
    for k in range(count):
        out[k, 0] = edges[perm[k], 0]
        out[k, 1] = edges[perm[k], 1]
    return out


def ws_witness_numpy(codes, super_mask, base_mask, _chunk=2048):
    n = codes.size
    cols = np.arange(n, dtype=np.int64)[None, :]
    for start in range(0, n, _chunk):
        stop = min(start + _chunk, n)
        block = codes[start:stop, None] ^ codes[None, :]
        hit = ((block & super_mask) != 0) & ((block & base_mask) == 0)
        hit &= cols > np.arange(start, stop, dtype=np.int64)[:, None]
        if hit.any():
            i, j = np.divmod(int(np.argmax(hit)), n)
            return start + i, j
    return -1, -1


def det_witness_numpy(codes, base_mask, super_mask, _chunk=2048):
    n = codes.size
    cols = np.arange(n, dtype=np.int64)[None, :]
    for start in range(0, n, _chunk):
        stop = min(start + _chunk, n)
        block = codes[start:stop, None] ^ codes[None, :]
        hit = ((block & base_mask) == 0) & ((block & super_mask) != 0)
        hit &= cols > np.arange(start, stop, dtype=np.int64)[:, None]
        if hit.any():
            i, j = np.divmod(int(np.argmax(hit)), n)
            return start + i, j
    return -1, -1


def hamming_edges_numpy(codes, n_bits):
    n = codes.size
    if n == 0 or n_bits == 0:
        return np.empty((0, 2), dtype=np.int64)
    order = np.argsort(codes)
    sorted_codes = codes[order]
    idx = np.arange(n, dtype=np.int64)
    chunks = []
    for b in range(n_bits):
        bit = np.uint64(1) << np.uint64(b)
        src = idx[(codes & bit) == 0]
        partners = codes[src] ^ bit
        pos = np.searchsorted(sorted_codes, partners)
        pos = np.minimum(pos, n - 1)
        found = sorted_codes[pos] == partners
        src = src[found]
        dst = order[pos[found]]
        chunks.append(np.stack([np.minimum(src, dst), np.maximum(src, dst)], axis=1))
    edges = np.concatenate(chunks, axis=0)
    perm = np.argsort(edges[:, 0] * n + edges[:, 1])
    return edges[perm]


def numpy_kernels():
    return {
        "ws_witness": ws_witness_numpy,
        "det_witness": det_witness_numpy,
        "hamming_edges": hamming_edges_numpy,
    }


def jit_kernels():
    """Compile and return the jitted kernels, ignoring the env flag."""
    from numba import njit

    return {
        "ws_witness": njit(cache=True)(_ws_witness_loop),
        "det_witness": njit(cache=True)(_det_witness_loop),
        "hamming_edges": njit(cache=True)(_hamming_edges_loop),
    }


USING_NUMBA = False
if os.environ.get("SUPERVENE_NUMBA", "1") != "0":
    try:
        _jitted = jit_kernels()
    except ImportError:
        _jitted = None
    if _jitted is not None:
        ws_witness = _jitted["ws_witness"]
        det_witness = _jitted["det_witness"]
        hamming_edges = _jitted["hamming_edges"]
        USING_NUMBA = True

if not USING_NUMBA:
    ws_witness = ws_witness_numpy
    det_witness = det_witness_numpy
    hamming_edges = hamming_edges_numpy
