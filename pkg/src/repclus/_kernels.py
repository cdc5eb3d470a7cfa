"""numba kernels for Ptolemy enumeration over uint64 bit-vectors (<= 63 diagonals)."""

from __future__ import annotations

import os

import numba
import numpy as np
from numba import njit, prange

# the bundled TBB is too old; pick a working layer without probing it
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

MAX_BITS = 63


def configure_threads() -> int:
    """Apply REPCLUS_THREADS (positive integer) to numba; returns the worker count."""
    raw = os.environ.get("REPCLUS_THREADS")
    limit = numba.config.NUMBA_NUM_THREADS
    if raw is None:
        want = limit
    else:
        try:
            want = int(raw)
        except ValueError:
            raise ValueError(f"REPCLUS_THREADS must be a positive integer, got {raw!r}") from None
        if want < 1:
            raise ValueError(f"REPCLUS_THREADS must be a positive integer, got {raw!r}")
    want = min(want, limit)
    numba.set_num_threads(want)
    return want


def pair_arrays(params):
    """CSR tables of crossing pairs.

    ``fwd_*`` lists partners b > a with their connector mask (for checking),
    ``all_*`` lists every partner (for closure).
    """
    from repclus.diagrams import connector_table

    C = connector_table(params)
    m = len(C.by_diag)
    fwd_ptr = np.zeros(m + 1, np.int64)
    all_ptr = np.zeros(m + 1, np.int64)
    fwd_b, fwd_m, all_b, all_m = [], [], [], []
    for a in range(m):
        for b, mask in sorted(C.by_diag[a]):
            all_b.append(b)
            all_m.append(mask)
            if b > a:
                fwd_b.append(b)
                fwd_m.append(mask)
        fwd_ptr[a + 1] = len(fwd_b)
        all_ptr[a + 1] = len(all_b)
    as_u = lambda xs: np.array(xs, dtype=np.uint64)
    as_i = lambda xs: np.array(xs, dtype=np.int64)
    return fwd_ptr, as_i(fwd_b), as_u(fwd_m), all_ptr, as_i(all_b), as_u(all_m)


@njit(cache=True, inline="always")
def _is_ptolemy(s, ptr, nb, nm):
    one = np.uint64(1)
    for a in range(ptr.shape[0] - 1):
        if (s >> np.uint64(a)) & one:
            for k in range(ptr[a], ptr[a + 1]):
                if (s >> np.uint64(nb[k])) & one:
                    if nm[k] & ~s:
                        return False
    return True


@njit(cache=True)
def _scan_chunk(lo_bits, hi, ptr, nb, nm, out, write):
    """Scan all subsets with high part ``hi``; optionally write hits into ``out``."""
    base = np.uint64(hi) << np.uint64(lo_bits)
    count = 0
    for lo in range(1 << lo_bits):
        s = base | np.uint64(lo)
        if _is_ptolemy(s, ptr, nb, nm):
            if write:
                out[count] = s
            count += 1
    return count


@njit(cache=True, parallel=True)
def powerset_counts(m, lo_bits, ptr, nb, nm):
    chunks = 1 << (m - lo_bits)
    counts = np.zeros(chunks, np.int64)
    dummy = np.zeros(1, np.uint64)
    for hi in prange(chunks):
        counts[hi] = _scan_chunk(lo_bits, hi, ptr, nb, nm, dummy, False)
    return counts


@njit(cache=True, parallel=True)
def powerset_fill(m, lo_bits, ptr, nb, nm, offsets, out):
    chunks = 1 << (m - lo_bits)
    for hi in prange(chunks):
        _scan_chunk(lo_bits, hi, ptr, nb, nm, out[offsets[hi] : offsets[hi + 1]], True)


@njit(cache=True)
def _closure(s, ptr, nb, nm):
    one = np.uint64(1)
    m = ptr.shape[0] - 1
    changed = True
    while changed:
        changed = False
        for a in range(m):
            if (s >> np.uint64(a)) & one:
                for k in range(ptr[a], ptr[a + 1]):
                    if (s >> np.uint64(nb[k])) & one:
                        new = nm[k] & ~s
                        if new:
                            s |= new
                            changed = True
    return s


@njit(cache=True)
def closure(s, ptr, nb, nm):
    return _closure(np.uint64(s), ptr, nb, nm)


@njit(cache=True)
def next_closure_run(m, ptr, nb, nm, out, write):
    """Closed sets in ascending integer order (lectic order, bit m-1 first)."""
    one = np.uint64(1)
    A = _closure(np.uint64(0), ptr, nb, nm)
    count = 0
    while True:
        if write:
            out[count] = A
        count += 1
        found = False
        for b in range(m):
            bit = one << np.uint64(b)
            if A & bit:
                continue
            high = ~((bit << one) - one)
            B = _closure((A & high) | bit, ptr, nb, nm)
            if ((B & ~A) & high) == 0:
                A = B
                found = True
                break
        if not found:
            return count
