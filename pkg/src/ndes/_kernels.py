"""Compiled CSR kernels shared by the graph and similarity modules.

All functions take the raw ``indptr`` / ``indices`` arrays of a Graph and use
exact int64 arithmetic.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def intersect_sorted(a, b, out):
    """Merge-intersect two strictly ascending arrays into ``out``; return the count."""
    i = j = k = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        if a[i] < b[j]:
            i += 1
        elif a[i] > b[j]:
            j += 1
        else:
            out[k] = a[i]
            k += 1
            i += 1
            j += 1
    return k


@njit(cache=True, nogil=True)
def intersect_count(a, b):
    i = j = k = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        if a[i] < b[j]:
            i += 1
        elif a[i] > b[j]:
            j += 1
        else:
            k += 1
            i += 1
            j += 1
    return k


@njit(cache=True, nogil=True)
def _adjacent(indptr, indices, w, z):
    lo, hi = indptr[w], indptr[w + 1]
    while lo < hi:
        mid = (lo + hi) >> 1
        v = indices[mid]
        if v < z:
            lo = mid + 1
        elif v > z:
            hi = mid
        else:
            return True
    return False


@njit(cache=True, nogil=True)
def rho_terms(indptr, indices, x, y, buf):
    """The five neighborhood-density terms for edge (x, y).

    ``buf`` must hold at least min(deg x, deg y) entries.  Returns
    (common, x_side, y_side, links, link_common).
    """
    nx_ = indices[indptr[x] : indptr[x + 1]]
    ny_ = indices[indptr[y] : indptr[y + 1]]
    c = intersect_sorted(nx_, ny_, buf)
    t2 = 0
    t3 = 0
    t4 = 0
    t5 = 0
    for i in range(c):
        z = buf[i]
        nz = indices[indptr[z] : indptr[z + 1]]
        t2 += intersect_count(nx_, nz)
        t3 += intersect_count(ny_, nz)
    for i in range(c):
        w = buf[i]
        nw = indices[indptr[w] : indptr[w + 1]]
        for j in range(i + 1, c):
            z = buf[j]
            if _adjacent(indptr, indices, w, z):
                t4 += 1
                t5 += intersect_count(nw, indices[indptr[z] : indptr[z + 1]])
    return c, t2, t3, t4, t5


@njit(cache=True, nogil=True)
def rho_edge(indptr, indices, x, y, buf):
    dx = indptr[x + 1] - indptr[x]
    dy = indptr[y + 1] - indptr[y]
    c, t2, t3, t4, t5 = rho_terms(indptr, indices, x, y, buf)
    if c == 0:
        # a degree-1 endpoint wins over the "both degrees > 1" branch
        return 1 if (dx == 1 or dy == 1) else 0
    return c + t2 + t3 + t4 + t5


@njit(cache=True, nogil=True)
def rho_edges(indptr, indices, src, dst):
    """Density for every (src[i], dst[i]) edge."""
    n = len(indptr) - 1
    kmax = 0
    for v in range(n):
        d = indptr[v + 1] - indptr[v]
        if d > kmax:
            kmax = d
    buf = np.empty(kmax, dtype=np.int64)
    out = np.empty(len(src), dtype=np.int64)
    for e in range(len(src)):
        out[e] = rho_edge(indptr, indices, src[e], dst[e], buf)
    return out


@njit(cache=True, nogil=True)
def arc_positions(indptr, indices, src, dst):
    """CSR slot of each arc (src[i], dst[i]); -1 when the arc is absent."""
    out = np.empty(len(src), dtype=np.int64)
    for e in range(len(src)):
        w, z = src[e], dst[e]
        lo, hi = indptr[w], indptr[w + 1]
        pos = -1
        while lo < hi:
            mid = (lo + hi) >> 1
            v = indices[mid]
            if v < z:
                lo = mid + 1
            elif v > z:
                hi = mid
            else:
                pos = mid
                break
        out[e] = pos
    return out


@njit(cache=True, nogil=True)
def common_counts(indptr, indices, src, dst):
    out = np.empty(len(src), dtype=np.int64)
    for e in range(len(src)):
        x, y = src[e], dst[e]
        out[e] = intersect_count(indices[indptr[x] : indptr[x + 1]], indices[indptr[y] : indptr[y + 1]])
    return out


@njit(cache=True, nogil=True)
def degree_weighted_sums(indptr, indices, src, dst, log_weight):
    """Sum over common neighbors z of 1/log(deg z) (``log_weight``) or 1/deg z.

    Common neighbors are visited in ascending order so a single pair and a
    batch give bit-identical sums.
    """
    out = np.empty(len(src), dtype=np.float64)
    for e in range(len(src)):
        x, y = src[e], dst[e]
        a = indices[indptr[x] : indptr[x + 1]]
        b = indices[indptr[y] : indptr[y + 1]]
        i = j = 0
        s = 0.0
        while i < len(a) and j < len(b):
            if a[i] < b[j]:
                i += 1
            elif a[i] > b[j]:
                j += 1
            else:
                z = a[i]
                d = indptr[z + 1] - indptr[z]
                if log_weight:
                    s += 1.0 / np.log(d)
                else:
                    s += 1.0 / d
                i += 1
                j += 1
        out[e] = s
    return out
