# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled sparse product on packed monomial keys (see ``_pure``)."""

from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

cdef extern from *:
    """
    typedef __int128 hk_int128;
    static inline int64_t hk_hi(__int128 x) { return (int64_t)(x >> 64); }
    static inline uint64_t hk_lo(__int128 x) { return (uint64_t)x; }
    static inline int hk_fits64(__int128 x) { return x == (__int128)(int64_t)x; }
    """
    ctypedef long long hk_int128
    int64_t hk_hi(hk_int128 x)
    uint64_t hk_lo(hk_int128 x)
    int hk_fits64(hk_int128 x)


def mul_packed(list ka, list ca, list kb, list cb):
    """Generic coefficients (any ring elements supporting + and *)."""
    cdef unordered_map[uint64_t, Py_ssize_t] index
    cdef vector[uint64_t] order
    cdef list acc = []
    cdef Py_ssize_t i, j, na = len(ka), nb = len(kb), pos
    cdef uint64_t k1, k
    index.reserve(na + nb)
    for i in range(na):
        k1 = ka[i]
        c1 = ca[i]
        for j in range(nb):
            k = k1 + <uint64_t>kb[j]
            it = index.find(k)
            if it == index.end():
                index[k] = len(acc)
                order.push_back(k)
                acc.append(c1 * cb[j])
            else:
                pos = index[k]
                acc[pos] = acc[pos] + c1 * cb[j]
    keys = []
    coeffs = []
    for i in range(<Py_ssize_t>order.size()):
        if acc[i]:
            keys.append(order[i])
            coeffs.append(acc[i])
    return keys, coeffs


cdef object _to_py(hk_int128 x):
    if hk_fits64(x):
        return <int64_t>x
    return (<object>hk_hi(x) << 64) | <object>hk_lo(x)


def mul_packed_int(list ka, list ca, list kb, list cb):
    """Integer coefficients; 128-bit accumulation when overflow is impossible."""
    cdef Py_ssize_t na = len(ka), nb = len(kb)
    if na == 0 or nb == 0:
        return [], []
    ma = max(abs(c) for c in ca)
    mb = max(abs(c) for c in cb)
    if ma.bit_length() > 62 or mb.bit_length() > 62 or (ma * mb * min(na, nb)).bit_length() > 125:
        return mul_packed(ka, ca, kb, cb)
    cdef vector[uint64_t] a_k, b_k
    cdef vector[int64_t] a_c, b_c
    cdef Py_ssize_t i, j, pos
    for i in range(na):
        a_k.push_back(ka[i])
        a_c.push_back(ca[i])
    for j in range(nb):
        b_k.push_back(kb[j])
        b_c.push_back(cb[j])
    cdef unordered_map[uint64_t, Py_ssize_t] index
    cdef vector[uint64_t] order
    cdef vector[hk_int128] acc
    cdef uint64_t k
    index.reserve(na + nb)
    for i in range(na):
        for j in range(nb):
            k = a_k[i] + b_k[j]
            it = index.find(k)
            if it == index.end():
                index[k] = <Py_ssize_t>acc.size()
                order.push_back(k)
                acc.push_back(<hk_int128>a_c[i] * <hk_int128>b_c[j])
            else:
                pos = index[k]
                acc[pos] += <hk_int128>a_c[i] * <hk_int128>b_c[j]
    keys = []
    coeffs = []
    for i in range(<Py_ssize_t>order.size()):
        if acc[i] != 0:
            keys.append(order[i])
            coeffs.append(_to_py(acc[i]))
    return keys, coeffs
