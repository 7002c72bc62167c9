# distutils: language = c++
"""Compiled engine for maximal consistent vertex sets.

Same cell-by-cell procedure as ``_pyengine`` on fixed-width multiword
bitsets held in C++ containers.
"""
from libc.stdint cimport uint64_t
from libcpp.vector cimport vector

ctypedef vector[uint64_t] Bits

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef uint64_t WORD_MASK = 0xFFFFFFFFFFFFFFFF


cdef Bits to_bits(object mask, Py_ssize_t nwords):
    cdef Bits out = Bits(nwords, 0)
    cdef Py_ssize_t i
    for i in range(nwords):
        out[i] = <uint64_t>((mask >> (64 * i)) & WORD_MASK)
    return out


cdef object from_bits(const Bits& bits):
    cdef object mask = 0
    cdef Py_ssize_t i
    for i in range(<Py_ssize_t>bits.size() - 1, -1, -1):
        mask = (mask << 64) | bits[i]
    return mask


cdef inline bint subset(const Bits& a, const Bits& b) nogil:
    cdef size_t i
    for i in range(a.size()):
        if a[i] & ~b[i]:
            return False
    return True


def maximal_consistent_masks(universe, bad):
    """Inclusion-maximal subsets of ``universe`` containing no mask of ``bad``."""
    masks = sorted(set(bad), key=lambda b: (b.bit_count(), b))
    if any(b & ~universe for b in masks):
        raise ValueError("bad cell outside the universe")
    if masks and masks[0] == 0:
        return []
    cdef Py_ssize_t nwords = max(1, (universe.bit_length() + 63) // 64)
    cdef vector[Bits] bad_bits
    for b in masks:
        bad_bits.push_back(to_bits(b, nwords))
    cdef vector[Bits] family, kept, split, fresh
    cdef Bits child
    cdef size_t e, i, j, k
    cdef int bit
    cdef uint64_t word
    cdef bint covered
    family.push_back(to_bits(universe, nwords))
    with nogil:
        for e in range(bad_bits.size()):
            kept.clear()
            split.clear()
            for i in range(family.size()):
                if subset(bad_bits[e], family[i]):
                    split.push_back(family[i])
                else:
                    kept.push_back(family[i])
            if split.empty():
                continue
            # see _pyengine: only kept sets can dominate a child
            fresh.clear()
            for i in range(split.size()):
                for k in range(<size_t>nwords):
                    word = bad_bits[e][k]
                    while word:
                        bit = __builtin_ctzll(word)
                        child = split[i]
                        child[k] &= ~((<uint64_t>1) << bit)
                        word &= word - 1
                        covered = False
                        for j in range(kept.size()):
                            if subset(child, kept[j]):
                                covered = True
                                break
                        if not covered:
                            fresh.push_back(child)
            family.swap(kept)
            for i in range(fresh.size()):
                family.push_back(fresh[i])
    return [from_bits(f) for f in family]
