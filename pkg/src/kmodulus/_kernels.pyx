# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the per-sample hot loops.

Must stay byte-for-byte compatible with :mod:`kmodulus._pykernels`;
the test suite diffs the two backends on random inputs.
"""


def quantize_buf(const unsigned char[::1] src, int k):
    """Map every sample to the nearest multiple of k (ties up), saturated at 255."""
    cdef Py_ssize_t n = src.shape[0]
    cdef bytearray out_ba = bytearray(n)
    cdef unsigned char[::1] out = out_ba
    cdef Py_ssize_t i
    cdef int v
    for i in range(n):
        v = k * ((2 * src[i] + k) // (2 * k))
        if v > 255:
            v = 255
        out[i] = <unsigned char> v
    return bytes(out_ba)


def quotient_buf(const unsigned char[::1] src, int k):
    """Map every sample p to the round-half-up quotient floor((2p + k) / 2k)."""
    cdef Py_ssize_t n = src.shape[0]
    cdef bytearray out_ba = bytearray(n)
    cdef unsigned char[::1] out = out_ba
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = <unsigned char> ((2 * src[i] + k) // (2 * k))
    return bytes(out_ba)


def reconstruct_buf(const unsigned char[::1] quotients, int k):
    """Map every quotient q to min(255, q * k)."""
    cdef Py_ssize_t n = quotients.shape[0]
    cdef bytearray out_ba = bytearray(n)
    cdef unsigned char[::1] out = out_ba
    cdef Py_ssize_t i
    cdef int v
    for i in range(n):
        v = quotients[i] * k
        if v > 255:
            v = 255
        out[i] = <unsigned char> v
    return bytes(out_ba)


def pack_bits(const unsigned char[::1] values, int bits):
    """Concatenate the low ``bits`` of each value, MSB-first, zero-padding the tail."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t nbytes = (n * bits + 7) // 8
    cdef bytearray out_ba = bytearray(nbytes)
    cdef unsigned char[::1] out
    cdef unsigned int acc = 0
    cdef int nbits = 0
    cdef Py_ssize_t i, pos = 0
    if nbytes == 0:
        return bytes(out_ba)
    out = out_ba
    for i in range(n):
        acc = (acc << bits) | values[i]
        nbits += bits
        while nbits >= 8:
            nbits -= 8
            out[pos] = <unsigned char> ((acc >> nbits) & 0xFF)
            pos += 1
        acc &= (1u << nbits) - 1
    if nbits:
        out[pos] = <unsigned char> ((acc << (8 - nbits)) & 0xFF)
    return bytes(out_ba)


def unpack_bits(const unsigned char[::1] payload, int bits, Py_ssize_t count):
    """Read ``count`` MSB-first ``bits``-wide codes back out of ``payload``."""
    if payload.shape[0] * 8 < count * bits:
        raise ValueError("bitstream shorter than the requested code count")
    cdef bytearray out_ba = bytearray(count)
    cdef unsigned char[::1] out
    cdef unsigned int acc = 0
    cdef unsigned int mask = (1u << bits) - 1
    cdef int nbits = 0
    cdef Py_ssize_t i, pos = 0
    if count == 0:
        return bytes(out_ba)
    out = out_ba
    for i in range(count):
        while nbits < bits:
            acc = (acc << 8) | payload[pos]
            pos += 1
            nbits += 8
        nbits -= bits
        out[i] = <unsigned char> ((acc >> nbits) & mask)
        acc &= (1u << nbits) - 1
    return bytes(out_ba)


def sum_sq_diff(const unsigned char[::1] a, const unsigned char[::1] b):
    """Sum of squared sample differences between two equal-length buffers."""
    if a.shape[0] != b.shape[0]:
        raise ValueError("buffers differ in length")
    cdef unsigned long long total = 0
    cdef Py_ssize_t i
    cdef int d
    for i in range(a.shape[0]):
        d = a[i] - b[i]
        total += <unsigned long long> (d * d)
    return total
