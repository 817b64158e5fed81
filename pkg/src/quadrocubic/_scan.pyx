# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of quadrocubic.scan.scan_chunk.

Same constraint chain, same survivor order; all arithmetic fits in 64-bit
integers for the n-ranges classify routes here (n_hi <= 20000). Keep in
sync with scan.py.
"""


cdef inline long long _pow_capped(long long a, long long e, long long cap):
    cdef long long r = 1
    cdef long long i
    for i in range(e):
        r *= a
        if r > cap:
            return cap + 1
    return r


cdef inline long long _mod(long long x, long long m):
    cdef long long r = x % m
    if r < 0:
        r += m
    return r


def scan_chunk(long n_lo, long n_hi, a_max_override=None, bint use_hc_axiom=True):
    """Survivors of the full constraint chain for n in [n_lo, n_hi]."""
    if n_hi > 20000:
        raise OverflowError("compiled kernel is limited to n_hi <= 20000")
    cdef long long a_cap = -1
    if a_max_override is not None:
        a_cap = a_max_override
    out = []
    cdef long long n, m1, m2, a, e1, e2, n1sq, num_c, num_d, c, d, cdm1
    cdef long long numer, divisor, eh_pow
    cdef bint gate
    for n in range(max(4, n_lo), n_hi + 1):
        n1sq = (n + 1) * (n + 1)
        for m1 in range(2, n - 1):
            e1 = n - m1 - 1
            gate = 4 * m1 >= 3 * n - 2
            for m2 in range(1, m1):
                if gate and m2 > n - m1 - 2:
                    continue
                e2 = n - m2 - 1
                a = 0
                while True:
                    a += 1
                    if a_cap >= 0 and a > a_cap:
                        break
                    if _pow_capped(a, e1, n1sq) * (n - m1) * e1 > n1sq:
                        break
                    if use_hc_axiom and a >= 2 and 3 * m2 <= 2 * n:
                        continue
                    num_c = a * (n + 1) - e2
                    num_d = a * (n + 1) - e1
                    if num_c % e1 or num_d % e2:
                        continue
                    c = num_c // e1
                    d = num_d // e2
                    if not (c > d >= 2):
                        continue
                    cdm1 = c * d - 1
                    if cdm1 % a:
                        continue
                    if a * (d - 1) * (n + 1) != e1 * cdm1:
                        continue
                    if a * (c - 1) * (n + 1) != e2 * cdm1:
                        continue
                    if _mod(m1 - m2 - a * (m1 + 2), e1):
                        continue
                    if _mod(m2 - m1 - a * (m2 + 2), e2):
                        continue
                    numer = a * n1sq - (n + 1) * (2 * n - 2 - m1 - m2)
                    if numer <= 0:
                        continue
                    if _pow_capped(a, e2 - 1, n1sq) * e2 * e1 >= n1sq:
                        continue
                    if _pow_capped(a, e2 - 1 - e1, n - m1) * e2 < n - m1:
                        continue
                    divisor = e1 * e2 * _pow_capped(a, e2, numer)
                    if divisor > numer or numer % divisor:
                        continue
                    eh_pow = _pow_capped(a, e2 + 1, cdm1)
                    if eh_pow > cdm1 or cdm1 % eh_pow:
                        continue
                    out.append((int(n), int(a), int(c), int(d), int(m1), int(m2)))
    return out


BACKEND = "cython"
