"""Pure-Python scan kernel for the candidate enumeration.

This is the hot loop of the classification: every (n, m1, m2, a) in range
is pushed through the full constraint chain, and the handful of survivors
come back as plain 6-tuples (n, a, c, d, m1, m2). The compiled twin in
_scan.pyx implements exactly the same chain; `quadrocubic.classify`
selects whichever is importable, and the test suite asserts the two
agree. Keep the two files in sync.

The per-tuple chain (cheap kills first):
  1. cohomology gate: if 4*m1 >= 3n-2 then m2 <= n - m1 - 2,
  2. a bounded by a^(n-m1-1) * (n-m1) * (n-m1-1) <= (n+1)^2,
  3. multiplicity-one axiom (optional): reject a >= 2 with 3*m2 <= 2n,
  4. integrality of c = (a(n+1)-(n-m2-1))/(n-m1-1) and the symmetric d,
  5. c > d >= 2, a | cd-1, both canonical-class identities,
  6. dimension congruences,
  7. estimate: positivity, divisibility by e1*e2*a^e2, both inequalities,
  8. a^(n-m2) | cd-1.
"""

from __future__ import annotations

Survivor = tuple[int, int, int, int, int, int]


def _pow_capped(a: int, e: int, cap: int) -> int:
    """a**e, or cap+1 as soon as the partial product exceeds cap."""
    r = 1
    for _ in range(e):
        r *= a
        if r > cap:
            return cap + 1
    return r


def scan_chunk(
    n_lo: int,
    n_hi: int,
    a_max_override: int | None = None,
    use_hc_axiom: bool = True,
) -> list[Survivor]:
    """Survivors of the full constraint chain for n in [n_lo, n_hi]."""
    out: list[Survivor] = []
    for n in range(max(4, n_lo), n_hi + 1):
        n1sq = (n + 1) ** 2
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
                    if a_max_override is not None and a > a_max_override:
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
                    if (m1 - m2 - a * (m1 + 2)) % e1:
                        continue
                    if (m2 - m1 - a * (m2 + 2)) % e2:
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
                    out.append((n, a, c, d, m1, m2))
    return out


BACKEND = "python"
