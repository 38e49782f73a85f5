"""Independent brute-force oracles used to pin expected values in the tests.

These deliberately share no code with the package: ranks come from dense
determinant expansion over all square submatrices (small inputs) or from
dense Gaussian elimination modulo several primes (larger inputs), and both
paths avoid the sparse elimination engine under test.
"""

from fractions import Fraction
from itertools import combinations


def det_dense(rows):
    """Determinant by expansion along the first row (exact, tiny inputs)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        total += (-1) ** j * Fraction(rows[0][j]) * det_dense(minor)
    return total


def rank_by_minors(rows):
    """Rank = size of the largest nonvanishing minor.  O(huge); inputs <= 5x5."""
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    for size in range(min(nr, nc), 0, -1):
        for ri in combinations(range(nr), size):
            for ci in combinations(range(nc), size):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if det_dense(sub):
                    return size
    return 0


def rank_mod_p(rows, p):
    """Dense row reduction of an integer matrix modulo a prime p."""
    a = [[x % p for x in row] for row in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == nr:
            break
    return r


def rank_int_oracle(rows):
    """Rank of an integer matrix: max of ranks over several primes.

    rank_p <= rank_Q always, with equality for all p not dividing some
    maximal minor, so the max over a few large primes is the rational rank
    for the small matrices used in tests.
    """
    if not rows or not rows[0]:
        return 0
    return max(rank_mod_p(rows, p) for p in (10007, 10009, 10037))


def convolve(a, b):
    """Degreewise convolution of two Betti vectors (Kunneth oracle)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
