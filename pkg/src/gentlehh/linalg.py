"""Exact rank computations over the rationals and prime fields.

Matrices are lists of integer rows.  Entries never leave exact arithmetic:
Fractions over characteristic 0, residues mod p otherwise.  Pivoting is
deterministic (first nonzero entry in column order), so repeated runs
eliminate identically.
"""

from fractions import Fraction


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_characteristic(char: int):
    if char != 0 and not is_prime(char):
        raise ValueError("characteristic must be 0 or a prime, got %r" % char)


def rank(rows, char: int) -> int:
    """Rank of an integer matrix over Q (char 0) or GF(char)."""
    check_characteristic(char)
    if not rows or not rows[0]:
        return 0
    if char == 0:
        m = [[Fraction(x) for x in row] for row in rows]
    else:
        m = [[x % char for x in row] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for col in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        inv = (1 / lead) if char == 0 else pow(lead, char - 2, char)
        for i in range(r + 1, n_rows):
            factor = m[i][col]
            if factor == 0:
                continue
            scale = factor * inv if char == 0 else (factor * inv) % char
            if char == 0:
                for j in range(col, n_cols):
                    m[i][j] -= scale * m[r][j]
            else:
                for j in range(col, n_cols):
                    m[i][j] = (m[i][j] - scale * m[r][j]) % char
        r += 1
        if r == n_rows:
            break
    return r


def nullity(rows, n_cols: int, char: int) -> int:
    """Kernel dimension of the matrix as a map from an n_cols-dim space."""
    return n_cols - rank(rows, char)
