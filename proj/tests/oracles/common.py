"""Exact linear algebra over Fraction, independent of the C++ implementation."""

from fractions import Fraction as Fr


def zeros(n):
    return [Fr(0)] * n


def vec_add(x, y):
    return [a + b for a, b in zip(x, y)]

def vec_sub(x, y):
    return [a - b for a, b in zip(x, y)]

def vec_scale(c, x):
    return [c * a for a in x]

def vec_is_zero(x):
    return all(a == 0 for a in x)


def mat_vec(m, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def mat_mul(x, y):
    n, k, m = len(x), len(y), len(y[0])
    return [[sum(x[i][t] * y[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def rref(m):
    """Row-reduce in place (on a copy); returns (reduced matrix, pivot columns)."""
    m = [row[:] for row in m]
    rows, cols = len(m), len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        m[r] = vec_scale(Fr(1) / m[r][c], m[r])
        for i in range(rows):
            if i != r and m[i][c] != 0:
                m[i] = vec_sub(m[i], vec_scale(m[i][c], m[r]))
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m):
    return len(rref(m)[1])


def nullspace(m):
    """Basis of {x : m x = 0}, one vector per free column."""
    red, pivots = rref(m)
    cols = len(m[0]) if m else 0
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = zeros(cols)
        v[f] = Fr(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def eigenspace(mat, lam):
    """Nullspace of mat - lam*I."""
    n = len(mat)
    shifted = [[mat[i][j] - (lam if i == j else Fr(0)) for j in range(n)] for i in range(n)]
    return nullspace(shifted)


def in_span(basis, v):
    if not basis:
        return vec_is_zero(v)
    m = [row[:] for row in basis]
    return rank(m) == rank(m + [v])
