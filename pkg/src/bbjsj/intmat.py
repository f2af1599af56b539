"""Exact integer matrix reduction."""


def smith_invariants(matrix):
    """Nonzero diagonal entries of the Smith normal form of an integer matrix.

    The result ``[d1, d2, ...]`` satisfies ``d1 | d2 | ...``; its length is
    the rank. Pivots are chosen as the smallest nonzero entry remaining,
    which keeps intermediate values small on sparse boundary matrices.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        pivot = _smallest_entry(a, t, t, m, n)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            clean = True
            pivot_row = a[t]
            for i in range(t + 1, m):
                row = a[i]
                x = row[t]
                if x:
                    q = x // p
                    if q:
                        for k in range(t, n):
                            if pivot_row[k]:
                                row[k] -= q * pivot_row[k]
                    if row[t]:
                        clean = False
            for j in range(t + 1, n):
                x = pivot_row[j]
                if x:
                    q = x // p
                    if q:
                        for row in a[t:]:
                            if row[t]:
                                row[j] -= q * row[t]
                    if pivot_row[j]:
                        clean = False
            if not clean:
                # a remainder survived: bring the smallest entry of row/column t to the pivot
                best, where = abs(p), None
                for i in range(t + 1, m):
                    x = a[i][t]
                    if x and abs(x) < best:
                        best, where = abs(x), ("r", i)
                for j in range(t + 1, n):
                    x = pivot_row[j]
                    if x and abs(x) < best:
                        best, where = abs(x), ("c", j)
                if where is not None:
                    kind, k = where
                    if kind == "r":
                        a[t], a[k] = a[k], a[t]
                    else:
                        for row in a:
                            row[t], row[k] = row[k], row[t]
                continue
            bad = _non_multiple(a, t, m, n, p)
            if bad is None:
                break
            src = a[bad]
            for k in range(t, n):
                pivot_row[k] += src[k]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _smallest_entry(a, r0, c0, m, n):
    best, where = 0, None
    for i in range(r0, m):
        row = a[i]
        for j in range(c0, n):
            x = row[j]
            if x:
                ax = abs(x)
                if where is None or ax < best:
                    best, where = ax, (i, j)
                    if ax == 1:
                        return where
    return where


def _non_multiple(a, t, m, n, p):
    for i in range(t + 1, m):
        row = a[i]
        for j in range(t + 1, n):
            if row[j] % p:
                return i
    return None


def rank(matrix):
    return len(smith_invariants(matrix))


def matmul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
