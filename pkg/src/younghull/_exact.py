"""Small exact linear algebra over the integers and rationals."""

from fractions import Fraction


def det_bareiss(matrix):
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[i][i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[r][c] = (a[r][c] * piv - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def solve_fraction(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly; return None if singular."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        row = [v / p for v in a[col]]
        a[col] = row
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], row)]
    return [a[r][n] for r in range(n)]


def inverse_fraction(matrix):
    """Exact inverse of a square rational matrix (raises on singular input)."""
    n = len(matrix)
    cols = []
    for c in range(n):
        e = [1 if r == c else 0 for r in range(n)]
        x = solve_fraction(matrix, e)
        if x is None:
            raise ZeroDivisionError("matrix is singular")
        cols.append(x)
    return [[cols[c][r] for c in range(n)] for r in range(n)]
