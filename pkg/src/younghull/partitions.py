"""Integer partitions and the restricted Young lattice Y_N.

A partition is a plain tuple of weakly decreasing positive integers; the
empty partition is ``()``.  Y_N is the set of partitions whose maximal hook
length is strictly less than N; it has 2**(N-1) elements.
"""

from itertools import combinations
from math import comb


def partition(parts):
    """Return the canonical tuple for ``parts`` (zeros stripped).

    Raises ValueError if the parts are negative or not weakly decreasing.
    """
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return tuple(p for p in parts if p > 0)


def parse_partition(text):
    """Parse the comma separated text form; ``"0"`` (or ``""``) is ``()``."""
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    try:
        parts = [int(tok) for tok in text.strip("()").split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"malformed partition text: {text!r}") from None
    return partition(parts)


def format_partition(lam):
    return ",".join(map(str, lam)) if lam else "0"


def size(lam):
    return sum(lam)


def max_hook(lam):
    """Hook length of the top-left box; 0 for the empty partition."""
    if not lam:
        return 0
    return lam[0] + len(lam) - 1


def in_young(lam, n):
    return max_hook(lam) < n


def check_young(lam, n):
    if not in_young(lam, n):
        raise ValueError(f"partition {lam} has max hook {max_hook(lam)} >= N={n}")


def _bounded(max_part, max_len):
    # partitions with parts <= max_part and at most max_len parts
    yield ()
    if max_len == 0:
        return
    for first in range(1, max_part + 1):
        for rest in _bounded(first, max_len - 1):
            yield (first,) + rest


def enumerate_young(n):
    """All partitions in Y_N, sorted lexicographically (empty first)."""
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    out = [()]
    for first in range(1, n):
        # first + (#parts) - 1 < n  ->  at most n - first - 1 further parts
        out.extend((first,) + rest for rest in _bounded(first, n - first - 1))
    out.sort()
    return out


def dual(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def inner_corners(lam):
    """Removable boxes as 1-based (row, column) pairs, top row first."""
    out = []
    for i, p in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if p > nxt:
            out.append((i + 1, p))
    return out


def remove_corners(lam, corners):
    """Delete a set of inner corners (given as (row, col) pairs) from ``lam``."""
    parts = list(lam)
    valid = set(inner_corners(lam))
    for row, col in corners:
        if (row, col) not in valid:
            raise ValueError(f"{(row, col)} is not an inner corner of {lam}")
        parts[row - 1] -= 1
    return partition(parts)


def add_box(lam, row):
    """Add a box at the end of the given 1-based row (row may be len+1)."""
    parts = list(lam) + [0]
    parts[row - 1] += 1
    return partition(parts)


def covers(lam, mu):
    """True iff ``mu`` is ``lam`` with exactly one inner corner removed."""
    if size(lam) != size(mu) + 1:
        return False
    return any(remove_corners(lam, [c]) == mu for c in inner_corners(lam))


def lower_covers(lam):
    """Partitions covered by ``lam``, in corner order."""
    return [remove_corners(lam, [c]) for c in inner_corners(lam)]


def tau(lam, n):
    """The cyclic action: (N-m-1, lam_1-1, ..., lam_m-1), zeros removed."""
    check_young(lam, n)
    m = len(lam)
    return partition((n - m - 1,) + tuple(p - 1 for p in lam))


def sigma(lam, n):
    """Inverse of :func:`tau`: (lam_2+1, ..., lam_{N-lam_1}+1) with zero padding."""
    check_young(lam, n)
    first = lam[0] if lam else 0
    padded = list(lam) + [0] * (n - first - len(lam))
    return partition(p + 1 for p in padded[1:])


def tau_orbit(lam, n):
    orbit = [lam]
    cur = tau(lam, n)
    while cur != lam:
        orbit.append(cur)
        cur = tau(cur, n)
    return orbit


def staircase(n):
    """(ceil(N/2)-1, ..., 1) for odd N; (N/2, ..., 1) for even N."""
    top = (n - 1) // 2 if n % 2 else n // 2
    return tuple(range(top, 0, -1))


def count_by_inner_corners(n, s):
    """Number of partitions in Y_N with exactly s inner corners."""
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    if s < 0:
        return 0
    return comb(n, 2 * s)


def census_by_inner_corners(n):
    """Enumeration-based counterpart of :func:`count_by_inner_corners`."""
    counts = {}
    for lam in enumerate_young(n):
        s = len(inner_corners(lam))
        counts[s] = counts.get(s, 0) + 1
    return counts


def durfee_side(lam):
    d = 0
    while d < len(lam) and lam[d] >= d + 1:
        d += 1
    return d


def corner_subsets(lam, v):
    """All v-element subsets of the inner corners of ``lam``."""
    return [list(c) for c in combinations(inner_corners(lam), v)]
