"""The discrete Moebius strip and outer rims of partitions.

Sites are pairs ``(j, k)`` of points of the N-cycle modulo swapping; the
canonical form has ``0 <= j <= k <= N-1``.  Inside the triangle
``0 <= j <= k <= N`` the extra identifications are ``(0, k) = (k, N)``.

A rim is read as a lattice word: ``R`` increments j, ``U`` increments k.
Lifting to the universal cover uses the glide ``g(j, k) = (k, j + N)``.
"""

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations

from ._exact import det_bareiss
from .partitions import check_young, partition


def canonical_site(j, k, n):
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    j, k = j % n, k % n
    return (j, k) if j <= k else (k, j)


def all_sites(n):
    """The N(N+1)/2 canonical sites in lexicographic order."""
    return [(j, k) for j in range(n) for k in range(j, n)]


def site_distance(j, k, n):
    # cyclic metric; duplicated from hull to keep this module standalone
    a = abs(k - j) % n
    return a * (n - a)


@dataclass(frozen=True)
class Rim:
    n: int
    sites: tuple

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(sorted(self.sites)))

    def __len__(self):
        return len(self.sites)

    def __contains__(self, site):
        return site in self.sites

    def to_json(self):
        return [list(s) for s in self.sites]


def rim_word(lam, n):
    """Step word of the rim of ``lam`` starting at site (0, lam_1).

    The diagram is padded to N - lam_1 rows; rows are read bottom to top,
    each contributing ``R * (lam_i - lam_{i+1})`` followed by ``U``.
    """
    check_young(lam, n)
    first = lam[0] if lam else 0
    rows = list(lam) + [0] * (n - first - len(lam))
    word = []
    below = 0
    for p in reversed(rows):
        word.extend("R" * (p - below))
        word.append("U")
        below = p
    return "".join(word)


def _walk(start, word):
    j, k = start
    pts = [(j, k)]
    for step in word:
        if step == "R":
            j += 1
        else:
            k += 1
        pts.append((j, k))
    return pts


def rim_path(lam, n):
    """The N rim sites in walk order, as triangle coordinates (uncanonicalised)."""
    first = lam[0] if lam else 0
    return _walk((0, first), rim_word(lam, n))[:-1]


def rim_of_partition(lam, n):
    sites = {canonical_site(j, k, n) for j, k in rim_path(lam, n)}
    assert len(sites) == n, (lam, n, sites)
    return Rim(n, tuple(sites))


def _partition_of_word(word):
    # row lengths = number of R steps before each U
    rows = []
    r = 0
    for step in word:
        if step == "R":
            r += 1
        else:
            rows.append(r)
    return partition(sorted(rows, reverse=True))


def _chains(n, sites, pos, end, steps, seen):
    # depth-first search for monotone chains through rim sites
    if steps == 0:
        if pos == end:
            yield ""
        return
    j, k = pos
    for step, nxt in (("R", (j + 1, k)), ("U", (j, k + 1))):
        if nxt[0] > end[0] or nxt[1] > end[1]:
            continue
        c = canonical_site(*nxt, n)
        if c in sites and (c not in seen or (steps == 1 and nxt == end)):
            seen.add(c)
            for rest in _chains(n, sites, nxt, end, steps - 1, seen):
                yield step + rest
            seen.discard(c)


def partition_of_rim(rim, n=None):
    """Recover the partition whose outer rim is ``rim``.

    ``rim`` may be a :class:`Rim` or any iterable of sites (then ``n`` is
    required).  Raises ValueError for site sets that are not rims.
    """
    if isinstance(rim, Rim):
        n = rim.n
        sites = set(rim.sites)
    else:
        if n is None:
            raise ValueError("N is required for a bare site set")
        sites = {canonical_site(j, k, n) for j, k in rim}
    if len(sites) != n:
        raise ValueError(f"a rim has exactly N={n} sites, got {len(sites)}")
    for k in range(1, n + 1):
        if canonical_site(0, k, n) not in sites or canonical_site(1, k, n) not in sites:
            continue
        seen = {canonical_site(1, k, n)}
        for chain in _chains(n, sites, (1, k), (k, n), n - 1, seen):
            lam = _partition_of_word("R" + chain)
            if rim_of_partition(lam, n) == Rim(n, tuple(sites)):
                return lam
    raise ValueError(f"sites {sorted(sites)} do not form a nontrivial N-loop")


def enumerate_rims(n):
    """All homotopically nontrivial N-site loops, by direct chain search.

    For each 1 <= k <= N every monotone chain from (1, k) to (k, N) is a
    loop through (0, k) and (1, k); there are C(N-1, k-1) of them.
    """
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    rims = set()
    for k in range(1, n + 1):
        for rpos in combinations(range(n - 1), k - 1):
            rset = set(rpos)
            word = "".join("R" if i in rset else "U" for i in range(n - 1))
            pts = _walk((1, k), word)
            sites = {canonical_site(a, b, n) for a, b in pts}
            if len(sites) == n:
                rims.add(Rim(n, tuple(sites)))
    return sorted(rims, key=lambda r: r.sites)


def site_vector(site, n):
    j, k = site
    e = [0] * n
    e[j] += 1
    e[k] += 1
    return e


def rim_matrix(lam, n):
    """Rows e_j + e_k for the rim sites, in canonical site order."""
    return [site_vector(s, n) for s in rim_of_partition(lam, n).sites]


def rim_matrix_det(lam, n):
    return det_bareiss(rim_matrix(lam, n))


def _half(x):
    if isinstance(x, int):
        return x // 2 if x % 2 == 0 else Fraction(x, 2)
    x = Fraction(x) / 2
    return int(x) if x.denominator == 1 else x


def extend_function(f, n):
    """Extension to sites: (f(j) + f(k) - d(j, k)) / 2, keyed by canonical site."""
    f = list(f)
    if len(f) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(f)}")
    return {(j, k): _half(f[j] + f[k] - site_distance(j, k, n)) for j, k in all_sites(n)}


def shift_site(site, n, by=1):
    j, k = site
    return canonical_site(j + by, k + by, n)


def _glide(p, n, times):
    j, k = p
    for _ in range(times % 2):
        j, k = k, j + n
    shift = (times - times % 2) // 2 * n
    return (j + shift, k + shift)


@lru_cache(maxsize=4096)
def _row_extent(lam, n, periods=3):
    """Rightmost lifted rim point in each row k, over a few glide periods."""
    base = rim_path(lam, n)
    jmax = {}
    for t in range(-2 * periods, 2 * periods + 1):
        for a, b in (_glide(p, n, t) for p in base):
            if a > jmax.get(b, a - 1):
                jmax[b] = a
    return jmax


def box_count_alpha(lam, site, n):
    """Number of boxes of the shape cut out by the rim with bottom box at ``site``.

    Computed on the universal cover: the rim lifts to a monotone staircase
    and the shape is the part of the cone {j' <= j, k' >= k} lying strictly
    on the diagonal side of it.  Exactly one of ``site`` and its glide image
    lies on that side.
    """
    check_young(lam, n)
    site = canonical_site(*site, n)
    if site in rim_of_partition(lam, n):
        return 0
    jmax = _row_extent(tuple(lam), n)
    for j, k in (site, _glide(site, n, 1)):
        if jmax[k] >= j:
            continue
        total = 0
        b = k
        while jmax[b] < j:
            total += j - jmax[b]
            b += 1
        return total
    raise AssertionError(f"site {site} lies on neither side of the rim of {lam}")
