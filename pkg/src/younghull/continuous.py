"""Continuous partitions: 1-Lipschitz antiperiodic profiles and their areas.

A profile is stored on one period [u, u+1] with Lambda(u) = -u and
Lambda(u+1) = u+1, and extended to the line by Lambda(t+1) = 1 - Lambda(t).
All arithmetic is exact over ``Fraction``.
"""

import json
import math
import random
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction

from .moebius import rim_path
from .partitions import check_young


class ProfileError(ValueError):
    """A breakpoint list that does not describe a valid profile."""


def _q(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PLFunction:
    u: Fraction
    breakpoints: tuple

    def __call__(self, t):
        t = _q(t)
        shift = math.floor(t - self.u)
        v = self._base(t - shift)
        return v if shift % 2 == 0 else 1 - v

    @cached_property
    def _ts(self):
        return [p[0] for p in self.breakpoints]

    def _base(self, t):
        ts = self._ts
        i = bisect_left(ts, t)
        if i < len(ts) and ts[i] == t:
            return self.breakpoints[i][1]
        (t0, v0), (t1, v1) = self.breakpoints[i - 1], self.breakpoints[i]
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0)

    @cached_property
    def _ext_cache(self):
        return {}

    def extended(self, periods=3):
        """Breakpoints of the extension on [u, u + periods], as a tuple."""
        if periods not in self._ext_cache:
            self._ext_cache[periods] = self._extend(periods)
        return self._ext_cache[periods]

    def _extend(self, periods):
        out = []
        for p in range(periods):
            for t, v in self.breakpoints:
                pt = (t + p, v if p % 2 == 0 else 1 - v)
                if out and out[-1][0] == pt[0]:
                    continue
                out.append(pt)
        return tuple(out)

    def to_json(self):
        return {"u": str(self.u), "breakpoints": [[str(t), str(v)] for t, v in self.breakpoints]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return make_profile(Fraction(data["u"]),
                            [(Fraction(t), Fraction(v)) for t, v in data["breakpoints"]])


def make_profile(u, breakpoints, complete=False):
    """Validate breakpoints on [u, u+1] and return the profile.

    With ``complete=True`` the breakpoints may stop at some v < u+1 with
    Lambda(v) = v; the identity piece up to u+1 is appended.
    """
    u = _q(u)
    pts = [(_q(t), _q(v)) for t, v in breakpoints]
    if not -1 <= u <= 0:
        raise ProfileError(f"u={u} outside [-1, 0]")
    if complete and pts and pts[-1][0] < u + 1:
        if pts[-1][1] != pts[-1][0]:
            raise ProfileError(f"cannot complete: value at v={pts[-1][0]} is not v")
        pts.append((u + 1, u + 1))
    dedup = []
    for p in pts:
        if dedup and dedup[-1][0] == p[0]:
            if dedup[-1][1] != p[1]:
                raise ProfileError(f"jump at t={p[0]}")
            continue
        dedup.append(p)
    pts = dedup
    if len(pts) < 2 or pts[0][0] != u or pts[-1][0] != u + 1:
        raise ProfileError(f"breakpoints must span [u, u+1] = [{u}, {u + 1}]")
    if pts[0][1] != -u:
        raise ProfileError(f"boundary: Lambda(u) must be {-u}, got {pts[0][1]}")
    if pts[-1][1] != u + 1:
        raise ProfileError(f"boundary: Lambda(u+1) must be {u + 1}, got {pts[-1][1]}")
    for i, ((t0, v0), (t1, v1)) in enumerate(zip(pts, pts[1:])):
        if t1 <= t0:
            raise ProfileError(f"segment {i}: abscissae not increasing ({t0}, {t1})")
        if abs(v1 - v0) > t1 - t0:
            raise ProfileError(f"segment {i} [{t0}, {t1}]: slope {(v1 - v0) / (t1 - t0)} violates 1-Lipschitz")
    prof = PLFunction(u, tuple(pts))
    if any(not 0 <= v <= 1 for _, v in pts):
        raise AssertionError("range bound violated by a valid profile")
    return prof


def rectangular_R(r):
    """R_r: t + 2 - 2r on [r-1, 2r-1] and -t + 2r on [2r-1, r]."""
    r = _q(r)
    if not 0 <= r <= 1:
        raise ValueError(f"r={r} outside [0, 1]")
    return make_profile(r - 1, [(r - 1, 1 - r), (2 * r - 1, 1), (r, r)])


def _integral(ext, x0, x1):
    # exact integral of the piecewise-linear interpolant of ``ext`` over [x0, x1]
    ts = [p[0] for p in ext]
    total = Fraction(0)

    def value(t):
        i = bisect_left(ts, t)
        if ts[i] == t:
            return ext[i][1]
        (a, va), (b, vb) = ext[i - 1], ext[i]
        return va + (vb - va) * (t - a) / (b - a)

    cuts = [x0] + [t for t in ts if x0 < t < x1] + [x1]
    vals = [value(t) for t in cuts]
    for a, b, va, vb in zip(cuts, cuts[1:], vals, vals[1:]):
        total += (b - a) * (va + vb) / 2
    return total


def solve_foot(prof, t):
    """Leftmost a in [u, u+2) with a + Lambda(a) = t (t reduced mod 2)."""
    t = _q(t)
    t = t - 2 * math.floor(t / 2)
    ext = prof.extended(3)
    g = [a + v for a, v in ext]
    i = bisect_left(g, t)
    if g[i] == t:
        return ext[i][0]
    (a0, v0), (a1, v1) = ext[i - 1], ext[i]
    return a0 + (t - g[i - 1]) * (a1 - a0) / (g[i] - g[i - 1])


def area_at_foot(prof, a):
    """Integral of Lambda over [a, a+1] minus (Lambda(a)^2 + Lambda(a+1)^2) / 2."""
    a = _q(a)
    shift = math.floor(a - prof.u)
    base = a - shift
    ext = prof.extended(3)
    integral = _integral(ext, base, base + 1)
    if shift % 2:
        integral = 1 - integral
    la, lb = prof(a), prof(a + 1)
    return integral - (la * la + lb * lb) / 2


def area_F(prof, t):
    """F_Lambda(t), exact; 2-periodic in t."""
    return area_at_foot(prof, solve_foot(prof, t))


def area_minimum(prof):
    """Exact minimum of F_Lambda over a period.

    As a function of the foot a, F has derivative
    (1 - 2 Lambda(a)) (1 + Lambda'(a)), so its minimum is attained at a
    breakpoint of Lambda or Lambda(. + 1), or where Lambda(a) = 1/2.
    """
    ext = prof.extended(4)
    u = prof.u
    cands = {a for a, _ in ext if u <= a <= u + 2}
    cands |= {a - 1 for a, _ in ext if u <= a - 1 <= u + 2}
    half = Fraction(1, 2)
    for (a0, v0), (a1, v1) in zip(ext, ext[1:]):
        if a0 >= u + 2:
            break
        if v0 != v1 and min(v0, v1) <= half <= max(v0, v1):
            cands.add(a0 + (half - v0) * (a1 - a0) / (v1 - v0))
    return min(area_at_foot(prof, a) for a in cands)


def min_value(prof):
    return min(v for _, v in prof.extended(2))


def zero_of(prof):
    """Some t in [u, u+2) with Lambda(t) = 0, or None."""
    for t, v in prof.extended(2):
        if v == 0:
            return t
    return None


def equals(p, q):
    """Pointwise equality of two profiles on the real line."""
    lo = min(p.u, q.u)
    pts = {t for t, _ in p.extended(3)} | {t for t, _ in q.extended(3)}
    pts = {t for t in pts if lo <= t <= lo + 2} | {lo, lo + 2}
    return all(p(t) == q(t) for t in pts)


def as_rectangular(prof):
    """The r with prof == R_r, or None if prof has no zero."""
    z = zero_of(prof)
    if z is None:
        return None
    r = (z / 2) % 1
    return r if equals(prof, rectangular_R(r)) else None


def distance_D(r, s):
    """2 |s - r| (1 - |s - r|)."""
    r, s = _q(r), _q(s)
    if not (0 <= r <= 1 and 0 <= s <= 1):
        raise ValueError(f"r, s must lie in [0, 1], got {r}, {s}")
    x = abs(s - r)
    return 2 * x * (1 - x)


def distance_D_grid(r, s, samples=10_000):
    """sup |F_{R_r} - F_{R_s}| over a uniform grid of one period of length 2."""
    pr, ps = rectangular_R(r), rectangular_R(s)
    best = Fraction(0)
    for i in range(samples):
        t = Fraction(2 * i, samples)
        best = max(best, abs(area_F(pr, t) - area_F(ps, t)))
    return best


@dataclass(frozen=True)
class DiscreteProfile:
    """Heights of the rim sites: Lambda_N(j + k - N) = N - (k - j)."""

    n: int
    start: int
    heights: tuple

    def __call__(self, t):
        shift, i = divmod(t - self.start, self.n)
        h = self.heights[i]
        return h if shift % 2 == 0 else self.n - h

    def table(self, lo, hi):
        return [self(t) for t in range(lo, hi + 1)]

    def scaled(self):
        n = self.n
        pts = [(Fraction(self.start + i, n), Fraction(h, n)) for i, h in enumerate(self.heights)]
        end = self.start + n
        pts.append((Fraction(end, n), Fraction(self(end), n)))
        return make_profile(Fraction(self.start, n), pts)


def discretize_profile(lam, n):
    """The integer rim profile of ``lam`` and its rescaling into Y_infinity."""
    check_young(lam, n)
    path = rim_path(lam, n)
    start = path[0][0] + path[0][1] - n
    heights = tuple(n - (k - j) for j, k in path)
    disc = DiscreteProfile(n, start, heights)
    return disc, disc.scaled()


def random_profile(rng, max_pieces=8, denominator=60):
    """A random valid profile with rational breakpoints.

    Values are drawn one breakpoint at a time from the interval that keeps
    both the Lipschitz bound and the right boundary value reachable.
    """
    u = -Fraction(rng.randint(0, denominator), denominator)
    pieces = rng.randint(1, max_pieces)
    inner = sorted({Fraction(rng.randint(1, denominator - 1), denominator) for _ in range(pieces - 1)})
    ts = [u] + [u + x for x in inner] + [u + 1]
    target = u + 1
    vals = [-u]
    for t_prev, t, t_next in zip(ts, ts[1:], ts[2:] + [None]):
        if t_next is None:
            vals.append(target)
            break
        step = t - t_prev
        remain = u + 1 - t
        lo = max(vals[-1] - step, target - remain)
        hi = min(vals[-1] + step, target + remain)
        k = rng.randint(0, denominator)
        vals.append(lo + (hi - lo) * Fraction(k, denominator))
    return make_profile(u, list(zip(ts, vals)))


def random_foot(rng, prof, denominator=97):
    return prof.u + Fraction(rng.randint(0, denominator), denominator)


def rectangle_identity(prof, a):
    """(F(a + L(a)) + F(b + L(b)), 2 L(a) L(b)) with b = a + 1."""
    a = _q(a)
    b = a + 1
    la, lb = prof(a), prof(b)
    lhs = area_F(prof, a + la) + area_F(prof, b + lb)
    return lhs, 2 * la * lb


def check_identities(samples=1000, seed=0, feet=10):
    """Sample random profiles and return the number of rectangle-identity failures."""
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        prof = random_profile(rng)
        for _ in range(feet):
            lhs, rhs = rectangle_identity(prof, random_foot(rng, prof))
            failures += lhs != rhs
    return failures
