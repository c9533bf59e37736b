"""Continuous partitions: antiperiodic 1-Lipschitz profiles and their area functions."""

import random
from fractions import Fraction as Q

from younghull.continuous import (
    area_F,
    area_minimum,
    as_rectangular,
    discretize_profile,
    distance_D,
    random_profile,
    rectangle_identity,
    rectangular_R,
)

r = Q(1, 3)
prof = rectangular_R(r)
print(f"R_{r}: breakpoints {[(str(t), str(v)) for t, v in prof.breakpoints]}")
for t in (Q(2, 3), Q(1), Q(5, 3), Q(2)):
    print(f"  F({t}) = {area_F(prof, t)}")

rng = random.Random(2024)
lam = random_profile(rng)
print(f"\nrandom profile with {len(lam.breakpoints)} breakpoints, min F = {area_minimum(lam)}")
for a in (lam.u, lam.u + Q(1, 4), lam.u + Q(1, 2)):
    lhs, rhs = rectangle_identity(lam, a)
    print(f"  a = {a}: F(a+L(a)) + F(b+L(b)) = {lhs}, 2 L(a) L(b) = {rhs}")
print("is it rectangular?", as_rectangular(lam))

print("\nD between rectangles:", distance_D(0, Q(1, 2)), distance_D(Q(1, 5), Q(3, 5)))

disc, scaled = discretize_profile((5, 3, 3, 2), 9)
print("\nheights of (5,3,3,2) at N=9, t = -4..4:", disc.table(-4, 4))
print("as a continuous profile on", f"[{scaled.u}, {scaled.u + 1}]:",
      " ".join(f"{v}" for _, v in scaled.breakpoints))
