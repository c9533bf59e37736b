"""Partitions with bounded hooks, and the rotation tau that acts on them."""

from younghull.partitions import (
    census_by_inner_corners,
    dual,
    enumerate_young,
    format_partition,
    inner_corners,
    tau_orbit,
)

N = 6

lams = enumerate_young(N)
print(f"Y_{N} has {len(lams)} partitions (all hooks shorter than {N}):")
print("  " + " ".join(format_partition(lam) for lam in lams))

# sorting by the number of removable boxes gives binomial counts
print("by inner corners:", census_by_inner_corners(N))

# tau has order N; its orbits split Y_N
seen, orbits = set(), []
for lam in lams:
    if lam not in seen:
        orbit = tau_orbit(lam, N)
        seen.update(orbit)
        orbits.append(orbit)
print(f"{len(orbits)} tau-orbits, sizes {sorted(len(o) for o in orbits)}")
for o in orbits:
    print("  " + " -> ".join(format_partition(lam) for lam in o))

lam = (3, 1, 1)
print(f"dual of {lam} is {dual(lam)}; corners of {lam}: {inner_corners(lam)}")
