"""Every partition in Y_N draws a loop of N sites on a discrete Moebius strip."""

from younghull.moebius import (
    all_sites,
    box_count_alpha,
    enumerate_rims,
    partition_of_rim,
    rim_matrix_det,
    rim_of_partition,
    rim_word,
)

N, lam = 9, (5, 3, 3, 2)

rim = rim_of_partition(lam, N)
print(f"rim of {lam} for N={N}: word {rim_word(lam, N)}")
print("  sites:", " ".join(f"({j},{k})" for j, k in rim.sites))
print("  read back:", partition_of_rim(rim))
print("  det of its incidence matrix:", rim_matrix_det(lam, N))

# draw the strip as a triangle; each site shows how many boxes sit under it
print("\nbox counts (0 marks the rim):")
counts = {s: box_count_alpha(lam, s, N) for s in all_sites(N)}
for j in range(N):
    print("   " * j + " ".join(f"{counts[(j, k)]:>2}" for k in range(j, N)))

rims = enumerate_rims(7)
print(f"\nloops found directly for N=7: {len(rims)} (= 2^6)")
