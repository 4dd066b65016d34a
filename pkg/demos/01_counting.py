"""Counting partitions by how many distinct parts are divisible by k*b.

Run: python3 demos/01_counting.py
"""
from partition_lab import counting as C
from partition_lab.partition_core import enumerate_partitions, format_partition

# The seven partitions of 5, largest part first.
for pi in enumerate_partitions(5):
    print(f"{format_partition(pi):>12}   O-index {C.o_index(pi, 2, 1)}   D-index {C.d_index(pi, 2, 1)}")

# With k=2, b=1: no even part vs no repeated part. Both give 3.
print("O_{0,2,1}(5) =", C.count_O(0, 2, 1, 5), " D_{0,2,1}(5) =", C.count_D(0, 2, 1, 5))

# The two families agree for every j, not just j=0.
for n in (10, 20, 30):
    row_O = [C.count_O(j, 3, 2, n) for j in range(4)]
    row_D = [C.count_D(j, 3, 2, n) for j in range(4)]
    print(f"n={n:>2}  O: {row_O}  D: {row_D}")

# Counting total parts instead of partitions gives an excess.
print("excess at (0,2,1,5):", C.excess(0, 2, 1, 5), "which equals O_{1,2,1}(5) =", C.count_O(1, 2, 1, 5))
for j in range(3):
    e = C.excess(j, 3, 1, 20)
    rhs = (j + 1) * C.count_O(j + 1, 3, 1, 20) - j * C.count_O(j, 3, 1, 20)
    print(f"j={j}: excess {e} = (k-1) * {rhs}")
