"""The explicit bijection phi: O(j,k,b) -> D(j,k,b) and its inverse psi.

Run: python3 demos/03_bijection.py
"""
from partition_lab import bijection as B
from partition_lab.counting import d_index, o_index
from partition_lab.partition_core import format_partition, parse_partition

pi = parse_partition("4^5 6 12^7 18^8 24^9 36")
image = B.psi(pi, 2, 6)
print("psi:", format_partition(pi), "->", format_partition(image))
print("weights", pi.weight, image.weight, " indices", d_index(pi, 2, 6), o_index(image, 2, 6))
print("phi brings it back:", B.phi(image, 2, 6) == pi)

# All eight members of O(3,2,2) at n = 29 and their images.
print(B.table29(), end="")

# Exhaustive check on every partition of n <= 15.
report = B.verify_roundtrip(15, 3, 2)
print(report.summary())
