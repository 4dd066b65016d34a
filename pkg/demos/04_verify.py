"""Named grid checks and their JSON reports.

Run: python3 demos/04_verify.py
"""
from partition_lab import verify as V

for name in V.CHECKS:
    grid = V.DEFAULT_GRIDS[name]
    small = V.Grid(min(grid.nmax, 15), grid.jmax, grid.kset, grid.bset)
    print(V.run_check(name, small).summary())

# The stated form of Andrews' second identity fails; the report shows where.
report = V.run_check("andrews_second", V.Grid(8, 1, (3,), (1,)))
for f in report.failures[:4]:
    print(" ", f.to_dict())

# Without timing the JSON is byte-stable.
print(V.run_check("beck", V.Grid(10, 2, (2,), (1,))).to_json(timing=False))
