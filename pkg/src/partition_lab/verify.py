"""Named grid checks tying enumeration, series and bijection together.

Each check computes the two sides of an identity through different code
paths: one side from the enumeration layer in :mod:`partition_lab.counting`,
the other from series coefficients in :mod:`partition_lab.qseries` (or from
a second enumeration statistic where the identity is purely combinatorial).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Optional

from . import counting as C
from . import qseries as Q
from .bijection import verify_roundtrip
from .partition_core import enumerate_partitions
from .report import Failure, VerificationReport


@dataclass(frozen=True)
class Grid:
    nmax: int
    jmax: int = 4
    kset: tuple[int, ...] = (1, 2, 3, 4)
    bset: tuple[int, ...] = (1, 2, 3)
    nmin: int = 0

    def __post_init__(self) -> None:
        if self.nmax < 0 or self.jmax < 0 or self.nmin < 0:
            raise ValueError("grid bounds must be nonnegative")
        if not self.kset or not self.bset:
            raise ValueError("kset and bset must be nonempty")
        if min(self.kset) < 1 or min(self.bset) < 1:
            raise ValueError("k and b values must be >= 1")

    @property
    def ns(self) -> range:
        return range(self.nmin, self.nmax + 1)

    def bounds(self) -> dict:
        return {"nmin": self.nmin, "nmax": self.nmax, "jmax": self.jmax,
                "kset": list(self.kset), "bset": list(self.bset)}


DEFAULT_GRIDS: dict[str, Grid] = {
    "main": Grid(40, 4, (1, 2, 3, 4), (1, 2, 3)),
    "beck": Grid(30, 3, (2, 3), (1, 2)),
    "corollary": Grid(30, 3, (2, 3), (1, 2)),
    "refinement": Grid(30, 3, (2, 3), (1, 2)),
    "hovey": Grid(25, 0, (1, 2, 3, 4), (1, 2, 3)),
    "glaisher_franklin": Grid(25, 4, (1, 2, 3, 4), (1,)),
    "aab": Grid(25, 1, (2, 3), (1,)),
    "fu_tang": Grid(25, 1, (2, 3, 4), (1,)),
    "andrews_second": Grid(25, 1, (3,), (1,)),
    "series": Grid(30, 0, (2, 3), (1, 2)),
    "bijection": Grid(25, 0, (2, 3), (1, 2)),
}


def _require_k2(grid: Grid, name: str) -> None:
    if min(grid.kset) < 2:
        raise ValueError(f"check {name} requires k >= 2 on every grid cell")


@lru_cache(maxsize=None)
def _series(name: str, k: int, b: int, N: int, t: Optional[int] = None) -> Q.TruncatedSeries:
    return Q.build_gf(name, k, b, N, t)


def _gf_O_coeff(j: int, k: int, b: int, n: int, N: int) -> int:
    if j < 0:
        return 0
    return _series("O", k, b, N).coefficient(n, j)


def _beck_rhs_series(j: int, k: int, b: int, n: int, N: int) -> int:
    # (j+1) O_{j+1} - j O_j read off the series
    return (j + 1) * _gf_O_coeff(j + 1, k, b, n, N) - j * _gf_O_coeff(j, k, b, n, N)


@dataclass
class _Run:
    name: str
    grid: Grid
    cells: list[tuple] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)
    start: float = field(default_factory=time.perf_counter)

    def expect(self, params: tuple, label: str, lhs, rhs, witness: Optional[str] = None) -> None:
        if lhs != rhs:
            self.failures.append(Failure(params, label, lhs, rhs, witness))

    def report(self) -> VerificationReport:
        return VerificationReport(self.name, self.cells, self.failures,
                                  time.perf_counter() - self.start, self.grid.bounds())


def check_main_theorem(grid: Grid = DEFAULT_GRIDS["main"]) -> VerificationReport:
    """``O = D`` by enumeration and by the two independently built series."""
    run = _Run("main", grid)
    N = grid.nmax
    for k in grid.kset:
        for b in grid.bset:
            gO, gD = _series("O", k, b, N), _series("D", k, b, N)
            for n in grid.ns:
                for j in range(grid.jmax + 1):
                    cell = (j, k, b, n)
                    run.cells.append(cell)
                    values = (C.count_O(j, k, b, n), C.count_D(j, k, b, n),
                              gO.coefficient(n, j), gD.coefficient(n, j))
                    if len(set(values)) != 1:
                        run.failures.append(Failure(cell, "count_O,count_D,gf_O,gf_D",
                                                    values[0], list(values[1:])))
    return run.report()


def check_beck(grid: Grid = DEFAULT_GRIDS["beck"]) -> VerificationReport:
    """Excess over ``O(j,k,b)`` vs ``D(j,k,b)`` equals ``(k-1)((j+1)O_{j+1} - j O_j)``."""
    _require_k2(grid, "beck")
    run = _Run("beck", grid)
    N = grid.nmax
    for k in grid.kset:
        for b in grid.bset:
            for n in grid.ns:
                for j in range(grid.jmax + 1):
                    cell = (j, k, b, n)
                    run.cells.append(cell)
                    e = C.excess(j, k, b, n)
                    if e % (k - 1):
                        run.failures.append(Failure(cell, "(k-1) divides excess", e, k - 1))
                        continue
                    run.expect(cell, "excess/(k-1) vs series O-form", e // (k - 1),
                               _beck_rhs_series(j, k, b, n, N))
                    d_form = (j + 1) * C.count_D(j + 1, k, b, n) - j * C.count_D(j, k, b, n)
                    run.expect(cell, "excess/(k-1) vs enumerated D-form", e // (k - 1), d_form)
    return run.report()


def check_corollary(grid: Grid = DEFAULT_GRIDS["corollary"]) -> VerificationReport:
    """Cumulative excess up to ``j`` equals ``(k-1)(j+1) O_{j+1,k,b}(n)``."""
    run = _Run("corollary", grid)
    N = grid.nmax
    for k in grid.kset:
        for b in grid.bset:
            for n in grid.ns:
                for j in range(grid.jmax + 1):
                    cell = (j, k, b, n)
                    run.cells.append(cell)
                    run.expect(cell, "cumulative excess", C.excess_cumulative(j, k, b, n),
                               (k - 1) * (j + 1) * _gf_O_coeff(j + 1, k, b, n, N))
    return run.report()


def check_refinement(grid: Grid = DEFAULT_GRIDS["refinement"]) -> VerificationReport:
    """Refined excess equals ``(j+1)O_{j+1} - j O_j`` for every ``1 <= t <= k-1``."""
    _require_k2(grid, "refinement")
    run = _Run("refinement", grid)
    N = grid.nmax
    for k in grid.kset:
        for b in grid.bset:
            for n in grid.ns:
                for j in range(grid.jmax + 1):
                    rhs = _beck_rhs_series(j, k, b, n, N)
                    values = []
                    for t in range(1, k):
                        cell = (j, k, b, t, n)
                        run.cells.append(cell)
                        value = C.excess_refined(j, k, b, t, n)
                        values.append(value)
                        run.expect(cell, "refined excess", value, rhs)
                    if len(set(values)) > 1:
                        run.failures.append(Failure((j, k, b, n), "t-independence",
                                                    values[0], values))
    return run.report()


def check_hovey(grid: Grid = DEFAULT_GRIDS["hovey"]) -> VerificationReport:
    """No part divisible by ``kb`` vs no part divisible by ``b`` repeated ``>= k`` times."""
    run = _Run("hovey", grid)
    N = grid.nmax
    for k in grid.kset:
        for b in grid.bset:
            for n in grid.ns:
                cell = (0, k, b, n)
                run.cells.append(cell)
                parts = enumerate_partitions(n)
                lhs = sum(1 for pi in parts if all(p % (k * b) for p, _ in pi.pairs))
                rhs = sum(1 for pi in parts
                          if not any(p % b == 0 and m >= k for p, m in pi.pairs))
                run.expect(cell, "literal predicates", lhs, rhs)
                run.expect(cell, "vs [z^0] gf_D", lhs, _series("D", k, b, N).coefficient(n, 0))
    return run.report()


def check_glaisher_franklin(grid: Grid = DEFAULT_GRIDS["glaisher_franklin"]) -> VerificationReport:
    """The ``b = 1`` cases: Glaisher at ``j = 0``, Franklin for all ``j``."""
    run = _Run("glaisher_franklin", replace(grid, bset=(1,)))
    N = grid.nmax
    for k in grid.kset:
        for n in grid.ns:
            parts = enumerate_partitions(n)
            cell = (0, k, 1, n)
            run.cells.append(cell)
            lhs = sum(1 for pi in parts if all(p % k for p, _ in pi.pairs))
            rhs = sum(1 for pi in parts if all(m < k for _, m in pi.pairs))
            run.expect(cell, "glaisher literal predicates", lhs, rhs)
            for j in range(grid.jmax + 1):
                cell = (j, k, 1, n)
                if j:
                    run.cells.append(cell)
                run.expect(cell, "franklin O vs D", C.count_O(j, k, 1, n), C.count_D(j, k, 1, n))
                run.expect(cell, "franklin D vs series", C.count_D(j, k, 1, n),
                           _series("O", k, 1, N).coefficient(n, j))
    return run.report()


def check_aab(grid: Grid = DEFAULT_GRIDS["aab"]) -> VerificationReport:
    """Multiplicity ``u`` of the one part divisible by ``k`` vs the value ``u`` of the one repeated part."""
    _require_k2(grid, "aab")
    run = _Run("aab", replace(grid, bset=(1,)))
    for k in grid.kset:
        for n in grid.ns:
            total = 0
            for u in range(1, max(n, 1) + 1):
                cell = (k, u, n)
                run.cells.append(cell)
                lhs = C.count_O1k_u(k, u, n)
                total += lhs
                run.expect(cell, "O1k^(u) vs D1k^(u)", lhs, C.count_D1k_u(k, u, n))
            run.expect((k, 0, n), "sum over u", total, C.count_O(1, k, 1, n))
    return run.report()


def check_fu_tang(grid: Grid = DEFAULT_GRIDS["fu_tang"]) -> VerificationReport:
    _require_k2(grid, "fu_tang")
    run = _Run("fu_tang", replace(grid, bset=(1,)))
    N = grid.nmax
    for k in grid.kset:
        for n in grid.ns:
            cell = (k, n)
            run.cells.append(cell)
            lhs = C.fu_tang_lhs(k, n)
            run.expect(cell, "vs [z^1] gf_O", lhs, _series("O", k, 1, N).coefficient(n, 1))
            run.expect(cell, "vs D_{1,k}", lhs, C.count_D(1, k, 1, n))
    return run.report()


def check_andrews_second(grid: Grid = DEFAULT_GRIDS["andrews_second"]) -> VerificationReport:
    """Parts over ``D(0,2)`` minus different parts over ``O(0,2)``.

    Compared with ``D_{1,3} = O_{1,3}`` (the right-hand side in the notation
    of this package) and with the count of partitions having exactly one
    repeated part, repeated exactly three times.  Only the latter holds:
    at ``n = 4`` the left side is 0 while ``D_{1,3}(4) = 1``.
    """
    run = _Run("andrews_second", replace(grid, kset=(3,), bset=(1,)))
    N = grid.nmax
    for n in grid.ns:
        cell = (n,)
        run.cells.append(cell)
        lhs = C.andrews_second_lhs(n)
        run.expect(cell, "vs D_{1,3}", lhs, C.count_D(1, 3, 1, n))
        run.expect(cell, "vs [z^1] gf_O(3,1)", lhs, _series("O", 3, 1, N).coefficient(n, 1))
        run.expect(cell, "vs one part repeated exactly thrice", lhs,
                   C.count_single_part_thrice(n))
    return run.report()


def check_series_identities(N: int = 30, k_set=(2, 3), b_set=(1, 2)) -> VerificationReport:
    """Derivative, refinement-target and ``Dbar = O_0`` identities as exact series equalities.

    Also reads the derivative identity coefficientwise against the enumerated
    excess, so the series layer is tied back to the counting layer.
    """
    grid = Grid(N, 0, tuple(k_set), tuple(b_set))
    _require_k2(grid, "series")
    run = _Run("series", grid)
    for k in k_set:
        for b in b_set:
            jO = Q.gf_jO(k, b, N)
            lhs = Q.d_dw_at_1(Q.gf_O_w(k, b, N)) - Q.d_dw_at_1(Q.gf_D_w(k, b, N))
            rhs = jO.scale(Q.ONE_MINUS_Z * (k - 1))
            run.cells.append((k, b, 0, N))
            run.expect((k, b, "derivative"), "d/dw O_w - d/dw D_w", lhs.dump(), rhs.dump())
            for n in range(N + 1):
                for j in range(n // (k * b) + 1):
                    run.expect((k, b, j, n), "derivative coefficient vs excess",
                               lhs.coefficient(n, j), C.excess(j, k, b, n))
            target = jO.scale(Q.ONE_MINUS_Z)
            for t in range(1, k):
                run.cells.append((k, b, t, N))
                diff = Q.gf_O_class(k, b, t, N) - Q.gf_O_class0(k, b, N) - Q.gf_D_resmult(k, b, t, N)
                run.expect((k, b, "target", t), "refinement target",
                           Q.d_dw_at_1(diff).dump(), target.dump())
            run.expect((k, b, "Dbar"), "gf_Dbar = gf_O_class0",
                       Q.gf_Dbar(k, b, N).dump(), Q.gf_O_class0(k, b, N).dump())
    return run.report()


def _series_from_grid(grid: Grid) -> VerificationReport:
    return check_series_identities(grid.nmax, grid.kset, grid.bset)


def check_bijection(grid: Grid = DEFAULT_GRIDS["bijection"]) -> VerificationReport:
    """Exhaustive round trip of both maps for each ``(k, b)``."""
    start = time.perf_counter()
    cells, failures = [], []
    for k in grid.kset:
        for b in grid.bset:
            rep = verify_roundtrip(grid.nmax, k, b)
            cells.extend(rep.grid)
            failures.extend(rep.failures)
    return VerificationReport("bijection", cells, failures,
                              time.perf_counter() - start, grid.bounds())


CHECKS: dict[str, Callable[[Grid], VerificationReport]] = {
    "main": check_main_theorem,
    "beck": check_beck,
    "corollary": check_corollary,
    "refinement": check_refinement,
    "hovey": check_hovey,
    "glaisher_franklin": check_glaisher_franklin,
    "aab": check_aab,
    "fu_tang": check_fu_tang,
    "andrews_second": check_andrews_second,
    "series": _series_from_grid,
    "bijection": check_bijection,
}


def run_check(name: str, grid: Optional[Grid] = None) -> VerificationReport:
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}; expected one of {', '.join(CHECKS)}")
    return CHECKS[name](grid if grid is not None else DEFAULT_GRIDS[name])


def run_all(grid_for: Optional[Callable[[str], Grid]] = None) -> list[VerificationReport]:
    """Run every check; ``grid_for(name)`` may override the default grid."""
    return [run_check(name, grid_for(name) if grid_for else None) for name in CHECKS]
