"""Brute-force counting functions and excess statistics.

Everything here is computed by filtering the exhaustive enumeration from
:mod:`partition_lab.partition_core`; nothing uses a generating function or a
closed form.  This layer is the oracle the series and bijection layers are
checked against.

Set membership follows the "distinct part values" reading:

* ``O(j, k, b)``: exactly ``j`` different parts divisible by ``k*b``;
* ``D(j, k, b)``: exactly ``j`` different parts divisible by ``b`` that occur
  at least ``k`` times.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional

from .partition_core import (
    Partition,
    distinct_parts,
    distinct_parts_resmult_at_least,
    enumerate_partitions,
    parts_in_class,
    total_parts,
)


@dataclass(frozen=True)
class Params:
    j: int
    k: int
    b: int

    def __post_init__(self) -> None:
        _check_jkb(self.j, self.k, self.b)


def _check_jkb(j: int, k: int, b: int) -> None:
    if j < 0:
        raise ValueError("j must be >= 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    if b < 1:
        raise ValueError("b must be >= 1")


def _require_beck_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k={k}: Beck-type statistics require k >= 2")


def _check_t(t: int, k: int, lo: int = 0) -> None:
    if not lo <= t <= k - 1:
        raise ValueError(f"t={t} out of range [{lo}, {k - 1}]")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")


# -- membership ---------------------------------------------------------------

def o_index(pi: Partition, k: int, b: int) -> int:
    """Number of different parts of ``pi`` divisible by ``k*b``."""
    kb = k * b
    return sum(1 for p, _ in pi.pairs if p % kb == 0)


def d_index(pi: Partition, k: int, b: int) -> int:
    """Number of different parts divisible by ``b`` with multiplicity ``>= k``."""
    return sum(1 for p, m in pi.pairs if p % b == 0 and m >= k)


def is_in_O(pi: Partition, j: int, k: int, b: int) -> bool:
    return o_index(pi, k, b) == j


def is_in_D(pi: Partition, j: int, k: int, b: int) -> bool:
    return d_index(pi, k, b) == j


def members_O(j: int, k: int, b: int, n: int) -> list[Partition]:
    _check_jkb(j, k, b)
    _check_n(n)
    return [pi for pi in enumerate_partitions(n) if o_index(pi, k, b) == j]


def members_D(j: int, k: int, b: int, n: int) -> list[Partition]:
    _check_jkb(j, k, b)
    _check_n(n)
    return [pi for pi in enumerate_partitions(n) if d_index(pi, k, b) == j]


# -- plain counts -------------------------------------------------------------

@lru_cache(maxsize=None)
def _o_tally(k: int, b: int, n: int) -> tuple[Counter, Counter]:
    counts: Counter = Counter()
    lengths: Counter = Counter()
    for pi in enumerate_partitions(n):
        j = o_index(pi, k, b)
        counts[j] += 1
        lengths[j] += total_parts(pi)
    return counts, lengths


@lru_cache(maxsize=None)
def _d_tally(k: int, b: int, n: int) -> tuple[Counter, Counter]:
    counts: Counter = Counter()
    lengths: Counter = Counter()
    for pi in enumerate_partitions(n):
        j = d_index(pi, k, b)
        counts[j] += 1
        lengths[j] += total_parts(pi)
    return counts, lengths


def count_O(j: int, k: int, b: int, n: int) -> int:
    _check_jkb(j, k, b)
    _check_n(n)
    return _o_tally(k, b, n)[0][j]


def count_D(j: int, k: int, b: int, n: int) -> int:
    _check_jkb(j, k, b)
    _check_n(n)
    return _d_tally(k, b, n)[0][j]


def count_O_cumulative(j: int, k: int, b: int, n: int) -> int:
    """Partitions of ``n`` with at most ``j`` different parts divisible by ``kb``."""
    return sum(count_O(i, k, b, n) for i in range(j + 1))


def count_D_cumulative(j: int, k: int, b: int, n: int) -> int:
    return sum(count_D(i, k, b, n) for i in range(j + 1))


def count_O_by_length(j: int, k: int, b: int, m: int, n: int) -> int:
    """Members of ``O(j,k,b)`` of ``n`` with exactly ``m`` parts."""
    return sum(1 for pi in members_O(j, k, b, n) if total_parts(pi) == m)


def count_D_by_length(j: int, k: int, b: int, m: int, n: int) -> int:
    return sum(1 for pi in members_D(j, k, b, n) if total_parts(pi) == m)


def count_O_class(j: int, k: int, b: int, t: int, m: int, n: int) -> int:
    """Members of ``O(j,k,b)`` of ``n`` with ``m`` parts congruent to ``t*b`` mod ``k*b``."""
    _check_t(t, k)
    kb = k * b
    return sum(1 for pi in members_O(j, k, b, n)
               if parts_in_class(pi, kb, t * b) == m)


def count_D_resmult(j: int, k: int, b: int, t: int, m: int, n: int) -> int:
    """Members of ``D(j,k,b)`` with ``m`` different parts divisible by ``b`` of residual multiplicity ``>= t``."""
    _require_beck_k(k)
    _check_t(t, k)
    return sum(1 for pi in members_D(j, k, b, n)
               if distinct_parts_resmult_at_least(pi, b, k, t) == m)


def quotient_sum(pi: Partition, k: int, b: int) -> int:
    """Sum over parts divisible by ``b`` of ``multiplicity // k``."""
    return sum(m // k for p, m in pi.pairs if p % b == 0)


def count_Dbar(j: int, k: int, b: int, m: int, n: int) -> int:
    """Members of ``D(j,k,b)`` whose quotient multiplicities sum to ``m``."""
    _require_beck_k(k)
    return sum(1 for pi in members_D(j, k, b, n) if quotient_sum(pi, k, b) == m)


# -- excess statistics --------------------------------------------------------

def excess(j: int, k: int, b: int, n: int) -> int:
    """Total parts over ``O(j,k,b)`` minus total parts over ``D(j,k,b)``."""
    _check_jkb(j, k, b)
    _check_n(n)
    return _o_tally(k, b, n)[1][j] - _d_tally(k, b, n)[1][j]


def excess_cumulative(j: int, k: int, b: int, n: int) -> int:
    return sum(excess(i, k, b, n) for i in range(j + 1))


def excess_refined(j: int, k: int, b: int, t: int, n: int) -> int:
    """The residue-class refined excess for ``1 <= t <= k-1``.

    Over ``O(j,k,b)`` count parts ``= t*b`` minus parts ``= 0`` (mod ``k*b``);
    subtract, over ``D(j,k,b)``, the number of different parts divisible by
    ``b`` whose multiplicity mod ``k`` is at least ``t``.
    """
    _require_beck_k(k)
    _check_t(t, k, lo=1)
    kb = k * b
    o_side = sum(parts_in_class(pi, kb, t * b) - parts_in_class(pi, kb, 0)
                 for pi in members_O(j, k, b, n))
    d_side = sum(distinct_parts_resmult_at_least(pi, b, k, t)
                 for pi in members_D(j, k, b, n))
    return o_side - d_side


# -- special cases from the literature ---------------------------------------

def count_O1k_u(k: int, u: int, n: int) -> int:
    """Exactly one different part divisible by ``k``, and it occurs exactly ``u`` times."""
    _require_beck_k(k)
    if u < 1:
        raise ValueError("u must be >= 1")
    total = 0
    for pi in members_O(1, k, 1, n):
        (mult,) = [m for p, m in pi.pairs if p % k == 0]
        total += mult == u
    return total


def count_D1k_u(k: int, u: int, n: int) -> int:
    """Exactly one different part occurring at least ``k`` times, and that part is ``u``."""
    _require_beck_k(k)
    if u < 1:
        raise ValueError("u must be >= 1")
    total = 0
    for pi in members_D(1, k, 1, n):
        (part,) = [p for p, m in pi.pairs if m >= k]
        total += part == u
    return total


def fu_tang_lhs(k: int, n: int) -> int:
    """Parts congruent to 1 mod ``k`` over ``O(0,k)`` minus different parts over ``D(0,k)``."""
    _require_beck_k(k)
    o_side = sum(parts_in_class(pi, k, 1 % k) for pi in members_O(0, k, 1, n))
    d_side = sum(distinct_parts(pi) for pi in members_D(0, k, 1, n))
    return o_side - d_side


def andrews_second_lhs(n: int) -> int:
    """Total parts over ``D(0,2)`` minus different parts over ``O(0,2)``."""
    d_side = sum(total_parts(pi) for pi in members_D(0, 2, 1, n))
    o_side = sum(distinct_parts(pi) for pi in members_O(0, 2, 1, n))
    return d_side - o_side


def count_single_part_thrice(n: int) -> int:
    """Partitions of ``n`` where exactly one part repeats and it occurs exactly three times."""
    _check_n(n)
    total = 0
    for pi in enumerate_partitions(n):
        repeated = [m for _, m in pi.pairs if m >= 2]
        total += repeated == [3]
    return total


# -- family dispatch and cache file ------------------------------------------

FAMILIES = ("O", "D", "O_m", "D_m", "O_t", "D_t", "Dbar", "O1u", "D1u", "Ocum", "Dcum")


def count_family(family: str, j: int, k: int, b: int, n: int,
                 t: Optional[int] = None, m: Optional[int] = None,
                 u: Optional[int] = None) -> int:
    """Evaluate a named counting family; raises ``ValueError`` on bad indices."""

    def need(name: str, value: Optional[int]) -> int:
        if value is None:
            raise ValueError(f"family {family} requires {name}")
        return value

    if family == "O":
        return count_O(j, k, b, n)
    if family == "D":
        return count_D(j, k, b, n)
    if family == "O_m":
        return count_O_by_length(j, k, b, need("m", m), n)
    if family == "D_m":
        return count_D_by_length(j, k, b, need("m", m), n)
    if family == "O_t":
        return count_O_class(j, k, b, need("t", t), need("m", m), n)
    if family == "D_t":
        return count_D_resmult(j, k, b, need("t", t), need("m", m), n)
    if family == "Dbar":
        return count_Dbar(j, k, b, need("m", m), n)
    if family in ("O1u", "D1u"):
        if j != 1 or b != 1:
            raise ValueError(f"family {family} is defined for j=1, b=1 only")
        fn = count_O1k_u if family == "O1u" else count_D1k_u
        return fn(k, need("u", u), n)
    if family == "Ocum":
        return count_O_cumulative(j, k, b, n)
    if family == "Dcum":
        return count_D_cumulative(j, k, b, n)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


CSV_HEADER = ("family", "j", "k", "b", "t", "m", "n", "value")


@dataclass(frozen=True, order=True)
class CountRow:
    family: str
    j: Optional[int]
    k: Optional[int]
    b: Optional[int]
    t: Optional[int]
    m: Optional[int]
    n: int
    value: int

    def key(self) -> tuple:
        return (self.family, self.j, self.k, self.b, self.t, self.m, self.n)


def _sort_key(row: CountRow) -> tuple:
    # None sorts before any integer
    return tuple((x is not None, x) for x in row.key())


@dataclass
class CountTable:
    rows: list[CountRow] = field(default_factory=list)
    provenance: str = "enumeration"

    def add(self, row: CountRow) -> None:
        self.rows.append(row)

    def merge(self, other: Iterable[CountRow]) -> None:
        """Add rows, keeping the last value per key; result is sorted by key."""
        by_key = {r.key(): r for r in self.rows}
        for r in other:
            by_key[r.key()] = r
        self.rows = sorted(by_key.values(), key=_sort_key)

    def lookup(self, family: str, j, k, b, t, m, n) -> Optional[int]:
        key = (family, j, k, b, t, m, n)
        for r in self.rows:
            if r.key() == key:
                return r.value
        return None

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for r in sorted(self.rows, key=_sort_key):
                writer.writerow(["" if v is None else v for v in
                                 (r.family, r.j, r.k, r.b, r.t, r.m, r.n, r.value)])

    @classmethod
    def from_csv(cls, path: str | Path) -> CountTable:
        def opt(s: str) -> Optional[int]:
            return int(s) if s != "" else None

        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if tuple(header or ()) != CSV_HEADER:
                raise ValueError(f"bad cache header {header!r}")
            rows = [CountRow(f, opt(j), opt(k), opt(b), opt(t), opt(m), int(n), int(v))
                    for f, j, k, b, t, m, n, v in reader]
        return cls(sorted(rows, key=_sort_key))
