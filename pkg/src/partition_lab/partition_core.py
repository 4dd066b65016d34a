"""Canonical partitions, enumeration, and the per-partition statistics.

A partition is stored as ascending ``(part, multiplicity)`` pairs.  Every
statistic used by the counting, series and bijection layers lives here so
that the absent-part convention (multiplicity 0) is handled in one place.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


class ParseError(ValueError):
    """Raised for partition text that does not match the grammar."""


@dataclass(frozen=True, order=True)
class Partition:
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = 0
        for pair in self.pairs:
            if len(pair) != 2:
                raise ValueError(f"bad pair {pair!r}")
            part, mult = pair
            if not isinstance(part, int) or not isinstance(mult, int):
                raise TypeError(f"non-integer pair {pair!r}")
            if part < 1 or mult < 1:
                raise ValueError(f"parts and multiplicities must be positive: {pair!r}")
            if part <= prev:
                raise ValueError("parts must be strictly increasing")
            prev = part

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> Partition:
        """Build from a ``{part: multiplicity}`` map; zero multiplicities are dropped."""
        return cls(tuple(sorted((p, m) for p, m in counts.items() if m)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        return cls.from_counts(Counter(parts))

    @property
    def weight(self) -> int:
        return sum(p * m for p, m in self.pairs)

    def multiplicity(self, part: int) -> int:
        for p, m in self.pairs:
            if p == part:
                return m
            if p > part:
                break
        return 0

    def counts(self) -> dict[int, int]:
        return dict(self.pairs)

    def parts(self) -> list[int]:
        """Flat list of parts, non-increasing."""
        out: list[int] = []
        for p, m in reversed(self.pairs):
            out.extend([p] * m)
        return out

    def __str__(self) -> str:
        return format_partition(self)

    def __len__(self) -> int:
        return total_parts(self)


EMPTY = Partition()

_EXP_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")
_INT_TOKEN = re.compile(r"^\d+$")


def parse_partition(text: str) -> Partition:
    """Parse exponent form (``"4^5 6 12^7"``) or sum form (``"3+1+1"``).

    Term order is irrelevant and repeated parts accumulate.
    """
    text = text.strip()
    counts: Counter[int] = Counter()
    if not text:
        return EMPTY
    if "+" in text:
        for raw in text.split("+"):
            tok = raw.strip()
            if not _INT_TOKEN.match(tok):
                raise ParseError(f"malformed token {tok!r} in sum form")
            part = int(tok)
            if part == 0:
                raise ParseError(f"zero part in token {tok!r}")
            counts[part] += 1
        return Partition.from_counts(counts)
    for tok in text.split():
        match = _EXP_TOKEN.match(tok)
        if match is None:
            raise ParseError(f"malformed token {tok!r}")
        part = int(match.group(1))
        mult = 1 if match.group(2) is None else int(match.group(2))
        if part == 0:
            raise ParseError(f"zero part in token {tok!r}")
        if mult == 0:
            raise ParseError(f"zero exponent in token {tok!r}")
        counts[part] += mult
    return Partition.from_counts(counts)


def format_partition(pi: Partition, explicit_ones: bool = False) -> str:
    """Exponent form, ascending parts; ``^1`` is omitted unless ``explicit_ones``."""
    toks = []
    for p, m in pi.pairs:
        toks.append(f"{p}^{m}" if (m != 1 or explicit_ones) else str(p))
    return " ".join(toks)


def _descending(n: int, largest: int) -> Iterator[tuple[tuple[int, int], ...]]:
    # pairs are produced largest part first; callers reverse them
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for mult in range(n // part, 0, -1):
            rest = n - part * mult
            for tail in _descending(rest, part - 1):
                yield ((part, mult),) + tail


def iter_partitions(n: int) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse lexicographic order.

    Parts are compared largest first, so ``5`` comes before ``4+1`` which
    comes before ``3+2``.  ``n == 0`` yields only the empty partition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    for desc in _descending(n, n):
        yield Partition(desc[::-1])


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` (cached), in the order of :func:`iter_partitions`."""
    return tuple(iter_partitions(n))


def total_parts(pi: Partition) -> int:
    return sum(m for _, m in pi.pairs)


def distinct_parts(pi: Partition) -> int:
    return len(pi.pairs)


def parts_in_class(pi: Partition, modulus: int, residue: int) -> int:
    """Number of parts (with multiplicity) congruent to ``residue`` mod ``modulus``."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if not 0 <= residue < modulus:
        raise ValueError(f"residue {residue} out of range for modulus {modulus}")
    return sum(m for p, m in pi.pairs if p % modulus == residue)


def distinct_parts_in_class(pi: Partition, modulus: int, residue: int) -> int:
    if not 0 <= residue < modulus:
        raise ValueError(f"residue {residue} out of range for modulus {modulus}")
    return sum(1 for p, _ in pi.pairs if p % modulus == residue)


@dataclass(frozen=True)
class MultDecomposition:
    """``s = residual + k*quotient`` plus the base-``k`` digits of ``s`` above the units place.

    ``base_k_digits[i]`` is the coefficient of ``k**(i+1)``.
    """

    residual: int
    quotient: int
    base_k_digits: tuple[int, ...]


def decompose_multiplicity(s: int, k: int) -> MultDecomposition:
    if k < 1:
        raise ValueError("k must be >= 1")
    if s < 0:
        raise ValueError("multiplicity must be nonnegative")
    if k == 1:
        return MultDecomposition(0, s, ())
    quotient, residual = divmod(s, k)
    digits = []
    q = quotient
    while q:
        q, d = divmod(q, k)
        digits.append(d)
    return MultDecomposition(residual, quotient, tuple(digits))


def mult_decomposition(pi: Partition, part: int, k: int) -> MultDecomposition:
    return decompose_multiplicity(pi.multiplicity(part), k)


def distinct_parts_resmult_at_least(pi: Partition, b: int, k: int, t: int) -> int:
    """Distinct parts divisible by ``b`` whose multiplicity mod ``k`` is at least ``t``."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 0 <= t <= k - 1:
        raise ValueError(f"t={t} out of range [0, {k - 1}]")
    return sum(1 for p, m in pi.pairs if p % b == 0 and m % k >= t)


@dataclass(frozen=True)
class KadicForm:
    alpha: int
    core: int


def kadic_form(part: int, b: int, k: int) -> KadicForm:
    """Write ``part = b * k**alpha * core`` with ``k`` not dividing ``core``."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if part < 1 or b < 1:
        raise ValueError("part and b must be positive")
    if part % b:
        raise ValueError(f"b={b} does not divide part {part}")
    core, alpha = part // b, 0
    while core % k == 0:
        core //= k
        alpha += 1
    return KadicForm(alpha, core)
