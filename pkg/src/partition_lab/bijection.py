"""The explicit bijection between ``O(j,k,b)`` and ``D(j,k,b)``.

``phi`` (O to D), for each part ``i`` with multiplicity ``s``:

* ``k*b | i``: ``i^s -> (i/k)^(k*s)``;
* ``b | i`` but ``k*b`` does not divide ``i``: write ``s`` in base ``k`` as
  ``r + u1*k + u2*k^2 + ...`` and emit ``i^r, (k i)^u1, (k^2 i)^u2, ...``;
* otherwise unchanged.

``psi`` (D to O), with ``s = r + k*u`` and ``i = b * k^alpha * core``:

* ``b | i``: ``i^s -> (k i)^u, (i / k^alpha)^(k^alpha * r)``;
* otherwise unchanged.

Outputs landing on the same part value are merged by adding multiplicities.
``j`` is never an input: it is recovered by classifying the image.
For ``k = 1`` both maps are the identity.
"""

from __future__ import annotations

import time
from collections import Counter

from .counting import d_index, o_index
from .partition_core import (
    Partition,
    decompose_multiplicity,
    enumerate_partitions,
    format_partition,
    kadic_form,
)
from .report import Failure, VerificationReport


def phi(pi: Partition, k: int, b: int) -> Partition:
    if k < 1 or b < 1:
        raise ValueError("k and b must be >= 1")
    if k == 1:
        return pi
    out: Counter[int] = Counter()
    kb = k * b
    for i, s in pi.pairs:
        if i % kb == 0:
            out[i // k] += k * s
        elif i % b == 0:
            dec = decompose_multiplicity(s, k)
            out[i] += dec.residual
            scale = i
            for digit in dec.base_k_digits:
                scale *= k
                out[scale] += digit
        else:
            out[i] += s
    return Partition.from_counts(out)


def psi(pi: Partition, k: int, b: int) -> Partition:
    if k < 1 or b < 1:
        raise ValueError("k and b must be >= 1")
    if k == 1:
        return pi
    out: Counter[int] = Counter()
    for i, s in pi.pairs:
        if i % b == 0:
            u, r = divmod(s, k)
            out[k * i] += u
            if r:
                scale = k ** kadic_form(i, b, k).alpha
                out[i // scale] += scale * r
        else:
            out[i] += s
    return Partition.from_counts(out)


def verify_roundtrip(n_max: int, k: int, b: int) -> VerificationReport:
    """Exhaustive check of weight, class transport and both inverse laws for ``n <= n_max``."""
    if k < 1 or b < 1 or n_max < 0:
        raise ValueError("need n_max >= 0 and k, b >= 1")
    start = time.perf_counter()
    failures: list[Failure] = []
    grid = []
    for n in range(n_max + 1):
        grid.append((n, k, b))
        for pi in enumerate_partitions(n):
            failures.extend(_check_one(pi, n, k, b))
    return VerificationReport(
        check_name="bijection",
        grid=grid,
        failures=failures,
        elapsed=time.perf_counter() - start,
        bounds={"nmax": n_max, "kset": [k], "bset": [b]},
    )


def _check_one(pi: Partition, n: int, k: int, b: int) -> list[Failure]:
    bad = []
    text = format_partition(pi)
    j_o, j_d = o_index(pi, k, b), d_index(pi, k, b)

    image = phi(pi, k, b)
    if image.weight != n:
        bad.append(Failure((n, k, b), "phi weight", n, image.weight, text))
    if d_index(image, k, b) != j_o:
        bad.append(Failure((j_o, k, b, n), "phi class", j_o, d_index(image, k, b), text))
    if psi(image, k, b) != pi:
        bad.append(Failure((j_o, k, b, n), "psi(phi(pi))", text,
                           format_partition(psi(image, k, b)), text))

    image = psi(pi, k, b)
    if image.weight != n:
        bad.append(Failure((n, k, b), "psi weight", n, image.weight, text))
    if o_index(image, k, b) != j_d:
        bad.append(Failure((j_d, k, b, n), "psi class", j_d, o_index(image, k, b), text))
    if phi(image, k, b) != pi:
        bad.append(Failure((j_d, k, b, n), "phi(psi(pi))", text,
                           format_partition(phi(image, k, b)), text))
    return bad


def correspondence_table(j: int, k: int, b: int, n: int) -> list[tuple[Partition, Partition]]:
    """Rows ``(pi, phi(pi))`` for every ``pi`` in ``O(j,k,b)`` of ``n``, in enumeration order."""
    return [(pi, phi(pi, k, b)) for pi in enumerate_partitions(n) if o_index(pi, k, b) == j]


def format_table(rows: list[tuple[Partition, Partition]]) -> str:
    return "".join(f"{format_partition(left, explicit_ones=True)} <-> "
                   f"{format_partition(right, explicit_ones=True)}\n" for left, right in rows)


def table29() -> str:
    """The ``O(3,2,2)`` / ``D(3,2,2)`` correspondence at ``n = 29``."""
    return format_table(correspondence_table(3, 2, 2, 29))
