"""Truncated q-series with exact integer polynomial coefficients in z and w.

``z`` tracks a number of different parts and ``w`` a number of parts (of
some kind); ``q`` tracks the weight.  A :class:`TruncatedSeries` of order
``N`` stores the coefficients of ``q**0 .. q**N``; every operation is exact
modulo ``q**(N+1)``.

Infinite products ``(a; q^s)_inf`` are truncated to the factors whose
q-offset is at most ``N``, which is exact at that order.  Division by a
binomial ``1 - X q^d`` is done by the recurrence ``B[n] = A[n] + X B[n-d]``
so no rational-function arithmetic is ever needed.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Union

Monomial = tuple[int, int]  # (z degree, w degree)


class PolyZW:
    """Sparse polynomial in ``z`` and ``w`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for (zd, wd), c in terms.items():
                if zd < 0 or wd < 0:
                    raise ValueError("negative degree")
                if c:
                    clean[(zd, wd)] = clean.get((zd, wd), 0) + c
            clean = {key: c for key, c in clean.items() if c}
        self.terms = clean

    @classmethod
    def const(cls, c: int) -> PolyZW:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, zdeg: int = 0, wdeg: int = 0, coeff: int = 1) -> PolyZW:
        return cls({(zdeg, wdeg): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = PolyZW.const(other)
        if not isinstance(other, PolyZW):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "PolyZW(0)"
        return f"PolyZW({dict(sorted(self.terms.items()))})"

    def __add__(self, other: Union[PolyZW, int]) -> PolyZW:
        other = _as_poly(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return PolyZW(out)

    __radd__ = __add__

    def __neg__(self) -> PolyZW:
        return PolyZW({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: Union[PolyZW, int]) -> PolyZW:
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> PolyZW:
        return _as_poly(other) - self

    def __mul__(self, other: Union[PolyZW, int]) -> PolyZW:
        if isinstance(other, int):
            return PolyZW({key: c * other for key, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for (z1, w1), c1 in self.terms.items():
            for (z2, w2), c2 in other.terms.items():
                key = (z1 + z2, w1 + w2)
                out[key] = out.get(key, 0) + c1 * c2
        return PolyZW(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PolyZW:
        out = PolyZW.const(1)
        for _ in range(e):
            out = out * self
        return out

    def coeff(self, zdeg: int, wdeg: Optional[int] = None) -> int:
        """Coefficient of ``z**zdeg w**wdeg``; ``wdeg=None`` sums over all w degrees."""
        if wdeg is None:
            return sum(c for (zd, _), c in self.terms.items() if zd == zdeg)
        return self.terms.get((zdeg, wdeg), 0)

    def max_wdeg(self) -> int:
        return max((wd for _, wd in self.terms), default=0)

    def max_zdeg(self) -> int:
        return max((zd for zd, _ in self.terms), default=0)

    def at_w1(self) -> PolyZW:
        out: dict[Monomial, int] = {}
        for (zd, _), c in self.terms.items():
            out[(zd, 0)] = out.get((zd, 0), 0) + c
        return PolyZW(out)

    def at_z1(self) -> PolyZW:
        out: dict[Monomial, int] = {}
        for (_, wd), c in self.terms.items():
            out[(0, wd)] = out.get((0, wd), 0) + c
        return PolyZW(out)

    def d_dw(self) -> PolyZW:
        return PolyZW({(zd, wd - 1): wd * c for (zd, wd), c in self.terms.items() if wd})

    def d_dw_at_1(self) -> PolyZW:
        out: dict[Monomial, int] = {}
        for (zd, wd), c in self.terms.items():
            if wd:
                out[(zd, 0)] = out.get((zd, 0), 0) + wd * c
        return PolyZW(out)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(zd, wd, c) for (zd, wd), c in sorted(self.terms.items())]


def _as_poly(x: Union[PolyZW, int]) -> PolyZW:
    return PolyZW.const(x) if isinstance(x, int) else x


ONE = PolyZW.const(1)
Z = PolyZW.monomial(1, 0)
W = PolyZW.monomial(0, 1)
ONE_MINUS_Z = ONE - Z


class TruncatedSeries:
    """Power series in ``q`` with :class:`PolyZW` coefficients, modulo ``q**(order+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Optional[Iterable[Union[PolyZW, int]]] = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        cs = [_as_poly(c) for c in (coeffs or ())][: order + 1]
        cs += [PolyZW() for _ in range(order + 1 - len(cs))]
        self.coeffs = cs

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls(order, [ONE])

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[int, Union[PolyZW, int]]) -> TruncatedSeries:
        """Build from a sparse ``{q degree: coefficient}`` map, dropping degrees above ``order``."""
        s = cls(order)
        for d, c in terms.items():
            if 0 <= d <= order:
                s.coeffs[d] = s.coeffs[d] + _as_poly(c)
        return s

    def copy(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, self.coeffs)

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(f"mismatched truncation orders {self.order} and {other.order}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, nonzero={sum(map(bool, self.coeffs))})"

    def __getitem__(self, n: int) -> PolyZW:
        return self.coeffs[n]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, [-a for a in self.coeffs])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: Union[TruncatedSeries, PolyZW, int]) -> TruncatedSeries:
        if isinstance(other, (PolyZW, int)):
            return self.scale(other)
        self._check(other)
        return self.mul_sparse({d: c for d, c in enumerate(other.coeffs) if c})

    __rmul__ = __mul__

    def scale(self, c: Union[PolyZW, int]) -> TruncatedSeries:
        c = _as_poly(c)
        return TruncatedSeries(self.order, [a * c for a in self.coeffs])

    def mul_sparse(self, factor: Mapping[int, PolyZW]) -> TruncatedSeries:
        """Multiply by the finite series ``sum factor[d] q**d``."""
        N = self.order
        out = [PolyZW() for _ in range(N + 1)]
        for d, c in factor.items():
            if d > N or not c:
                continue
            for n in range(d, N + 1):
                a = self.coeffs[n - d]
                if a:
                    out[n] = out[n] + a * c
        return TruncatedSeries(N, out)

    def mul_binomial(self, x: PolyZW, d: int) -> TruncatedSeries:
        """Multiply by ``1 - x q**d``."""
        return self.mul_sparse({0: ONE, d: -x})

    def div_binomial(self, x: PolyZW, d: int) -> TruncatedSeries:
        """Divide by ``1 - x q**d`` (``d >= 1``)."""
        if d < 1:
            raise ValueError("d must be >= 1")
        out = list(self.coeffs)
        for n in range(d, self.order + 1):
            if out[n - d]:
                out[n] = out[n] + x * out[n - d]
        return TruncatedSeries(self.order, out)

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; the constant coefficient must be ``1`` or ``-1``."""
        c0 = self.coeffs[0]
        if c0 == ONE:
            unit = 1
        elif c0 == -ONE:
            unit = -1
        else:
            raise ValueError("constant coefficient is not a unit")
        out = [PolyZW.const(unit)]
        for n in range(1, self.order + 1):
            acc = PolyZW()
            for d in range(1, n + 1):
                if self.coeffs[d] and out[n - d]:
                    acc = acc + self.coeffs[d] * out[n - d]
            out.append(acc * (-unit))
        return TruncatedSeries(self.order, out)

    def at_w1(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, [a.at_w1() for a in self.coeffs])

    def at_z1(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, [a.at_z1() for a in self.coeffs])

    def d_dw(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, [a.d_dw() for a in self.coeffs])

    def coefficient(self, n: int, zdeg: int = 0, wdeg: Optional[int] = None) -> int:
        """``[z**zdeg w**wdeg q**n]``; ``wdeg=None`` sums over w degrees."""
        if not 0 <= n <= self.order:
            raise IndexError(f"q-degree {n} outside 0..{self.order}")
        return self.coeffs[n].coeff(zdeg, wdeg)

    def dump(self) -> str:
        """One line per q-degree: ``n: [ (zdeg,wdeg,coeff), ... ]``."""
        lines = []
        for n, c in enumerate(self.coeffs):
            body = ", ".join(f"({zd},{wd},{v})" for zd, wd, v in c.sorted_terms())
            lines.append(f"{n}: [ {body} ]" if body else f"{n}: [ ]")
        return "\n".join(lines) + "\n"


def d_dw_at_1(s: TruncatedSeries) -> TruncatedSeries:
    """Differentiate in ``w`` then set ``w = 1``."""
    return TruncatedSeries(s.order, [a.d_dw_at_1() for a in s.coeffs])


def d_dw_at_1_product(factors: Iterable[TruncatedSeries]) -> TruncatedSeries:
    """Logarithmic-derivative form of ``d/dw (prod f_i) |_{w=1}``.

    Computes ``prod f_i(1) * sum f_i'(1) / f_i(1)``; each ``f_i(1)`` needs a
    unit constant term.  Used to cross-check :func:`d_dw_at_1`.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    N = factors[0].order
    prod_at_1 = TruncatedSeries.one(N)
    log_sum = TruncatedSeries(N)
    for f in factors:
        f1 = f.at_w1()
        prod_at_1 = prod_at_1 * f1
        log_sum = log_sum + d_dw_at_1(f) * f1.inverse()
    return prod_at_1 * log_sum


# -- products ----------------------------------------------------------------

def pochhammer_product(c: PolyZW, w_exp: int, step: int, N: int,
                       offset: Optional[int] = None) -> TruncatedSeries:
    """``prod_{m>=0} (1 - c w**w_exp q**(offset + step*m))`` truncated at ``N``.

    ``offset`` defaults to ``step``, giving ``(c w^e q^step; q^step)_inf``.
    """
    if step < 1:
        raise ValueError("step must be >= 1")
    offset = step if offset is None else offset
    if offset < 1:
        raise ValueError("offset must be >= 1")
    x = c * PolyZW.monomial(0, w_exp)
    s = TruncatedSeries.one(N)
    if not x:
        return s
    for d in range(offset, N + 1, step):
        s = s.mul_binomial(x, d)
    return s


def divide_pochhammer(s: TruncatedSeries, c: PolyZW, w_exp: int, step: int,
                      offset: Optional[int] = None) -> TruncatedSeries:
    """``s / prod_{m>=0} (1 - c w**w_exp q**(offset + step*m))``."""
    if step < 1:
        raise ValueError("step must be >= 1")
    offset = step if offset is None else offset
    x = c * PolyZW.monomial(0, w_exp)
    if not x:
        return s
    for d in range(offset, s.order + 1, step):
        s = s.div_binomial(x, d)
    return s


def pochhammer_reciprocal(c: PolyZW, w_exp: int, step: int, N: int,
                          offset: Optional[int] = None) -> TruncatedSeries:
    return divide_pochhammer(TruncatedSeries.one(N), c, w_exp, step, offset)


def geom_tail(step: int, c: PolyZW, N: int) -> TruncatedSeries:
    """``sum_{i>=1} q**(step*i) / (1 - c q**(step*i))`` truncated at ``N``."""
    if step < 1:
        raise ValueError("step must be >= 1")
    terms: dict[int, PolyZW] = {}
    for base in range(step, N + 1, step):
        power = ONE
        for d in range(base, N + 1, base):
            terms[d] = terms.get(d, PolyZW()) + power
            power = power * c
    return TruncatedSeries.from_terms(N, terms)


def _check_kb(k: int, b: int) -> None:
    if k < 1 or b < 1:
        raise ValueError("k and b must be >= 1")


def _check_t(k: int, t: int) -> None:
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 1 <= t <= k - 1:
        raise ValueError(f"t={t} out of range [1, {k - 1}]")


def check_degree_bounds(s: TruncatedSeries, z_step: Optional[int] = None) -> None:
    """Raise if some ``coeffs[n]`` has w-degree above ``n`` or z-degree above ``n // z_step``."""
    for n, c in enumerate(s.coeffs):
        if c.max_wdeg() > n:
            raise ArithmeticError(f"w-degree {c.max_wdeg()} exceeds {n} at q^{n}")
        if z_step and c.max_zdeg() > n // z_step:
            raise ArithmeticError(f"z-degree {c.max_zdeg()} exceeds {n // z_step} at q^{n}")


def _inv_qq(s: TruncatedSeries, w_exp: int = 0) -> TruncatedSeries:
    # s / (w^e q; q)_inf
    return divide_pochhammer(s, ONE, w_exp, 1)


def gf_O(k: int, b: int, N: int) -> TruncatedSeries:
    """``sum O(j,k,b;n) z^j q^n`` as ``((1-z)q^kb; q^kb)_inf / (q;q)_inf``."""
    _check_kb(k, b)
    s = _inv_qq(pochhammer_product(ONE_MINUS_Z, 0, k * b, N))
    check_degree_bounds(s, k * b)
    return s


def _multiplicity_factor(part: int, k: int, N: int, track_w: bool) -> dict[int, PolyZW]:
    # all multiplicities of `part`; z marks multiplicity >= k, w counts copies
    factor: dict[int, PolyZW] = {}
    for r in range(0, N // part + 1):
        coeff = PolyZW.monomial(1 if r >= k else 0, r if track_w else 0)
        factor[r * part] = coeff
    return factor


def gf_D(k: int, b: int, N: int) -> TruncatedSeries:
    """``sum D(j,k,b;n) z^j q^n`` built part by part.

    Parts not divisible by ``b`` contribute ``1/(1-q^i)``; each part ``b*i``
    contributes the explicit multiplicity series with ``z`` on multiplicities
    ``>= k``.  This is the middle expression of the product identity with
    each quotient expanded, independent of :func:`gf_O`.
    """
    _check_kb(k, b)
    s = TruncatedSeries.one(N)
    for i in range(1, N + 1):
        if i % b:
            s = s.div_binomial(ONE, i)
        else:
            s = s.mul_sparse(_multiplicity_factor(i, k, N, track_w=False))
    check_degree_bounds(s, k * b)
    return s


def gf_jO(k: int, b: int, N: int) -> TruncatedSeries:
    """``sum (j+1) O(j+1,k,b;n) z^j q^n``."""
    _check_kb(k, b)
    return gf_O(k, b, N) * geom_tail(k * b, ONE_MINUS_Z, N)


def gf_O_w(k: int, b: int, N: int) -> TruncatedSeries:
    """``((1-z) w q^kb; q^kb)_inf / (wq; q)_inf``; ``w`` counts parts."""
    _check_kb(k, b)
    s = _inv_qq(pochhammer_product(ONE_MINUS_Z, 1, k * b, N), w_exp=1)
    check_degree_bounds(s, k * b)
    return s


def gf_D_w(k: int, b: int, N: int) -> TruncatedSeries:
    """``((1-z) w^k q^kb; q^kb)_inf / (wq; q)_inf``."""
    _check_kb(k, b)
    s = _inv_qq(pochhammer_product(ONE_MINUS_Z, k, k * b, N), w_exp=1)
    check_degree_bounds(s, k * b)
    return s


def gf_D_w_expanded(k: int, b: int, N: int) -> TruncatedSeries:
    """Same series as :func:`gf_D_w`, built from explicit multiplicity factors."""
    _check_kb(k, b)
    s = TruncatedSeries.one(N)
    for i in range(1, N + 1):
        if i % b:
            s = s.div_binomial(W, i)
        else:
            s = s.mul_sparse(_multiplicity_factor(i, k, N, track_w=True))
    return s


def gf_O_class(k: int, b: int, t: int, N: int) -> TruncatedSeries:
    """``w`` counts parts congruent to ``t*b`` mod ``k*b`` (``1 <= t <= k-1``)."""
    _check_t(k, t)
    kb = k * b
    s = pochhammer_product(ONE_MINUS_Z, 0, kb, N)
    s = s * pochhammer_product(ONE, 0, kb, N, offset=t * b)
    s = _inv_qq(s)
    s = divide_pochhammer(s, ONE, 1, kb, offset=t * b)
    check_degree_bounds(s, kb)
    return s


def gf_O_class0(k: int, b: int, N: int) -> TruncatedSeries:
    """``w`` counts parts divisible by ``k*b``."""
    _check_kb(k, b)
    kb = k * b
    s = pochhammer_product(ONE_MINUS_Z, 1, kb, N) * pochhammer_product(ONE, 0, kb, N)
    s = divide_pochhammer(s, ONE, 1, kb)
    s = _inv_qq(s)
    check_degree_bounds(s, kb)
    return s


def gf_D_resmult(k: int, b: int, t: int, N: int) -> TruncatedSeries:
    """``w`` counts different parts divisible by ``b`` with multiplicity mod ``k`` at least ``t``."""
    _check_t(k, t)
    kb = k * b
    s = _inv_qq(pochhammer_product(ONE_MINUS_Z, 0, kb, N))
    s = divide_pochhammer(s, ONE, 0, kb)
    for i in range(1, N // b + 1):
        # (1 - q^{tbi}) + w (q^{tbi} - q^{kbi})
        factor: dict[int, PolyZW] = {0: ONE}
        factor[t * b * i] = W - ONE
        factor[kb * i] = factor.get(kb * i, PolyZW()) - W
        s = s.mul_sparse(factor)
    check_degree_bounds(s, kb)
    return s


def gf_Dbar(k: int, b: int, N: int) -> TruncatedSeries:
    """``w`` tracks the summed quotient multiplicities of parts divisible by ``b``.

    ``(q^b;q^b)/(q;q) * prod_i (1 + q^{bi} + ... + q^{(k-1)bi})(1 + z w q^{kbi} + z w^2 q^{2kbi} + ...)``
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    _check_kb(k, b)
    s = _inv_qq(pochhammer_product(ONE, 0, b, N))
    for i in range(1, N // b + 1):
        part = b * i
        low = {r * part: ONE for r in range(k) if r * part <= N}
        high: dict[int, PolyZW] = {0: ONE}
        for r in range(1, N // (k * part) + 1):
            high[r * k * part] = PolyZW.monomial(1, r)
        s = s.mul_sparse(low).mul_sparse(high)
    check_degree_bounds(s, k * b)
    return s


GF_NAMES = ("O", "D", "jO", "O_w", "D_w", "O_t", "O_0", "D_t", "Dbar")


def build_gf(name: str, k: int, b: int, N: int, t: Optional[int] = None) -> TruncatedSeries:
    """Look up a generating function by its short name."""
    simple = {"O": gf_O, "D": gf_D, "jO": gf_jO, "O_w": gf_O_w, "D_w": gf_D_w,
              "O_0": gf_O_class0, "Dbar": gf_Dbar}
    if name in simple:
        return simple[name](k, b, N)
    if name in ("O_t", "D_t"):
        if t is None:
            raise ValueError(f"series {name} requires t")
        return (gf_O_class if name == "O_t" else gf_D_resmult)(k, b, t, N)
    raise ValueError(f"unknown series {name!r}; expected one of {', '.join(GF_NAMES)}")
