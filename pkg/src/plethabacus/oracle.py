"""Brute-force symmetric polynomial arithmetic, independent of the abacus.

Polynomials in n variables are stored as packed exponent codes: each
exponent sits in a fixed bit field of one int64 with variable 1 in the
most significant field, so numeric order on codes equals lexicographic
order on exponent vectors. Arithmetic is exact int64 throughout; any
operation whose intermediates could exceed 63 bits raises OverflowError
instead of wrapping.
"""

from __future__ import annotations

import warnings
from functools import lru_cache

import numpy as np

from .partitions import Partition, make_partition

_CHUNK = 1 << 24
_COEFF_LIMIT = 1 << 62


class NotSymmetric(ValueError):
    """The polynomial is not invariant under variable permutations."""


class TooFewVariables(ValueError):
    """Fewer variables than the degree; Schur decomposition may lose terms."""


class NonTerminating(RuntimeError):
    """Leading-term elimination failed to make progress."""


def _bits_for(n: int) -> int:
    if n < 1:
        raise ValueError("need at least one variable")
    return min(63 // n, 62)


def _combine(codes: np.ndarray, coeffs: np.ndarray):
    """Sum coefficients of equal codes; returns sorted codes, zeros dropped."""
    if len(codes) == 0:
        return codes, coeffs
    order = np.argsort(codes)
    codes = codes[order]
    coeffs = coeffs[order]
    starts = np.concatenate(([0], np.flatnonzero(codes[1:] != codes[:-1]) + 1))
    sums = np.add.reduceat(coeffs, starts)
    uniq = codes[starts]
    keep = sums != 0
    return uniq[keep], sums[keep]


class MultivariatePolynomial:
    """Exact dense polynomial; codes sorted ascending, no zero coefficients."""

    __slots__ = ("n", "bits", "codes", "coeffs", "_max_digit")

    def __init__(self, n: int, codes: np.ndarray, coeffs: np.ndarray):
        self.n = n
        self.bits = _bits_for(n)
        self.codes = codes
        self.coeffs = coeffs
        self._max_digit = None

    @classmethod
    def from_terms(cls, n: int, terms: dict) -> "MultivariatePolynomial":
        bits = _bits_for(n)
        codes, coeffs = [], []
        for exps, c in terms.items():
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not have length {n}")
            if any(e < 0 or e >= 1 << bits for e in exps):
                raise OverflowError(f"exponent out of range in {exps}")
            codes.append(_pack(exps, n, bits))
            coeffs.append(c)
        return cls(n, *_combine(np.array(codes, dtype=np.int64), np.array(coeffs, dtype=np.int64)))

    @property
    def terms(self) -> dict:
        """Exponent-vector view; intended for small polynomials and tests."""
        return {
            _unpack(int(code), self.n, self.bits): int(c)
            for code, c in zip(self.codes, self.coeffs)
        }

    def is_zero(self) -> bool:
        return len(self.codes) == 0

    def coefficient(self, exps) -> int:
        code = _pack(exps, self.n, self.bits)
        i = np.searchsorted(self.codes, code)
        if i < len(self.codes) and self.codes[i] == code:
            return int(self.coeffs[i])
        return 0

    def max_digit(self) -> int:
        if self._max_digit is None:
            m = 0
            mask = (1 << self.bits) - 1
            for i in range(self.n):
                sh = self.bits * (self.n - 1 - i)
                if len(self.codes):
                    m = max(m, int(((self.codes >> sh) & mask).max()))
            self._max_digit = m
        return self._max_digit

    def degrees(self) -> set:
        mask = (1 << self.bits) - 1
        total = np.zeros(len(self.codes), dtype=np.int64)
        for i in range(self.n):
            total += (self.codes >> (self.bits * (self.n - 1 - i))) & mask
        return set(int(d) for d in np.unique(total))

    def _same_space(self, other):
        if not isinstance(other, MultivariatePolynomial):
            raise TypeError(f"cannot combine with {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other) -> "MultivariatePolynomial":
        self._same_space(other)
        return MultivariatePolynomial(
            self.n,
            *_combine(
                np.concatenate([self.codes, other.codes]),
                np.concatenate([self.coeffs, other.coeffs]),
            ),
        )

    def __sub__(self, other) -> "MultivariatePolynomial":
        return self + (-1) * other

    def __rmul__(self, k: int) -> "MultivariatePolynomial":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return MultivariatePolynomial(self.n, _EMPTY_CODES, _EMPTY_COEFFS)
        if abs(k) * int(np.abs(self.coeffs).sum(initial=0)) >= _COEFF_LIMIT:
            raise OverflowError("scalar multiple exceeds 63-bit headroom")
        return MultivariatePolynomial(self.n, self.codes, self.coeffs * k)

    def __mul__(self, other) -> "MultivariatePolynomial":
        if isinstance(other, int):
            return self.__rmul__(other)
        self._same_space(other)
        if self.is_zero() or other.is_zero():
            return MultivariatePolynomial(self.n, _EMPTY_CODES, _EMPTY_COEFFS)
        if self.max_digit() + other.max_digit() >= 1 << self.bits:
            raise OverflowError("product exponents exceed the packed field width")
        s1 = int(np.abs(self.coeffs).sum())
        s2 = int(np.abs(other.coeffs).sum())
        if s1 * s2 >= _COEFF_LIMIT:
            raise OverflowError("product coefficients exceed 63-bit headroom")
        small, big = sorted([self, other], key=lambda p: len(p.codes))
        rows = max(1, _CHUNK // len(small.codes))
        pieces = []
        for lo in range(0, len(big.codes), rows):
            hi = min(lo + rows, len(big.codes))
            codes = (big.codes[lo:hi, None] + small.codes[None, :]).ravel()
            coeffs = (big.coeffs[lo:hi, None] * small.coeffs[None, :]).ravel()
            pieces.append(_combine(codes, coeffs))
        if len(pieces) == 1:
            return MultivariatePolynomial(self.n, *pieces[0])
        return MultivariatePolynomial(
            self.n,
            *_combine(
                np.concatenate([p[0] for p in pieces]),
                np.concatenate([p[1] for p in pieces]),
            ),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.codes, other.codes)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __repr__(self) -> str:
        return f"MultivariatePolynomial(n={self.n}, terms={len(self.codes)})"


_EMPTY_CODES = np.array([], dtype=np.int64)
_EMPTY_COEFFS = np.array([], dtype=np.int64)


def _pack(exps, n: int, bits: int) -> int:
    code = 0
    for i, e in enumerate(exps):
        code |= int(e) << (bits * (n - 1 - i))
    return code


def _unpack(code: int, n: int, bits: int) -> tuple:
    mask = (1 << bits) - 1
    return tuple((code >> (bits * (n - 1 - i))) & mask for i in range(n))


_H_CODES_CACHE: dict = {}


def _h_codes(m: int, k: int, bits: int) -> np.ndarray:
    """Sorted codes of all degree-m monomials in the k least significant fields."""
    key = (bits, m, k)
    cached = _H_CODES_CACHE.get(key)
    if cached is not None:
        return cached
    if k == 0:
        out = np.array([0], dtype=np.int64) if m == 0 else _EMPTY_CODES
    elif m == 0:
        out = np.array([0], dtype=np.int64)
    elif k == 1:
        out = np.array([m], dtype=np.int64)
    else:
        sh = bits * (k - 1)
        out = np.concatenate(
            [(np.int64(e) << sh) + _h_codes(m - e, k - 1, bits) for e in range(m + 1)]
        )
    _H_CODES_CACHE[key] = out
    return out


def poly_h(m: int, n: int) -> MultivariatePolynomial:
    """Complete homogeneous symmetric polynomial: all degree-m monomials."""
    if m < 0:
        raise ValueError(f"degree {m} must be >= 0")
    bits = _bits_for(n)
    if m >= 1 << bits:
        raise OverflowError(f"degree {m} does not fit {bits}-bit exponent fields")
    codes = _h_codes(m, n, bits)
    return MultivariatePolynomial(n, codes, np.ones(len(codes), dtype=np.int64))


def poly_p(r: int, n: int) -> MultivariatePolynomial:
    """Power sum x_1^r + ... + x_n^r."""
    if r < 1:
        raise ValueError(f"exponent {r} must be >= 1")
    bits = _bits_for(n)
    if r >= 1 << bits:
        raise OverflowError(f"exponent {r} does not fit {bits}-bit fields")
    codes = np.array([r << (bits * j) for j in range(n)], dtype=np.int64)
    return MultivariatePolynomial(n, codes, np.ones(n, dtype=np.int64))


def _h1_power(j: int, n: int) -> MultivariatePolynomial:
    """(x_1 + ... + x_n)^j via multinomial coefficients, no convolution."""
    bits = _bits_for(n)
    fact = [1]
    for i in range(1, j + 1):
        fact.append(fact[-1] * i)
    if fact[-1] >= _COEFF_LIMIT:
        raise OverflowError(f"multinomials of degree {j} exceed 63-bit headroom")
    codes = _h_codes(j, n, bits)
    ftable = np.array(fact, dtype=np.int64)
    mask = (1 << bits) - 1
    denom = np.ones(len(codes), dtype=np.int64)
    for i in range(n):
        denom *= ftable[(codes >> (bits * (n - 1 - i))) & mask]
    return MultivariatePolynomial(n, codes, np.int64(fact[j]) // denom)


_H_MONOMIAL_CACHE: dict = {}


def _scatter_product(f: MultivariatePolynomial, h: MultivariatePolynomial):
    """f * h for full-support f and all-ones h, scattered onto the code master.

    Every monomial of the product degree occurs, so each partial product
    lands at a unique precomputable slot; this avoids sorting the big
    pairwise code array. Used only for products of poly_h factors.
    """
    n, bits = f.n, f.bits
    degree = sum(_unpack(int(f.codes[0]), n, bits)) + sum(_unpack(int(h.codes[0]), n, bits))
    if int(np.abs(f.coeffs).sum()) * len(h.codes) >= _COEFF_LIMIT:
        raise OverflowError("product coefficients exceed 63-bit headroom")
    master = _h_codes(degree, n, bits)
    v = np.zeros(len(master), dtype=np.int64)
    if len(h.codes) <= len(f.codes):
        for c in h.codes:
            v[np.searchsorted(master, f.codes + c)] += f.coeffs
    else:
        for c, w in zip(f.codes, f.coeffs):
            v[np.searchsorted(master, h.codes + c)] += w
    return MultivariatePolynomial(n, master, v)


def _h_monomial(t: tuple, n: int) -> MultivariatePolynomial:
    """Product of poly_h over the parts of t (a partition), heavily cached.

    Built by peeling the smallest part, so partial products are shared
    between determinants; all-ones tails short-circuit to _h1_power.
    """
    key = (n, t)
    cached = _H_MONOMIAL_CACHE.get(key)
    if cached is not None:
        return cached
    if not t:
        out = MultivariatePolynomial(
            n, np.array([0], dtype=np.int64), np.ones(1, dtype=np.int64)
        )
    elif t[0] == 1:
        out = _h1_power(len(t), n)
    elif len(t) == 1:
        out = poly_h(t[0], n)
    else:
        out = _scatter_product(_h_monomial(t[:-1], n), poly_h(t[-1], n))
    _H_MONOMIAL_CACHE[key] = out
    return out


@lru_cache(maxsize=None)
def _jacobi_trudi_terms(lam: Partition) -> dict:
    """Determinant det(h_{lam_i - i + j}) as a map h-index multiset -> coeff.

    Expanded row by row over subsets of used columns; the sign of picking
    column j is (-1)^(number of already-used columns above j).
    """
    parts = lam.parts
    size = len(parts)
    states: dict = {0: {(): 1}}
    for k in range(size):
        nxt: dict = {}
        for mask, monos in states.items():
            for j in range(size):
                bit = 1 << j
                if mask & bit:
                    continue
                v = parts[k] - (k + 1) + (j + 1)
                if v < 0:
                    continue
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                target = nxt.setdefault(mask | bit, {})
                for mono, c in monos.items():
                    key = tuple(sorted(mono + (v,), reverse=True)) if v else mono
                    target[key] = target.get(key, 0) + c * sign
        states = nxt
    full = states.get((1 << size) - 1, {(): 1})
    return {mono: c for mono, c in full.items() if c != 0}


_SCHUR_DENSE_CACHE: dict = {}


def _schur_dense(lam: Partition, n: int) -> np.ndarray:
    """Coefficient vector of s_lam aligned to the degree-|lam| code master."""
    key = (n, lam)
    cached = _SCHUR_DENSE_CACHE.get(key)
    if cached is not None:
        return cached
    bits = _bits_for(n)
    master = _h_codes(lam.size(), n, bits)
    v = np.zeros(len(master), dtype=np.int64)
    for mono, c in _jacobi_trudi_terms(lam).items():
        v += np.int64(c) * _h_monomial(mono, n).coeffs
    _SCHUR_DENSE_CACHE[key] = v
    return v


def poly_schur(lam: Partition, n: int) -> MultivariatePolynomial:
    """Schur polynomial via the Jacobi-Trudi determinant over poly_h values.

    When lam has more parts than variables the polynomial vanishes; a
    warning is emitted and the zero polynomial returned.
    """
    if len(lam) > n:
        warnings.warn(f"s_{lam} vanishes in {n} variables", stacklevel=2)
        return MultivariatePolynomial(n, _EMPTY_CODES, _EMPTY_COEFFS)
    bits = _bits_for(n)
    master = _h_codes(lam.size(), n, bits)
    v = _schur_dense(lam, n)
    keep = v != 0
    return MultivariatePolynomial(n, master[keep], v[keep])


def pleth_pr(f: MultivariatePolynomial, r: int) -> MultivariatePolynomial:
    """Substitute x_i -> x_i^r; realizes composition with p_r for symmetric f."""
    if r < 1:
        raise ValueError(f"power {r} must be >= 1")
    if f.max_digit() * r >= 1 << f.bits:
        raise OverflowError("substituted exponents exceed the packed field width")
    return MultivariatePolynomial(f.n, f.codes * np.int64(r), f.coeffs.copy())


def _check_symmetric(f: MultivariatePolynomial):
    """Invariance under every adjacent variable transposition."""
    mask = (1 << f.bits) - 1
    for i in range(f.n - 1):
        sh_hi = f.bits * (f.n - 1 - i)
        sh_lo = f.bits * (f.n - 2 - i)
        d_hi = (f.codes >> sh_hi) & mask
        d_lo = (f.codes >> sh_lo) & mask
        swapped = f.codes + (d_lo - d_hi) * ((np.int64(1) << sh_hi) - (np.int64(1) << sh_lo))
        order = np.argsort(swapped)
        if not (
            np.array_equal(swapped[order], f.codes)
            and np.array_equal(f.coeffs[order], f.coeffs)
        ):
            raise NotSymmetric(f"not invariant under swapping variables {i + 1}, {i + 2}")


def schur_decompose(f: MultivariatePolynomial):
    """Write a symmetric homogeneous polynomial as a Schur combination.

    Repeatedly reads the lexicographically largest exponent vector (a
    partition, by symmetry), subtracts that multiple of the matching
    Schur polynomial, and stops at zero. Exact and self-checking: any
    failure to strictly reduce the leading term raises NonTerminating.
    """
    from .symfunc import SchurExpansion

    if f.is_zero():
        return SchurExpansion(0, {})
    degs = f.degrees()
    if len(degs) > 1:
        raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
    (degree,) = degs
    if f.n < degree:
        raise TooFewVariables(f"{f.n} variables < degree {degree}")
    _check_symmetric(f)
    master = _h_codes(degree, f.n, f.bits)
    v = np.zeros(len(master), dtype=np.int64)
    idx = np.searchsorted(master, f.codes)
    v[idx] = f.coeffs
    terms = {}
    last = len(master)
    while True:
        nz = np.flatnonzero(v)
        if len(nz) == 0:
            break
        i = int(nz[-1])
        if i >= last:
            raise NonTerminating(f"leading code did not decrease at step {len(terms)}")
        exps = _unpack(int(master[i]), f.n, f.bits)
        if any(a < b for a, b in zip(exps, exps[1:])):
            raise NotSymmetric(f"leading exponent {exps} is not a partition")
        lam = make_partition(exps)
        c = int(v[i])
        v -= np.int64(c) * _schur_dense(lam, f.n)
        terms[lam] = c
        last = i
    return SchurExpansion(degree, terms)


def newton_check(m: int, n: int) -> bool:
    """Exact check of m*h_m = sum over l of p_l * h_{m-l} in n variables."""
    lhs = m * poly_h(m, n)
    rhs = MultivariatePolynomial(n, _EMPTY_CODES, _EMPTY_COEFFS)
    for ell in range(1, m + 1):
        rhs = rhs + poly_p(ell, n) * poly_h(m - ell, n)
    return lhs == rhs


def oracle_plethystic_mn(nu: Partition, r: int, m: int, n: int | None = None):
    """Ground truth for plethystic_mn by direct polynomial computation."""
    degree = r * m + nu.size()
    if n is None:
        n = max(degree, 1)
    if n < degree:
        raise TooFewVariables(f"{n} variables < degree {degree}")
    f = poly_schur(nu, n) * pleth_pr(poly_h(m, n), r)
    return schur_decompose(f)
