"""Exact dense linear algebra over prime fields F_p.

Matrices are immutable wrappers around integer numpy arrays with all entries
reduced mod p.  Every operation is exact: products route through float64 BLAS
only when the intermediate values provably fit in the 53-bit mantissa, and
row reduction over F_2 uses a bit-packed elimination path.  Both reduction
paths produce the (unique) reduced row echelon form, so results never depend
on which path ran.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

_PRIMES_TO_97 = frozenset(
    (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
     71, 73, 79, 83, 89, 97)
)


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime 2 <= p <= 97."""

    p: int

    def __post_init__(self) -> None:
        if self.p not in _PRIMES_TO_97:
            raise ValueError(f"p must be a prime in [2, 97], got {self.p}")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def elements(self) -> range:
        return range(self.p)


def _as_array(entries, p: int) -> np.ndarray:
    a = np.asarray(entries, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError(f"matrix entries must be 2-dimensional, got shape {a.shape}")
    return a % p


def _matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact modular product; uses BLAS when values fit in float64 exactly."""
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if (p - 1) * (p - 1) * inner < 2**53:
        c = a.astype(np.float64) @ b.astype(np.float64)
        return np.rint(c).astype(np.int64) % p
    return (a @ b) % p


# --- generic mod-p row reduction -------------------------------------------

def _rref_modp(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    out = a.copy()
    for j in range(n):
        if r == m:
            break
        col = out[r:, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            out[[r, piv]] = out[[piv, r]]
        inv = pow(int(out[r, j]), p - 2, p)
        if inv != 1:
            out[r] = (out[r] * inv) % p
        rest = out[:, j].copy()
        rest[r] = 0
        rows = np.nonzero(rest)[0]
        if rows.size:
            out[rows] = (out[rows] - np.outer(rest[rows], out[r])) % p
        pivots.append(j)
        r += 1
    return out, pivots


# --- bit-packed F_2 row reduction ------------------------------------------

def _gf2_pack(a: np.ndarray) -> np.ndarray:
    m, n = a.shape
    words = max(1, (n + 63) // 64)
    packed = np.zeros((m, words), dtype=np.uint64)
    bits = (a & 1).astype(np.uint64)
    for j in range(n):
        packed[:, j >> 6] |= bits[:, j] << np.uint64(j & 63)
    return packed

def _gf2_unpack(packed: np.ndarray, n: int) -> np.ndarray:
    m = packed.shape[0]
    out = np.zeros((m, n), dtype=np.int64)
    for j in range(n):
        out[:, j] = (packed[:, j >> 6] >> np.uint64(j & 63)) & np.uint64(1)
    return out

def _rref_gf2(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    m, n = a.shape
    packed = _gf2_pack(a)
    r = 0
    pivots: list[int] = []
    for j in range(n):
        if r == m:
            break
        w, b = j >> 6, np.uint64(j & 63)
        col = (packed[r:, w] >> b) & np.uint64(1)
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            packed[[r, piv]] = packed[[piv, r]]
        whole = (packed[:, w] >> b) & np.uint64(1)
        whole[r] = 0
        rows = np.nonzero(whole)[0]
        if rows.size:
            packed[rows] ^= packed[r]
        pivots.append(j)
        r += 1
    return _gf2_unpack(packed, n), pivots


def _rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    if a.shape[0] == 0 or a.shape[1] == 0:
        return a.copy(), []
    if p == 2:
        return _rref_gf2(a % 2)
    return _rref_modp(a, p)


def _kernel_free(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Canonical right-null-space basis (as columns) plus the free column list.

    The rows of the basis restricted to the free columns form an identity
    matrix, which downstream code relies on to express induced maps.
    """
    n = a.shape[1]
    red, pivots = _rref(a, p)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    k = np.zeros((n, len(free)), dtype=np.int64)
    for idx, j in enumerate(free):
        k[j, idx] = 1
        for ri, pj in enumerate(pivots):
            k[pj, idx] = (-red[ri, j]) % p
    return k, free


def _kernel(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form the canonical basis of the right null space of a."""
    return _kernel_free(a, p)[0]


class MatrixFp:
    """Immutable dense matrix over F_p."""

    __slots__ = ("field", "_a")

    def __init__(self, field: PrimeField, entries) -> None:
        object.__setattr__(self, "field", field)
        a = _as_array(entries, field.p)
        a.setflags(write=False)
        object.__setattr__(self, "_a", a)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixFp is immutable")

    # construction helpers
    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> "MatrixFp":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "MatrixFp":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def block_diag(cls, field: PrimeField, blocks: Sequence["MatrixFp"]) -> "MatrixFp":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = np.zeros((rows, cols), dtype=np.int64)
        i = j = 0
        for b in blocks:
            out[i : i + b.rows, j : j + b.cols] = b.array
            i += b.rows
            j += b.cols
        return cls(field, out)

    # views
    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def p(self) -> int:
        return self.field.p

    def entry(self, i: int, j: int) -> int:
        return int(self._a[i, j])

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def __repr__(self) -> str:
        return f"MatrixFp(p={self.p}, {self.tolist()})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixFp)
            and self.p == other.p
            and self._a.shape == other._a.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __hash__(self) -> int:
        return hash((self.p, self._a.shape, self._a.tobytes()))

    # arithmetic
    def _check(self, other: "MatrixFp") -> None:
        if self.p != other.p:
            raise ValueError("mixed characteristics")

    def __add__(self, other: "MatrixFp") -> "MatrixFp":
        self._check(other)
        return MatrixFp(self.field, (self._a + other._a) % self.p)

    def __sub__(self, other: "MatrixFp") -> "MatrixFp":
        self._check(other)
        return MatrixFp(self.field, (self._a - other._a) % self.p)

    def __neg__(self) -> "MatrixFp":
        return MatrixFp(self.field, (-self._a) % self.p)

    def scale(self, a: int) -> "MatrixFp":
        return MatrixFp(self.field, (self._a * (a % self.p)) % self.p)

    def __matmul__(self, other: "MatrixFp") -> "MatrixFp":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self._a.shape} @ {other._a.shape}")
        return MatrixFp(self.field, _matmul(self._a, other._a, self.p))

    def transpose(self) -> "MatrixFp":
        return MatrixFp(self.field, self._a.T.copy())

    def is_zero(self) -> bool:
        return not self._a.any()

    # reductions
    def rank(self) -> int:
        return len(_rref(self._a, self.p)[1])

    def rref(self) -> "MatrixFp":
        return MatrixFp(self.field, _rref(self._a, self.p)[0])

    def pivot_columns(self) -> list[int]:
        return _rref(self._a, self.p)[1]

    def kernel_columns(self) -> list[tuple[int, ...]]:
        k = _kernel(self._a, self.p)
        return [tuple(int(v) for v in k[:, j]) for j in range(k.shape[1])]

    def pow(self, e: int) -> "MatrixFp":
        if self.rows != self.cols:
            raise ValueError("matrix power requires a square matrix")
        if e < 0:
            raise ValueError("exponent must be >= 0")
        out = np.eye(self.rows, dtype=np.int64)
        base = self._a
        while e:
            if e & 1:
                out = _matmul(out, base, self.p)
            e >>= 1
            if e:
                base = _matmul(base, base, self.p)
        return MatrixFp(self.field, out)

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant requires a square matrix")
        p = self.p
        a = self._a.copy()
        n = self.rows
        det = 1
        for j in range(n):
            nz = np.nonzero(a[j:, j])[0]
            if nz.size == 0:
                return 0
            piv = j + int(nz[0])
            if piv != j:
                a[[j, piv]] = a[[piv, j]]
                det = (-det) % p
            det = (det * int(a[j, j])) % p
            inv = pow(int(a[j, j]), p - 2, p)
            rest = a[j + 1 :, j]
            rows = np.nonzero(rest)[0]
            if rows.size:
                factors = (rest[rows] * inv) % p
                a[j + 1 + rows] = (a[j + 1 + rows] - np.outer(factors, a[j])) % p
        return det


# Operation-style entry points.

def mat_rank(a: MatrixFp) -> int:
    return a.rank()


def mat_kernel_basis(a: MatrixFp) -> list[tuple[int, ...]]:
    return a.kernel_columns()


def mat_pow(a: MatrixFp, e: int) -> MatrixFp:
    return a.pow(e)


def rref_canonical(a: MatrixFp) -> MatrixFp:
    return a.rref()
