"""Finite-dimensional modules over kE = F_p[x_1..x_c]/(x_1^p..x_c^p).

A module is c commuting n x n matrices X_i with X_i^p = 0, in column
convention: entry (i, j) of an action matrix is the coefficient of basis
vector i in the image of basis vector j.

The regular module uses the monomial basis x^e ordered by the base-p integer
sum(e_i * p^(i-1)), so for p=2, c=2 the basis reads (1, x1, x2, x1*x2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ResourceLimitError
from .fp import MatrixFp, PrimeField, _matmul, _rref

DEFAULT_DIM_CAP = 256


@dataclass(frozen=True)
class LinearForm:
    """A nonzero linear combination sum(coeffs[i] * x_{i+1}) of the generators."""

    field: PrimeField
    coeffs: tuple

    def __post_init__(self) -> None:
        norm = tuple(int(a) % self.field.p for a in self.coeffs)
        object.__setattr__(self, "coeffs", norm)
        if not norm or not any(norm):
            raise ValueError("linear form must be nonzero")

    @property
    def c(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        bits = []
        for i, a in enumerate(self.coeffs):
            if a == 1:
                bits.append(f"x{i + 1}")
            elif a:
                bits.append(f"{a}*x{i + 1}")
        return " + ".join(bits)


@dataclass(frozen=True)
class KEModule:
    """c commuting nilpotent actions of bounded order p on an n-dimensional space."""

    field: PrimeField
    c: int
    n: int
    actions: tuple

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError("need at least one algebra generator")
        if self.n < 0:
            raise ValueError("negative dimension")
        if len(self.actions) != self.c:
            raise ValueError(f"expected {self.c} action matrices, got {len(self.actions)}")
        for a in self.actions:
            if not isinstance(a, MatrixFp) or a.p != self.field.p:
                raise ValueError("action matrices must share the module's prime field")
            if a.rows != self.n or a.cols != self.n:
                raise ValueError(f"action matrices must be {self.n}x{self.n}")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def algebra_dim(self) -> int:
        return self.field.p ** self.c


def validate(M: KEModule) -> list[str]:
    """Violation report; empty means M is a genuine kE-module."""
    problems: list[str] = []
    p = M.p
    for i, a in enumerate(M.actions):
        if not a.pow(p).is_zero():
            problems.append(f"X{i + 1}^{p} != 0")
    for i in range(M.c):
        for j in range(i + 1, M.c):
            if M.actions[i] @ M.actions[j] != M.actions[j] @ M.actions[i]:
                problems.append(f"X{i + 1} and X{j + 1} do not commute")
    return problems


def zero_module(field: PrimeField, c: int) -> KEModule:
    z = MatrixFp.zeros(field, 0, 0)
    return KEModule(field, c, 0, tuple(z for _ in range(c)))


def _exponent_of_index(idx: int, p: int, c: int) -> tuple:
    out = []
    for _ in range(c):
        out.append(idx % p)
        idx //= p
    return tuple(out)


def regular_module(field: PrimeField, c: int, max_dim: int = DEFAULT_DIM_CAP) -> KEModule:
    """kE as a module over itself, on the monomial basis."""
    p = field.p
    n = p**c
    if n > max_dim:
        raise ResourceLimitError(
            f"regular module dimension {n} exceeds cap {max_dim}"
        )
    acts = []
    for i in range(c):
        step = p**i
        a = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            e = _exponent_of_index(j, p, c)
            if e[i] < p - 1:
                a[j + step, j] = 1
        acts.append(MatrixFp(field, a))
    return KEModule(field, c, n, tuple(acts))


def _coerce_form(field: PrimeField, c: int, form) -> LinearForm:
    if isinstance(form, LinearForm):
        if form.field != field or form.c != c:
            raise ValueError("linear form has wrong field or arity")
        return form
    return LinearForm(field, tuple(form))


def action_of(M: KEModule, u) -> MatrixFp:
    """The matrix of sum(u_i * X_i) acting on M."""
    u = _coerce_form(M.field, M.c, u)
    out = np.zeros((M.n, M.n), dtype=np.int64)
    for a, X in zip(u.coeffs, M.actions):
        if a:
            out = (out + a * X.array) % M.p
    return MatrixFp(M.field, out)


def quotient_by_linear_forms(
    field: PrimeField, c: int, forms: Sequence, max_dim: int = DEFAULT_DIM_CAP
) -> KEModule:
    """The cyclic module kE / (u_1, .., u_s) for independent linear forms u_j."""
    forms = [_coerce_form(field, c, f) for f in forms]
    if not forms:
        return regular_module(field, c, max_dim)
    p = field.p
    coeff_rows = np.array([f.coeffs for f in forms], dtype=np.int64)
    if len(_rref(coeff_rows, p)[1]) != len(forms):
        raise ValueError("linear forms are not independent")
    R = regular_module(field, c, max_dim)
    n = R.n
    # images of the forms under multiplication into the regular module
    seed = np.zeros((len(forms), n), dtype=np.int64)
    for r, f in enumerate(forms):
        for i, a in enumerate(f.coeffs):
            seed[r, p**i] = a
    # close the span under all actions
    span = seed
    rank = -1
    while True:
        red, piv = _rref(span, p)
        if len(piv) == rank:
            break
        rank = len(piv)
        basis = red[: len(piv)]
        images = [_matmul(X.array, basis.T, p).T for X in R.actions]
        span = np.concatenate([basis] + images, axis=0)
    sub = red[: len(piv)]
    piv_list = list(piv)
    quot_idx = [j for j in range(n) if j not in set(piv_list)]

    def reduce_cols(w: np.ndarray) -> np.ndarray:
        # canonical representatives: kill the pivot coordinates
        return (w - sub.T @ w[piv_list, :]) % p

    acts = []
    for X in R.actions:
        w = X.array[:, quot_idx]
        u = reduce_cols(w)
        acts.append(MatrixFp(field, u[quot_idx, :]))
    return KEModule(field, c, len(quot_idx), tuple(acts))


def direct_sum(M: KEModule, N: KEModule) -> KEModule:
    if M.field != N.field or M.c != N.c:
        raise ValueError("direct sum needs matching field and arity")
    acts = tuple(
        MatrixFp.block_diag(M.field, [a, b]) for a, b in zip(M.actions, N.actions)
    )
    return KEModule(M.field, M.c, M.n + N.n, acts)


def dual(M: KEModule) -> KEModule:
    """The linear dual with transposed actions.

    The algebra is symmetric, so this transpose model also computes the
    algebra-linear dual Hom(M, kE) up to isomorphism.
    """
    return KEModule(M.field, M.c, M.n, tuple(a.transpose() for a in M.actions))


def restrict_to_subspace(M: KEModule, basis: Sequence) -> KEModule:
    """View M over the rank-d subalgebra generated by the given independent forms."""
    forms = [_coerce_form(M.field, M.c, f) for f in basis]
    if not forms:
        raise ValueError("restriction needs at least one form")
    rows = np.array([f.coeffs for f in forms], dtype=np.int64)
    if len(_rref(rows, M.p)[1]) != len(forms):
        raise ValueError("restriction basis is not independent")
    acts = tuple(action_of(M, f) for f in forms)
    return KEModule(M.field, len(forms), M.n, acts)


def jordan_type(M: KEModule, u) -> tuple:
    """Jordan block sizes (descending) of the action of the linear form u."""
    U = action_of(M, u)
    p = M.p
    ranks = [M.n]
    power = MatrixFp.identity(M.field, M.n)
    for _ in range(p):
        power = power @ U
        ranks.append(power.rank())
    ranks.append(ranks[-1])
    parts: list[int] = []
    for size in range(p, 0, -1):
        mult = ranks[size - 1] - 2 * ranks[size] + ranks[size + 1]
        parts.extend([size] * mult)
    assert sum(parts) == M.n, "Jordan type bookkeeping failed (invalid module?)"
    return tuple(parts)


def is_free_over_line(M: KEModule, u) -> bool:
    """Whether M restricted to the subalgebra k[u] is free (all blocks of size p)."""
    if M.n % M.p:
        return False
    U = action_of(M, u)
    return U.pow(M.p - 1).rank() == M.n // M.p


# --- JSON-facing dict form ------------------------------------------------------

def module_to_dict(M: KEModule) -> dict:
    return {
        "p": M.p,
        "c": M.c,
        "dim": M.n,
        "actions": [a.tolist() for a in M.actions],
    }


def module_from_dict(d: dict) -> KEModule:
    if not isinstance(d, dict):
        raise ValueError("module document must be a JSON object")
    missing = {"p", "c", "dim", "actions"} - set(d)
    if missing:
        raise ValueError(f"module document missing keys: {sorted(missing)}")
    p, c, n = d["p"], d["c"], d["dim"]
    if not (isinstance(p, int) and isinstance(c, int) and isinstance(n, int)):
        raise ValueError("p, c and dim must be integers")
    field = PrimeField(p)
    acts = d["actions"]
    if not isinstance(acts, list) or len(acts) != c:
        raise ValueError(f"expected {c} action matrices")
    mats = []
    for a in acts:
        if (
            not isinstance(a, list)
            or len(a) != n
            or any(not isinstance(row, list) or len(row) != n for row in a)
            or any(not isinstance(v, int) for row in a for v in row)
        ):
            raise ValueError(f"action matrices must be {n}x{n} integer arrays")
        mats.append(MatrixFp(field, a))
    return KEModule(field, c, n, tuple(mats))
