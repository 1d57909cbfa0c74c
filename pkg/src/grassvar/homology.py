"""Minimal free resolutions and Ext dimensions over k[x1..xc]/(xi^p).

The algebra kE is local with radical generated by the images of the xi, so
minimal covers are read off from a basis of M / rad M.  A free cover F -> M
sends the generator t to a chosen basis vector, and the column of F recording
x^e . (generator t) is built by repeated application of the action matrices.
The kernel of the cover, in the monomial coordinates of F, is the first
syzygy; iterating yields the minimal resolution, whose ranks are the Betti
numbers.  Ext^i(M, N) is computed as cohomology of Hom(F_*, N), assembled
from the generator columns of each differential.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SyzygyLimitError
from .fp import MatrixFp, _kernel_free, _matmul, _rref
from .modules import KEModule, regular_module, validate

DEFAULT_COVER_CAP = 100_000


def _lowest_digit(e: int, p: int) -> int:
    i = 0
    while e % p == 0:
        e //= p
        i += 1
    return i


def _monomial_actions(actions: list[np.ndarray], p: int, c: int) -> np.ndarray:
    """Stack rho[e] = matrix of x^e acting on the module, e in base-p index order."""
    m = p**c
    n = actions[0].shape[0] if actions else 0
    rho = np.zeros((m, n, n), dtype=np.int64)
    rho[0] = np.eye(n, dtype=np.int64)
    for e in range(1, m):
        i = _lowest_digit(e, p)
        rho[e] = _matmul(actions[i], rho[e - p**i], p)
    return rho


def _generator_indices(arrays: list[np.ndarray], n: int, p: int) -> list[int]:
    """Coordinate indices whose basis vectors span a complement of rad M."""
    if n == 0:
        return []
    radical_rows = np.concatenate([a.T for a in arrays], axis=0)
    _, piv = _rref(radical_rows, p)
    pivset = set(piv)
    return [j for j in range(n) if j not in pivset]


@dataclass(frozen=True)
class ResolutionData:
    """A minimal free resolution of `module`, truncated at homological degree
    len(betti) - 1.

    betti[i] is the rank of the i-th free module.  syzygies[i] is the i-th
    syzygy module (syzygies[0] is the module itself).  gen_columns[i - 1]
    records the differential d_i on generators: column s holds the image of
    generator s of F_i in the monomial coordinates of F_{i-1}, an array of
    shape (betti[i-1] * p**c, betti[i]).  differentials, when kept, holds the
    full matrices of d_i in monomial coordinates on both sides.
    """

    module: KEModule
    betti: tuple[int, ...]
    syzygies: tuple[KEModule, ...]
    gen_columns: tuple[np.ndarray, ...]
    differentials: tuple[np.ndarray, ...] | None = None

    @property
    def depth(self) -> int:
        return len(self.betti) - 1


def resolve(
    M: KEModule,
    bound: int,
    keep_differentials: bool = False,
    cover_cap: int = DEFAULT_COVER_CAP,
) -> ResolutionData:
    """Minimal free resolution of M with Betti numbers through degree `bound`.

    Performs full syzygy steps up to degree bound - 1 and a final generator
    count at degree bound, so betti has bound + 1 entries and gen_columns has
    bound entries (the differentials d_1 .. d_bound on generators).
    """
    if bound < 0:
        raise ValueError("resolution bound must be nonnegative")
    problems = validate(M)
    if problems:
        raise ValueError("not a kE-module: " + "; ".join(problems))
    p, c = M.p, M.c
    reg = [a.array for a in regular_module(M.field, c).actions]
    m_alg = p**c

    betti: list[int] = []
    syzygies: list[KEModule] = [M]
    gen_columns: list[np.ndarray] = []
    differentials: list[np.ndarray] = []

    cur = [a.array for a in M.actions]
    cur_n = M.n
    prev_kernel: np.ndarray | None = None

    for i in range(bound + 1):
        gens = _generator_indices(cur, cur_n, p)
        b = len(gens)
        betti.append(b)
        if prev_kernel is not None:
            gen_columns.append(prev_kernel[:, gens])
        if i == bound:
            break

        ncols = b * m_alg
        if ncols > cover_cap:
            raise SyzygyLimitError(
                f"free cover needs {ncols} columns at degree {i}, "
                f"over the cap of {cover_cap}"
            )
        cover = np.zeros((cur_n, ncols), dtype=np.int64)
        for t, g in enumerate(gens):
            cover[g, t * m_alg] = 1
        for e in range(1, m_alg):
            j = _lowest_digit(e, p)
            cover[:, e::m_alg] = _matmul(cur[j], cover[:, e - p**j :: m_alg], p)
        if keep_differentials and prev_kernel is not None:
            differentials.append(_matmul(prev_kernel, cover, p))

        kernel, free = _kernel_free(cover, p)
        next_n = kernel.shape[1]
        next_actions = []
        for j in range(c):
            # kernel[free, :] is the identity, so the induced action on the
            # syzygy is just the free-row block of (x_j . kernel).
            moved = _matmul_stacked(reg[j], kernel, b, m_alg, p)
            next_actions.append(MatrixFp(M.field, moved[free, :]))
        syzygies.append(KEModule(M.field, c, next_n, tuple(next_actions)))
        prev_kernel = kernel
        cur = [a.array for a in next_actions]
        cur_n = next_n

    return ResolutionData(
        module=M,
        betti=tuple(betti),
        syzygies=tuple(syzygies),
        gen_columns=tuple(gen_columns),
        differentials=tuple(differentials) if keep_differentials else None,
    )


def _matmul_stacked(
    action: np.ndarray, kernel: np.ndarray, blocks: int, m_alg: int, p: int
) -> np.ndarray:
    """Apply a regular-representation action to every generator block of a
    kernel matrix of shape (blocks * m_alg, w)."""
    w = kernel.shape[1]
    if blocks == 0 or w == 0:
        return np.zeros_like(kernel)
    stacked = kernel.reshape(blocks, m_alg, w)
    out = (action[None, :, :] @ stacked) % p
    return out.reshape(blocks * m_alg, w)


def syzygy_step(M: KEModule) -> tuple[int, KEModule]:
    """One step of the minimal resolution: (number of generators, syzygy module)."""
    res = resolve(M, 1)
    return res.betti[0], res.syzygies[1]


def betti_numbers(M: KEModule, bound: int) -> list[int]:
    """Ranks of the free modules in the minimal resolution, degrees 0..bound."""
    return list(resolve(M, bound).betti)


@dataclass(frozen=True)
class ExtTable:
    """Dimensions of Ext^i(source, target) for i = 0..bound."""

    source: KEModule
    target: KEModule
    dims: tuple[int, ...]

    @property
    def bound(self) -> int:
        return len(self.dims) - 1

    def __iter__(self):
        return iter(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, i):
        return self.dims[i]


def ext_dims(
    M: KEModule,
    N: KEModule,
    bound: int,
    resolution: ResolutionData | None = None,
) -> ExtTable:
    """dim_k Ext^i(M, N) for i = 0..bound, via a minimal resolution of M.

    A precomputed resolution of M may be passed in; it must have been built
    with resolve(M, bound + 1) or deeper.
    """
    if bound < 0:
        raise ValueError("ext bound must be nonnegative")
    if M.field.p != N.field.p or M.c != N.c:
        raise ValueError("modules must share the same p and c")
    problems = validate(N)
    if problems:
        raise ValueError("target is not a kE-module: " + "; ".join(problems))
    p, c = M.p, M.c
    m_alg = p**c

    if M.n == 0 or N.n == 0:
        return ExtTable(M, N, tuple([0] * (bound + 1)))

    if resolution is None:
        resolution = resolve(M, bound + 1)
    else:
        if resolution.module != M:
            raise ValueError("resolution was built for a different module")
        if resolution.depth < bound + 1:
            raise ValueError(
                f"resolution depth {resolution.depth} is too shallow for "
                f"ext bound {bound}"
            )

    rho = _monomial_actions([a.array for a in N.actions], p, c)
    n_t = N.n

    ranks: list[int] = []
    for i in range(bound + 1):
        b_i = resolution.betti[i]
        b_next = resolution.betti[i + 1]
        if b_i == 0 or b_next == 0:
            ranks.append(0)
            continue
        gen_cols = resolution.gen_columns[i].reshape(b_i, m_alg, b_next)
        # Hom(F_i, N) -> Hom(F_{i+1}, N) sends (v_t) to the tuple whose s-th
        # entry is sum_t (sum_e alpha[t, e, s] rho[e]) v_t.
        cochain = np.tensordot(gen_cols, rho, axes=([1], [0]))
        mat = cochain.transpose(1, 2, 0, 3).reshape(b_next * n_t, b_i * n_t) % p
        ranks.append(len(_rref(mat, p)[1]))

    dims = []
    for i in range(bound + 1):
        d = resolution.betti[i] * n_t - ranks[i] - (ranks[i - 1] if i > 0 else 0)
        dims.append(d)
    return ExtTable(M, N, tuple(dims))


def ext_eventually_zero(
    M: KEModule,
    N: KEModule,
    window_bound: int | None = None,
    resolution: ResolutionData | None = None,
) -> bool:
    """Whether Ext^i(M, N) vanishes for all large i, decided on a finite window.

    Over kE the Ext dimensions are eventually given by a quasi-polynomial, so
    vanishing across the top half of a window of length 2 * p**c + 4 already
    certifies eventual vanishing.  A larger window may be requested; a smaller
    one is refused.
    """
    default = 2 * M.p**M.c + 4
    if window_bound is None:
        window_bound = default
    elif window_bound < default:
        raise ValueError(
            f"window bound {window_bound} is below the minimum {default}"
        )
    table = ext_dims(M, N, window_bound, resolution=resolution)
    top = table.dims[(window_bound + 1) // 2 :]
    return not any(top)
