"""Degenerate affine Hecke relations via flip operators on tensor space.

The ambient space is M x (C^n)^{x d} with M = (C^n)^{x m}.  The operator
Omega between two C^n factors is the flip of those factors (it equals
sum e_ij x e_ji); omega with the M slot sums the flips over all m subfactors.
x_j is the sum of omegas from everything to the left of appended factor j,
t_j flips appended factors j and j+1.  Everything is an exact integer matrix,
so the algebra relations are checked with == on numpy int64 arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np


@dataclass(frozen=True)
class TensorContext:
    n: int
    m: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.m < 0 or self.d < 1:
            raise ValueError("need n >= 1, m >= 0, d >= 1")

    @property
    def factors(self) -> int:
        return self.m + self.d

    @property
    def dim(self) -> int:
        return self.n ** self.factors

    def _digits(self, idx: int) -> List[int]:
        out = []
        for _ in range(self.factors):
            out.append(idx % self.n)
            idx //= self.n
        out.reverse()
        return out

    def _index(self, digits: List[int]) -> int:
        idx = 0
        for dgt in digits:
            idx = idx * self.n + dgt
        return idx


def flip(ctx: TensorContext, p: int, q: int) -> np.ndarray:
    """Permutation matrix swapping absolute tensor factors p and q (0-based)."""
    out = np.zeros((ctx.dim, ctx.dim), dtype=np.int64)
    for idx in range(ctx.dim):
        digits = ctx._digits(idx)
        digits[p], digits[q] = digits[q], digits[p]
        out[ctx._index(digits), idx] = 1
    return out


def omega_pair(ctx: TensorContext, s: int, j: int) -> np.ndarray:
    """The e_ij x e_ji sum between slot s and appended factor j.

    Slot s = 0 means the whole of M (sum of flips over its m subfactors);
    s >= 1 is the appended factor s.  Requires s < j.
    """
    if not (0 <= s < j <= ctx.d):
        raise IndexError("need 0 <= s < j <= d")
    col = ctx.m + j - 1
    if s == 0:
        out = np.zeros((ctx.dim, ctx.dim), dtype=np.int64)
        for u in range(ctx.m):
            out += flip(ctx, u, col)
        return out
    return flip(ctx, ctx.m + s - 1, col)


def x_op(ctx: TensorContext, j: int) -> np.ndarray:
    """x_j = sum of omega_pair(s, j) over all slots s to the left."""
    if not 1 <= j <= ctx.d:
        raise IndexError("j out of range")
    out = omega_pair(ctx, 0, j)
    for s in range(1, j):
        out = out + omega_pair(ctx, s, j)
    return out


def t_op(ctx: TensorContext, j: int) -> np.ndarray:
    """Flip of appended factors j and j+1."""
    if not 1 <= j <= ctx.d - 1:
        raise IndexError("j out of range")
    return flip(ctx, ctx.m + j - 1, ctx.m + j)


def gl_generator(ctx: TensorContext, a: int, b: int) -> np.ndarray:
    """Diagonal action of the matrix unit e_ab summed over every factor."""
    if not (1 <= a <= ctx.n and 1 <= b <= ctx.n):
        raise IndexError("matrix unit index out of range")
    out = np.zeros((ctx.dim, ctx.dim), dtype=np.int64)
    for u in range(ctx.factors):
        for idx in range(ctx.dim):
            digits = ctx._digits(idx)
            if digits[u] == b - 1:
                digits[u] = a - 1
                out[ctx._index(digits), idx] += 1
    return out


def verify_daha(ctx: TensorContext, perturb: bool = False) -> dict:
    """Check the degenerate affine Hecke relations as exact matrix identities.

    The cross relation is tested as x_{j+1} = t_j x_j t_j + eps*t_j for one
    global sign eps in {+1,-1}, uniform over all j.  With perturb=True the
    first x matrix gets a spurious +1 in its corner (negative control).
    """
    xs = {j: x_op(ctx, j) for j in range(1, ctx.d + 1)}
    if perturb:
        xs[1] = xs[1].copy()
        xs[1][0, 0] += 1
    ts = {j: t_op(ctx, j) for j in range(1, ctx.d)}
    ident = np.eye(ctx.dim, dtype=np.int64)
    relations = []
    ok = True

    def check(name: str, passed: bool):
        nonlocal ok
        relations.append({"name": name, "status": "pass" if passed else "fail"})
        ok = ok and passed

    for j, t in ts.items():
        check("t%d-involution" % j, np.array_equal(t @ t, ident))
    for j in range(1, ctx.d - 1):
        check("braid-%d" % j, np.array_equal(
            ts[j] @ ts[j + 1] @ ts[j], ts[j + 1] @ ts[j] @ ts[j + 1]))
    for i in ts:
        for j in ts:
            if j - i >= 2:
                check("t%d-t%d-commute" % (i, j),
                      np.array_equal(ts[i] @ ts[j], ts[j] @ ts[i]))
    for j in ts:
        for i in xs:
            if abs(i - j) > 1:
                check("t%d-x%d-commute" % (j, i),
                      np.array_equal(ts[j] @ xs[i], xs[i] @ ts[j]))
    for i in xs:
        for j in xs:
            if i < j:
                check("x%d-x%d-commute" % (i, j),
                      np.array_equal(xs[i] @ xs[j], xs[j] @ xs[i]))

    epsilon = None
    for eps in (1, -1):
        if all(np.array_equal(xs[j + 1], ts[j] @ xs[j] @ ts[j] + eps * ts[j])
               for j in range(1, ctx.d)):
            epsilon = eps
            break
    check("cross-relation", epsilon is not None or ctx.d < 2)

    report = {"n": ctx.n, "m": ctx.m, "d": ctx.d, "epsilon": epsilon,
              "relations": relations, "status": "pass" if ok else "fail"}
    return report


def casimir_compatibility(ctx: TensorContext) -> dict:
    """Check that x_d commutes with the diagonal gl_n action."""
    x = x_op(ctx, ctx.d)
    ok = True
    bad = None
    for a in range(1, ctx.n + 1):
        for b in range(1, ctx.n + 1):
            g = gl_generator(ctx, a, b)
            if not np.array_equal(x @ g, g @ x):
                ok = False
                bad = (a, b)
                break
        if not ok:
            break
    report = {"n": ctx.n, "m": ctx.m, "d": ctx.d,
              "status": "pass" if ok else "fail"}
    if bad:
        report["counterexample"] = {"matrix_unit": list(bad)}
    return report


def charpoly(mat: np.ndarray) -> List[int]:
    """Characteristic polynomial coefficients, leading first, exactly.

    Faddeev-LeVerrier over Fractions; asserts integer coefficients.
    """
    dim = mat.shape[0]
    a = [[Fraction(int(mat[r, c])) for c in range(dim)] for r in range(dim)]

    def matmul(x, y):
        return [[sum(x[r][t] * y[t][c] for t in range(dim)) for c in range(dim)]
                for r in range(dim)]

    coeffs = [Fraction(1)]
    m_cur = [row[:] for row in a]
    for k in range(1, dim + 1):
        if k > 1:
            shifted = [row[:] for row in m_cur]
            for r in range(dim):
                shifted[r][r] += coeffs[-1]
            m_cur = matmul(a, shifted)
        trace = sum(m_cur[r][r] for r in range(dim))
        coeffs.append(-trace / k)
    out = []
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    return out


def integer_roots(coeffs: List[int]) -> List[int]:
    """Factor a monic integer polynomial into linear factors over Z.

    Returns the full root list (with multiplicity); raises ValueError if
    any root is not an integer.
    """
    poly = list(coeffs)
    roots: List[int] = []
    while len(poly) > 1:
        const = poly[-1]
        if const == 0:
            roots.append(0)
            poly = poly[:-1]
            continue
        cands = set()
        for r in range(1, abs(const) + 1):
            if const % r == 0:
                cands.update((r, -r))
        hit = None
        for r in sorted(cands):
            val = 0
            for c in poly:
                val = val * r + c
            if val == 0:
                hit = r
                break
        if hit is None:
            raise ValueError("non-integer root")
        # synthetic division by (x - hit)
        new = []
        acc = 0
        for c in poly[:-1]:
            acc = acc * hit + c
            new.append(acc)
        roots.append(hit)
        poly = new
    return roots


def spectrum_is_integral(ctx: TensorContext, j: int = 1) -> Tuple[List[int], List[int]]:
    """Charpoly of x_j and its integer roots (raises if not integral)."""
    cp = charpoly(x_op(ctx, j))
    return cp, sorted(integer_roots(cp))
