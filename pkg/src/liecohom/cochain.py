"""Cochain spaces and the Chevalley-Eilenberg differential.

C^n(r, M) is Hom of the n-th exterior power of r into M. A cochain is a
coordinate vector against the basis indexed by pairs (I, m): I a
strictly increasing n-tuple of r-basis indices in lexicographic order,
m a module coordinate; the flat index is tuple_index * module_dim + m.

The differential is

  (d phi)(e_0,...,e_n) = sum_i (-1)^i e_i . phi(..., omit i, ...)
      + sum_{i<j} (-1)^{i+j} phi([e_i, e_j], ..., omit i and j, ...)

with both sums over 0..n. Cocycles are ker d_n, coboundaries im d_{n-1},
cohomology the quotient.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .exact_linalg import (
    SparseMatrix,
    Subspace,
    column_space,
    kernel_basis,
    rat,
    rat_str,
)
from .lie_core import LieAlgebra
from .representations import Representation


def _check_pair(r: LieAlgebra, M: Representation):
    if M.algebra is not r and M.algebra != r:
        raise ValueError("module is not a representation of the given algebra")


def cochain_dim(r: LieAlgebra, M: Representation, n: int) -> int:
    """binomial(dim r, n) * module_dim; zero when n exceeds dim r."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _check_pair(r, M)
    return comb(r.dim, n) * M.module_dim


class CochainSpace:
    """Basis bookkeeping for C^n(r, M)."""

    __slots__ = ("algebra", "module", "degree", "_tuples", "_index")

    def __init__(self, r: LieAlgebra, M: Representation, n: int):
        if n < 0:
            raise ValueError("degree must be nonnegative")
        _check_pair(r, M)
        self.algebra = r
        self.module = M
        self.degree = n
        self._tuples = None
        self._index = None

    @property
    def tuples(self) -> list:
        if self._tuples is None:
            self._tuples = list(combinations(range(self.algebra.dim), self.degree))
        return self._tuples

    @property
    def dim(self) -> int:
        return len(self.tuples) * self.module.module_dim

    def index_of(self, I: Sequence[int], m: int) -> int:
        if self._index is None:
            self._index = {t: a for a, t in enumerate(self.tuples)}
        I = tuple(I)
        if I not in self._index:
            raise ValueError(f"{I} is not a strictly increasing basis tuple")
        if not 0 <= m < self.module.module_dim:
            raise ValueError("module coordinate out of range")
        return self._index[I] * self.module.module_dim + m

    def vector_of(self, assignments: dict) -> tuple:
        """Cochain from {(I, m): coefficient}; unlisted coordinates are zero."""
        vec = [Fraction(0)] * self.dim
        for (I, m), c in assignments.items():
            vec[self.index_of(I, m)] = Fraction(c)
        return tuple(vec)

    def serialize(self, vec: Sequence) -> str:
        """Sparse text form: [[ [i_1,...,i_n], m, "p/q" ], ...]."""
        if len(vec) != self.dim:
            raise ValueError("cochain vector has the wrong length")
        md = self.module.module_dim
        items = []
        for flat, x in enumerate(vec):
            x = Fraction(x)
            if x:
                I = self.tuples[flat // md]
                items.append([list(I), flat % md, rat_str(x)])
        return json.dumps(items)

    def parse(self, text: str) -> tuple:
        data = json.loads(text)
        vec = [Fraction(0)] * self.dim
        for I, m, c in data:
            vec[self.index_of(tuple(int(i) for i in I), int(m))] += rat(c)
        return tuple(vec)


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim_cochain: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    representatives: tuple

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "dim_cochain": self.dim_cochain,
            "dim_cocycles": self.dim_cocycles,
            "dim_coboundaries": self.dim_coboundaries,
            "dim_cohomology": self.dim_cohomology,
        }


def differential(r: LieAlgebra, M: Representation, n: int) -> SparseMatrix:
    """Matrix of d_n : C^n(r, M) -> C^{n+1}(r, M). Cached per module."""
    _check_pair(r, M)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    cached = M._dcache.get(n)
    if cached is not None:
        return cached
    md = M.module_dim
    tuples_out = list(combinations(range(r.dim), n + 1))
    idx_in = {t: a for a, t in enumerate(combinations(range(r.dim), n))}
    rows = comb(r.dim, n + 1) * md
    cols = comb(r.dim, n) * md
    ent: dict = {}

    def add(row, col, val):
        key = (row, col)
        nv = ent.get(key, Fraction(0)) + val
        if nv:
            ent[key] = nv
        else:
            ent.pop(key, None)

    for out_pos, J in enumerate(tuples_out):
        ro = out_pos * md
        for i in range(n + 1):
            K = J[:i] + J[i + 1:]
            co = idx_in[K] * md
            sign = -1 if i % 2 else 1
            for (mr, mc), v in M.actions[J[i]].entries.items():
                add(ro + mr, co + mc, sign * v)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                rest = J[:i] + J[i + 1:j] + J[j + 1:]
                for k, c in r.bracket_basis(J[i], J[j]).items():
                    if k in rest:
                        continue
                    pos = sum(1 for t in rest if t < k)
                    T = tuple(sorted(rest + (k,)))
                    s = c if (i + j + pos) % 2 == 0 else -c
                    co = idx_in[T] * md
                    for m in range(md):
                        add(ro + m, co + m, s)
    out = SparseMatrix(rows, cols, ent)
    M._dcache[n] = out
    return out


def _cocycle_space(r: LieAlgebra, M: Representation, n: int) -> Subspace:
    key = ("Z", n)
    if key not in M._dcache:
        M._dcache[key] = kernel_basis(differential(r, M, n))
    return M._dcache[key]


def _coboundary_space(r: LieAlgebra, M: Representation, n: int) -> Subspace:
    """Image of d_{n-1} inside C^n; the zero space when n = 0."""
    key = ("B", n)
    if key not in M._dcache:
        if n == 0:
            M._dcache[key] = Subspace.zero(cochain_dim(r, M, 0))
        else:
            M._dcache[key] = column_space(differential(r, M, n - 1))
    return M._dcache[key]


def _extend_echelon(base: Subspace, candidates: Subspace, want: int) -> tuple:
    """Reduce candidate vectors against an echelon set seeded from base;
    the survivors, fully reduced and normalized, are the representatives."""
    ambient = base.ambient_dim
    echelon = {}
    for pivot, vec in zip(base.pivots, base.basis):
        echelon[pivot] = list(vec)
    reps = []
    for cand in candidates.basis:
        vec = list(cand)
        c = 0
        while c < ambient:
            x = vec[c]
            if x:
                row = echelon.get(c)
                if row is None:
                    break
                for t in range(c, ambient):
                    if row[t]:
                        vec[t] -= x * row[t]
            c += 1
        if c == ambient:
            continue
        lead = vec[c]
        vec = [x / lead for x in vec]
        echelon[c] = vec
        reps.append(tuple(vec))
        if len(reps) == want:
            break
    return tuple(reps)


def cohomology(r: LieAlgebra, M: Representation, n: int) -> CohomologyResult:
    """Dimensions of Z^n, B^n, H^n plus representative cocycles.

    Representatives extend an echelon basis of the coboundaries by
    reduced kernel vectors taken in lexicographic coordinate order; they
    are empty exactly when the cohomology vanishes.
    """
    dim_c = cochain_dim(r, M, n)
    dn = differential(r, M, n)
    dim_z = dim_c - dn.rank()
    dim_b = 0 if n == 0 else differential(r, M, n - 1).rank()
    dim_h = dim_z - dim_b
    reps: tuple = ()
    if dim_h > 0:
        zspace = _cocycle_space(r, M, n)
        bspace = _coboundary_space(r, M, n)
        reps = _extend_echelon(bspace, zspace, dim_h)
        if len(reps) != dim_h:
            raise AssertionError("representative extension lost rank")
    return CohomologyResult(
        degree=n,
        dim_cochain=dim_c,
        dim_cocycles=dim_z,
        dim_coboundaries=dim_b,
        dim_cohomology=dim_h,
        representatives=reps,
    )


def is_cocycle(r: LieAlgebra, M: Representation, n: int, phi: Sequence) -> bool:
    dn = differential(r, M, n)
    if len(phi) != dn.cols:
        raise ValueError("cochain vector has the wrong length")
    return not any(dn.apply(phi))


def is_coboundary(r: LieAlgebra, M: Representation, n: int, phi: Sequence) -> bool:
    if len(phi) != cochain_dim(r, M, n):
        raise ValueError("cochain vector has the wrong length")
    return _coboundary_space(r, M, n).contains(phi)
