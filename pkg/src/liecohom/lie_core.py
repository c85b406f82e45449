"""Lie algebras by structure constants.

An algebra is stored as a basis plus the brackets [b_i, b_j] for i < j;
antisymmetry and [b_i, b_i] = 0 hold by construction. The Jacobi
identity is checked by validate, which reports the first failing triple
instead of raising.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .exact_linalg import SparseMatrix, Subspace, kernel_basis, rat, rat_str


@dataclass(frozen=True)
class JacobiViolation:
    """First basis triple (i < j < k) where the Jacobi sum is nonzero."""

    triple: Tuple[int, int, int]
    residual: tuple

    def __str__(self):
        i, j, k = self.triple
        res = "(" + ", ".join(rat_str(x) for x in self.residual) + ")"
        return f"Jacobi identity fails at basis triple ({i},{j},{k}), residual {res}"


class NotAnIdeal(Exception):
    """Raised by quotient when the subspace is not bracket-stable."""

    def __init__(self, generator_index: int, ideal_vector_index: int):
        self.witness = (generator_index, ideal_vector_index)
        super().__init__(
            f"[b_{generator_index}, ideal basis vector {ideal_vector_index}] "
            "falls outside the subspace"
        )


class NotASubalgebra(Exception):
    """Raised when a coordinate span is not closed under the bracket."""


class ActionNotDerivation(Exception):
    def __init__(self, generator_index: int, pair: Tuple[int, int]):
        self.witness = (generator_index, pair)
        super().__init__(
            f"action of generator {generator_index} violates Leibniz on pair {pair}"
        )


class ActionNotHomomorphism(Exception):
    def __init__(self, pair: Tuple[int, int]):
        self.witness = pair
        super().__init__(f"action does not respect the bracket of pair {pair}")


def _clean_structure(dim: int, structure) -> Dict[Tuple[int, int], Dict[int, Fraction]]:
    clean: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for (i, j), comps in structure.items():
        if not (0 <= i < j < dim):
            raise ValueError(f"structure key ({i},{j}) must satisfy 0 <= i < j < dim")
        row = {}
        for k, c in comps.items():
            if not 0 <= k < dim:
                raise ValueError(f"structure target {k} out of range")
            c = Fraction(c)
            if c:
                row[k] = c
        if row:
            clean[(i, j)] = row
    return clean


class LieAlgebra:
    """Finite-dimensional Lie algebra with a distinguished basis.

    structure maps (i, j) with i < j to {k: c} meaning
    [b_i, b_j] = sum c * b_k. Pairs absent from the map bracket to zero.
    """

    __slots__ = ("dim", "labels", "structure", "name")

    def __init__(self, labels: Sequence[str], structure, name: str = ""):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be distinct")
        self.dim = len(labels)
        self.labels = labels
        self.structure = _clean_structure(self.dim, structure)
        self.name = name

    def bracket_basis(self, i: int, j: int) -> Dict[int, Fraction]:
        """[b_i, b_j] as a sparse coordinate dict, any index order."""
        if i == j:
            return {}
        if i < j:
            return dict(self.structure.get((i, j), {}))
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        """Bilinear alternating extension of the basis brackets.

        Expands through the structure constants; u and v are coordinate
        vectors of length dim.
        """
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        u = [Fraction(x) for x in u]
        v = [Fraction(x) for x in v]
        out = [Fraction(0)] * self.dim
        for (i, j), comps in self.structure.items():
            coeff = u[i] * v[j] - u[j] * v[i]
            if coeff:
                for k, c in comps.items():
                    out[k] += coeff * c
        return tuple(out)

    def ad_matrix(self, i: int) -> SparseMatrix:
        """Matrix of ad_{b_i} : v -> [b_i, v] in the given basis."""
        ent = {}
        for j in range(self.dim):
            for k, c in self.bracket_basis(i, j).items():
                ent[(k, j)] = c
        return SparseMatrix(self.dim, self.dim, ent)

    def validate(self) -> Optional[JacobiViolation]:
        """None when Jacobi holds on all basis triples, else the first failure."""
        basis = [
            tuple(Fraction(int(i == t)) for t in range(self.dim))
            for i in range(self.dim)
        ]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, self.dim):
                    res = [Fraction(0)] * self.dim
                    for m, c in bij.items():
                        for t, d in self.bracket_basis(m, k).items():
                            res[t] += c * d
                    for m, c in self.bracket_basis(j, k).items():
                        for t, d in self.bracket_basis(m, i).items():
                            res[t] += c * d
                    for m, c in self.bracket_basis(k, i).items():
                        for t, d in self.bracket_basis(m, j).items():
                            res[t] += c * d
                    if any(res):
                        return JacobiViolation((i, j, k), tuple(res))
        return None

    def to_json_dict(self) -> dict:
        brackets = []
        for (i, j) in sorted(self.structure):
            comps = self.structure[(i, j)]
            brackets.append(
                {
                    "left": i,
                    "right": j,
                    "result": [[k, rat_str(comps[k])] for k in sorted(comps)],
                }
            )
        return {"name": self.name, "basis": list(self.labels), "brackets": brackets}

    @classmethod
    def from_json_dict(cls, data: dict) -> "LieAlgebra":
        try:
            labels = data["basis"]
            name = data.get("name", "")
            structure: dict = {}
            for item in data.get("brackets", []):
                i, j = int(item["left"]), int(item["right"])
                if i >= j:
                    raise ValueError(
                        f"bracket pair ({i},{j}) must have left < right"
                    )
                comps = {}
                for k, c in item["result"]:
                    comps[int(k)] = comps.get(int(k), Fraction(0)) + rat(c)
                if (i, j) in structure:
                    raise ValueError(f"duplicate bracket pair ({i},{j})")
                structure[(i, j)] = comps
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed algebra data: {exc}") from exc
        return cls(labels, structure, name=name)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.labels == other.labels
            and self.structure == other.structure
            and self.name == other.name
        )

    def __hash__(self):
        return hash((self.labels, self.name))

    def __repr__(self):
        return f"LieAlgebra({self.name or 'unnamed'}, dim={self.dim})"


def center(g: LieAlgebra) -> Subspace:
    """{v : [b_i, v] = 0 for all i}, the kernel of the stacked ad matrices."""
    ent = {}
    for i in range(g.dim):
        for (r, c), v in g.ad_matrix(i).entries.items():
            ent[(i * g.dim + r, c)] = v
    return kernel_basis(SparseMatrix(g.dim * g.dim, g.dim, ent))


def _leibniz_system(g: LieAlgebra) -> SparseMatrix:
    """Linear system on flattened dim x dim matrices D (entry (r,c) at r*dim+c)
    expressing D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j] for all i < j."""
    dim = g.dim
    pairs = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    ent: dict = {}

    def add(row, col, val):
        key = (row, col)
        nv = ent.get(key, Fraction(0)) + val
        if nv:
            ent[key] = nv
        else:
            ent.pop(key, None)

    for p, (i, j) in enumerate(pairs):
        base = p * dim
        for m, c in g.bracket_basis(i, j).items():
            for k in range(dim):
                add(base + k, k * dim + m, c)
        for m in range(dim):
            for k, c in g.bracket_basis(m, j).items():
                add(base + k, m * dim + i, -c)
            for k, c in g.bracket_basis(i, m).items():
                add(base + k, m * dim + j, -c)
    return SparseMatrix(len(pairs) * dim, dim * dim, ent)


def derivation_space(g: LieAlgebra) -> Subspace:
    """All derivations as flattened matrices, canonical basis."""
    return kernel_basis(_leibniz_system(g))


def derivations(g: LieAlgebra) -> list:
    """Basis of the derivation algebra, as matrices."""
    dim = g.dim
    out = []
    for vec in derivation_space(g).basis:
        ent = {}
        for idx, v in enumerate(vec):
            if v:
                ent[(idx // dim, idx % dim)] = v
        out.append(SparseMatrix(dim, dim, ent))
    return out


def inner_derivations(g: LieAlgebra) -> Subspace:
    """Span of the ad matrices, flattened; dim = dim(g) - dim center(g)."""
    vectors = []
    for i in range(g.dim):
        m = g.ad_matrix(i)
        vec = [Fraction(0)] * (g.dim * g.dim)
        for (r, c), v in m.entries.items():
            vec[r * g.dim + c] = v
        vectors.append(vec)
    return Subspace.from_vectors(g.dim * g.dim, vectors)


def subalgebra_on_indices(g: LieAlgebra, indices: Sequence[int]) -> LieAlgebra:
    """The subalgebra spanned by the listed basis vectors, with induced bracket.

    Raises NotASubalgebra when some [b_p, b_q] leaves the span.
    """
    indices = tuple(sorted(set(int(i) for i in indices)))
    if indices and not (0 <= indices[0] and indices[-1] < g.dim):
        raise ValueError("subalgebra index out of range")
    pos = {p: a for a, p in enumerate(indices)}
    structure: dict = {}
    for a, p in enumerate(indices):
        for b in range(a + 1, len(indices)):
            q = indices[b]
            comps = {}
            for k, c in g.bracket_basis(p, q).items():
                if k not in pos:
                    raise NotASubalgebra(
                        f"[{g.labels[p]}, {g.labels[q]}] leaves the span of "
                        f"indices {indices}"
                    )
                comps[pos[k]] = c
            if comps:
                structure[(a, b)] = comps
    return LieAlgebra(
        [g.labels[p] for p in indices], structure, name=f"{g.name}|{indices}"
    )


def quotient(g: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """g modulo a bracket-stable subspace.

    The complement basis is the set of basis vectors of g away from the
    echelon pivots of the ideal, so labels of survivors are preserved.
    """
    if ideal.ambient_dim != g.dim:
        raise ValueError("ideal lives in the wrong ambient space")
    for w_idx, w in enumerate(ideal.basis):
        for i in range(g.dim):
            ei = [Fraction(int(t == i)) for t in range(g.dim)]
            if not ideal.contains(g.bracket(ei, w)):
                raise NotAnIdeal(i, w_idx)
    pivots = set(ideal.pivots)
    comp = [i for i in range(g.dim) if i not in pivots]
    cpos = {p: a for a, p in enumerate(comp)}

    def reduce(vec):
        vec = list(vec)
        for p, bvec in zip(ideal.pivots, ideal.basis):
            coeff = vec[p]
            if coeff:
                for t, x in enumerate(bvec):
                    if x:
                        vec[t] -= coeff * x
        return vec

    structure: dict = {}
    for a, p in enumerate(comp):
        for b in range(a + 1, len(comp)):
            q = comp[b]
            w = reduce(_basis_bracket_vector(g, p, q))
            comps = {}
            for t, x in enumerate(w):
                if x:
                    comps[cpos[t]] = x
            if comps:
                structure[(a, b)] = comps
    out = LieAlgebra(
        [g.labels[p] for p in comp], structure, name=f"{g.name}/ideal" if g.name else ""
    )
    bad = out.validate()
    if bad is not None:
        raise ValueError(f"quotient produced a non-Lie table: {bad}")
    return out


def _basis_bracket_vector(g: LieAlgebra, i: int, j: int) -> list:
    vec = [Fraction(0)] * g.dim
    for k, c in g.bracket_basis(i, j).items():
        vec[k] = c
    return vec


def semidirect(s: LieAlgebra, r: LieAlgebra, action: Sequence[SparseMatrix]) -> LieAlgebra:
    """Semidirect sum s acting on the ideal r.

    action[i] is the matrix by which s basis element i acts on r. Each
    must be a derivation of r and the assignment must respect the
    bracket of s; violations raise with a witness.
    """
    if len(action) != s.dim:
        raise ValueError("need one action matrix per basis element of s")
    for i, A in enumerate(action):
        if (A.rows, A.cols) != (r.dim, r.dim):
            raise ValueError(f"action matrix {i} has the wrong shape")
    basis_r = [
        tuple(Fraction(int(a == t)) for t in range(r.dim)) for a in range(r.dim)
    ]
    for i, A in enumerate(action):
        cols = [A.apply(basis_r[a]) for a in range(r.dim)]
        for a in range(r.dim):
            for b in range(a + 1, r.dim):
                left = A.apply(r.bracket(basis_r[a], basis_r[b]))
                right = [
                    x + y
                    for x, y in zip(
                        r.bracket(cols[a], basis_r[b]), r.bracket(basis_r[a], cols[b])
                    )
                ]
                if list(left) != right:
                    raise ActionNotDerivation(i, (a, b))
    for i in range(s.dim):
        for j in range(i + 1, s.dim):
            lhs = SparseMatrix.zero(r.dim, r.dim)
            for k, c in s.bracket_basis(i, j).items():
                lhs = lhs + action[k].scale(c)
            rhs = action[i] @ action[j] - action[j] @ action[i]
            if lhs != rhs:
                raise ActionNotHomomorphism((i, j))
    ds = s.dim
    structure: dict = {}
    for (i, j), comps in s.structure.items():
        structure[(i, j)] = dict(comps)
    for (a, b), comps in r.structure.items():
        structure[(ds + a, ds + b)] = {ds + k: c for k, c in comps.items()}
    for i, A in enumerate(action):
        for (k, a), c in A.entries.items():
            structure.setdefault((i, ds + a), {})[ds + k] = c
    out = LieAlgebra(
        list(s.labels) + list(r.labels),
        structure,
        name=f"{s.name}|x{r.name}" if s.name and r.name else "",
    )
    bad = out.validate()
    if bad is not None:
        raise ValueError(f"semidirect table violates Jacobi: {bad}")
    return out
