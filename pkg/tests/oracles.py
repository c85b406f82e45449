"""Independent reference implementations used only by the tests.

Everything here evaluates the defining formulas pointwise, tuple by
tuple, without reusing the library's matrix assembly, so agreement is
evidence rather than tautology. Shared inputs are limited to structure
constants and action matrix entries, which are the data under test's
own ground truth.
"""

from fractions import Fraction
from itertools import combinations

from liecohom.lie_core import LieAlgebra


def sort_with_sign(args):
    """Bubble sort returning (sign, sorted list); sign of the permutation."""
    a = list(args)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(a) - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                sign = -sign
                changed = True
    return sign, a


def cochain_lookup(dim, module_dim, n, vec):
    """Wrap a flat degree-n cochain vector as a callable on index lists.

    The callable accepts arbitrary (possibly unsorted, possibly repeating)
    basis index lists and applies alternation itself.
    """
    tuples = list(combinations(range(dim), n))
    pos = {t: i for i, t in enumerate(tuples)}

    def phi(args):
        if len(set(args)) < len(args):
            return [Fraction(0)] * module_dim
        sign, ordered = sort_with_sign(args)
        base = pos[tuple(ordered)] * module_dim
        return [sign * Fraction(vec[base + m]) for m in range(module_dim)]

    return phi


def naive_d_apply(g: LieAlgebra, rep, n: int, vec):
    """Evaluate the Chevalley-Eilenberg differential of vec pointwise.

    (d phi)(e_0..e_n) = sum_i (-1)^i e_i . phi(.. e_i-hat ..)
                      + sum_{i<j} (-1)^{i+j} phi([e_i,e_j], .. hats ..)
    """
    md = rep.module_dim
    phi = cochain_lookup(g.dim, md, n, vec)
    out = []
    for T in combinations(range(g.dim), n + 1):
        acc = [Fraction(0)] * md
        for i, ei in enumerate(T):
            rest = list(T[:i] + T[i + 1:])
            val = phi(rest)
            s = Fraction((-1) ** i)
            for (r, c), x in rep.actions[ei].entries.items():
                if val[c]:
                    acc[r] += s * x * val[c]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                br = g.bracket_basis(T[i], T[j])
                if not br:
                    continue
                s = Fraction((-1) ** (i + j))
                rest = [T[t] for t in range(n + 1) if t not in (i, j)]
                for k, c in br.items():
                    val = phi([k] + rest)
                    for m in range(md):
                        if val[m]:
                            acc[m] += s * c * val[m]
        out.extend(acc)
    return out


def naive_cochain_action_apply(setup, v_ambient: int, n: int, vec):
    """Evaluate (v . omega)(a_1..a_n) pointwise for an ambient basis index v.

    (v . omega)(a_1..a_n) = rho(v) omega(a_1..a_n)
                          - sum_i omega(a_1, .., [v, a_i], .., a_n)
    """
    r = setup.radical_algebra
    md = setup.radical_module.module_dim
    amb = setup.ambient
    rad_pos = {amb_idx: loc for loc, amb_idx in enumerate(setup.radical)}
    phi = cochain_lookup(r.dim, md, n, vec)
    rho_v = setup.module.actions[v_ambient]
    out = []
    for T in combinations(range(r.dim), n):
        val = phi(list(T))
        acc = [Fraction(0)] * md
        for (row, col), x in rho_v.entries.items():
            if val[col]:
                acc[row] += x * val[col]
        for i, ai in enumerate(T):
            br = amb.bracket_basis(v_ambient, setup.radical[ai])
            for k, c in br.items():
                args = list(T)
                args[i] = rad_pos[k]
                w = phi(args)
                for m in range(md):
                    if w[m]:
                        acc[m] -= c * w[m]
        out.extend(acc)
    return out


def permute_algebra(g: LieAlgebra, perm):
    """Relabel basis vectors: old index i becomes perm[i]."""
    structure = {}
    for (i, j), row in g.structure.items():
        a, b = perm[i], perm[j]
        sign = 1
        if a > b:
            a, b = b, a
            sign = -1
        structure[(a, b)] = {perm[k]: sign * c for k, c in row.items()}
    labels = [""] * g.dim
    for i, lab in enumerate(g.labels):
        labels[perm[i]] = lab
    return LieAlgebra(labels, structure, name=(g.name or "g") + "-permuted")
