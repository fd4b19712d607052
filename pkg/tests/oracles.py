"""Brute-force reference implementations used only by the tests."""

import itertools

import sympy

from stratakit.algebra import QuiverPresentation


def brute_words(pres: QuiverPresentation, max_len: int) -> list[tuple[str, ...]]:
    """Every allowed word (composition order) of length 1..max_len, by blind enumeration."""
    labels = [a.label for a in pres.arrows]
    rels = set(pres.relations)
    out = []
    for n in range(1, max_len + 1):
        for word in itertools.product(labels, repeat=n):
            ok = True
            for later, earlier in zip(word, word[1:]):
                if pres.arrow(earlier).target != pres.arrow(later).source or (later, earlier) in rels:
                    ok = False
                    break
            if ok:
                out.append(word)
    return out


def brute_cartan(pres: QuiverPresentation, max_len: int) -> list[list[int]]:
    idx = pres.vertex_index
    c = [[int(i == j) for j in range(len(pres.vertices))] for i in range(len(pres.vertices))]
    for w in brute_words(pres, max_len):
        c[idx[pres.arrow(w[0]).target]][idx[pres.arrow(w[-1]).source]] += 1
    return c


def to_sympy(m) -> sympy.Matrix:
    return sympy.Matrix(m.nrows, m.ncols, lambda r, c: sympy.Rational(m[r, c]))


def sympy_rank(m) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return to_sympy(m).rank()


def kron_hom_dim(M, N) -> int:
    """dim Hom(M, N) from the Kronecker-product form of the intertwining equations."""
    pres = M.presentation
    idx = pres.vertex_index
    sizes = [N.dims[i] * M.dims[i] for i in range(len(pres.vertices))]
    offs = [sum(sizes[:i]) for i in range(len(sizes))]
    total = sum(sizes)
    blocks = []
    for a in pres.arrows:
        i, j = idx[a.source], idx[a.target]
        Ma, Na = to_sympy(M.actions[a.label]), to_sympy(N.actions[a.label])
        rows = N.dims[i] * M.dims[j]
        if rows == 0:
            continue
        eq = sympy.zeros(rows, total)
        # column-major vec: vec(F Ma) = (Ma^T kron I) vec F, vec(Na G) = (I kron Na) vec G
        left = sympy.kronecker_product(Ma.T, sympy.eye(N.dims[i])) if sizes[i] else None
        right = sympy.kronecker_product(sympy.eye(M.dims[j]), Na) if sizes[j] else None
        if left is not None:
            eq[:, offs[i]:offs[i] + sizes[i]] += left
        if right is not None:
            eq[:, offs[j]:offs[j] + sizes[j]] -= right
        blocks.append(eq)
    if not blocks:
        return total
    system = sympy.Matrix.vstack(*blocks)
    return total - system.rank()
