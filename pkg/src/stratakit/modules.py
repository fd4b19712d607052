"""Finite-dimensional right modules over a quiver presentation.

A representation ``M`` stores one vector space ``M_i`` per vertex and, for an
arrow ``alpha: i -> j``, the matrix of ``m |-> m * alpha`` as a map
``M_j -> M_i``.  A path ``u = (u_1, ..., u_l)`` in composition order acts as
``m * u_1 * ... * u_l``, so ``u_1``'s matrix is applied first.  A relation
``(later, earlier)`` therefore demands ``M_earlier @ M_later == 0``.

With this convention the projective ``e_i A`` has ``(e_i A)_j`` spanned by the
allowed paths ``j -> i``, and ``dim Hom(e_i A, M) = dim M_i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Mapping, Sequence

from .algebra import Path, QuiverPresentation, enumerate_paths, multiply
from .errors import DomainError, MoreThanTwoVertices
from .families import build_B
from .linalg import RationalMatrix, SparseVector, _rref, block_diagonal

# vector helpers ------------------------------------------------------------


def _axpy(acc: dict, coeff, vec: Mapping[int, object]) -> None:
    for k, v in vec.items():
        nv = acc.get(k, 0) + coeff * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class Subspace:
    """A subspace of ``Q^n`` held in reduced echelon form.

    Each basis vector has a 1 at its own pivot coordinate and 0 at every other
    pivot, so the coordinates of a member are its entries at the pivots.
    """

    def __init__(self, ambient: int, vectors: Iterable[Mapping[int, object]] = ()):
        self.ambient = ambient
        pivots, order = _rref(vectors)
        self.pivots = order
        self.basis = [pivots[p] for p in order]
        self.position = {p: k for k, p in enumerate(order)}
        self.complement = [k for k in range(ambient) if k not in self.position]
        self.complement_position = {c: k for k, c in enumerate(self.complement)}

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Mapping[int, object]) -> SparseVector:
        # basis vectors vanish at the other pivots, so only the pivots already
        # present in vec need clearing
        out = {k: v for k, v in vec.items() if v}
        for p in [p for p in out if p in self.position]:
            _axpy(out, -out[p], self.basis[self.position[p]])
        return out

    def contains(self, vec: Mapping[int, object]) -> bool:
        return not self.reduce(vec)

    def coords(self, vec: Mapping[int, object]) -> SparseVector:
        """Coordinates of a member of the subspace in the echelon basis."""
        return {self.position[p]: v for p, v in vec.items() if v and p in self.position}

    def quotient_coords(self, vec: Mapping[int, object]) -> SparseVector:
        """Image in ``Q^n / self``, written on the standard complement basis."""
        cpos = self.complement_position
        return {cpos[c]: v for c, v in self.reduce(vec).items()}


def _standard(k: int) -> SparseVector:
    return {k: 1}


# representations -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Representation:
    """Right module: per-vertex dimensions and one action matrix per arrow.

    ``labels`` optionally names the basis of each vertex space (for example
    ``(summand, path)`` pairs in a projective), and ``summands`` lists the
    vertex of each indecomposable projective summand when the module was
    built as a sum of projectives.
    """

    presentation: QuiverPresentation
    dims: tuple[int, ...]
    actions: Mapping[str, RationalMatrix]
    labels: tuple[tuple[Hashable, ...], ...] | None = None
    summands: tuple[str, ...] | None = None

    def __post_init__(self):
        pres = self.presentation
        if len(self.dims) != len(pres.vertices):
            raise ValueError("one dimension per vertex is required")
        for a in pres.arrows:
            shape = (self.dim_at(a.source), self.dim_at(a.target))
            if self.actions[a.label].shape != shape:
                raise ValueError(f"action of {a.label} has shape {self.actions[a.label].shape}, expected {shape}")
        for later, earlier in pres.relation_set:
            if not (self.actions[earlier] @ self.actions[later]).is_zero():
                raise ValueError(f"relation {later}*{earlier} does not act as zero")

    def dim_at(self, vertex: str) -> int:
        return self.dims[self.presentation.vertex_index[vertex]]

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.dimension == 0

    def dimension_vector(self) -> dict[str, int]:
        return dict(zip(self.presentation.vertices, self.dims))

    def act(self, path: Path, vec: Mapping[int, object]) -> SparseVector:
        """``m * path`` for ``m`` in the target space of ``path``."""
        out = dict(vec)
        for label in path.arrows:
            out = self.actions[label].apply(out)
        return out

    def path_action(self, path: Path) -> RationalMatrix:
        cache = self.__dict__.setdefault("_path_cache", {})
        if path not in cache:
            mat = RationalMatrix.identity(self.dim_at(path.target))
            for label in path.arrows:
                mat = self.actions[label] @ mat
            cache[path] = mat
        return cache[path]


def zero_rep(presentation: QuiverPresentation) -> Representation:
    return Representation(
        presentation,
        (0,) * len(presentation.vertices),
        {a.label: RationalMatrix.zeros(0, 0) for a in presentation.arrows},
    )


@lru_cache(maxsize=64)
def _paths_by_target(presentation: QuiverPresentation) -> dict[tuple[str, str], list[Path]]:
    out: dict[tuple[str, str], list[Path]] = {}
    for p in enumerate_paths(presentation):
        out.setdefault((p.source, p.target), []).append(p)
    return out


@lru_cache(maxsize=256)
def _indecomposable_projective(presentation: QuiverPresentation, vertex: str):
    """Per-vertex path bases and arrow matrices of ``e_vertex A`` (shared, never mutated)."""
    between = _paths_by_target(presentation)
    paths = tuple(tuple(between.get((j, vertex), ())) for j in presentation.vertices)
    index = [{u: k for k, u in enumerate(ps)} for ps in paths]
    vidx = presentation.vertex_index
    actions = {}
    for a in presentation.arrows:
        arrow_path = Path((a.label,), a.source, a.target, a.degree)
        src, tgt = vidx[a.source], vidx[a.target]
        entries = []
        for col, u in enumerate(paths[tgt]):
            prod = multiply(presentation, u, arrow_path)
            if prod is not None:
                entries.append((index[src][prod], col, 1))
        actions[a.label] = RationalMatrix.from_entries(len(paths[src]), len(paths[tgt]), entries)
    return paths, actions


def projective_sum(presentation: QuiverPresentation, summands: Sequence[str]) -> Representation:
    """``e_{v_1} A + ... + e_{v_r} A``; basis of vertex ``j`` is ``(g, path j -> v_g)``."""
    parts = [_indecomposable_projective(presentation, v) for v in summands]
    labels = tuple(
        tuple((g, u) for g, (paths, _) in enumerate(parts) for u in paths[j])
        for j in range(len(presentation.vertices))
    )
    vidx = presentation.vertex_index
    actions = {}
    for a in presentation.arrows:
        if len(parts) == 1:
            actions[a.label] = parts[0][1][a.label]
        elif parts:
            actions[a.label] = block_diagonal([acts[a.label] for _, acts in parts])
        else:
            actions[a.label] = RationalMatrix.zeros(0, 0)
    dims = tuple(len(l) for l in labels)
    return Representation(presentation, dims, actions, labels, tuple(summands))


def projective_rep(presentation: QuiverPresentation, vertex: str) -> Representation:
    if vertex not in presentation.vertex_index:
        raise KeyError(vertex)
    return projective_sum(presentation, [vertex])


def regular_rep(presentation: QuiverPresentation) -> Representation:
    return projective_sum(presentation, presentation.vertices)


def simple_rep(presentation: QuiverPresentation, vertex: str) -> Representation:
    k = presentation.vertex_index[vertex]
    dims = tuple(int(i == k) for i in range(len(presentation.vertices)))
    return Representation(
        presentation,
        dims,
        {a.label: RationalMatrix.zeros(dims[presentation.vertex_index[a.source]], dims[presentation.vertex_index[a.target]]) for a in presentation.arrows},
    )


def direct_sum(*modules: Representation) -> Representation:
    if not modules:
        raise ValueError("direct_sum needs at least one module")
    pres = modules[0].presentation
    dims = tuple(map(sum, zip(*(m.dims for m in modules))))
    actions = {a.label: block_diagonal([m.actions[a.label] for m in modules]) for a in pres.arrows}
    return Representation(pres, dims, actions)


# module maps ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """``f: M -> N`` given by one matrix ``f_i: M_i -> N_i`` per vertex."""

    source: Representation
    target: Representation
    blocks: tuple[RationalMatrix, ...]

    def __post_init__(self):
        for i, b in enumerate(self.blocks):
            if b.shape != (self.target.dims[i], self.source.dims[i]):
                raise ValueError(f"block {i} has shape {b.shape}")

    def is_homomorphism(self) -> bool:
        vidx = self.source.presentation.vertex_index
        for a in self.source.presentation.arrows:
            i, j = vidx[a.source], vidx[a.target]
            lhs = self.blocks[i] @ self.source.actions[a.label]
            rhs = self.target.actions[a.label] @ self.blocks[j]
            if lhs != rhs:
                return False
        return True

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(other.source, self.target, tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def rank(self) -> int:
        return sum(b.rank() for b in self.blocks)

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def is_surjective(self) -> bool:
        return all(b.rank() == b.nrows for b in self.blocks)

    def is_injective(self) -> bool:
        return all(b.rank() == b.ncols for b in self.blocks)


def identity_map(module: Representation) -> ModuleMap:
    return ModuleMap(module, module, tuple(RationalMatrix.identity(d) for d in module.dims))


def map_from_generators(P: Representation, M: Representation, images: Sequence[Mapping[int, object]]) -> ModuleMap:
    """The map from a sum of projectives sending generator ``g`` to ``images[g]``.

    ``images[g]`` must lie in ``M`` at the vertex of summand ``g``; the basis
    element ``(g, u)`` of ``P`` goes to ``images[g] * u``.
    """
    if P.summands is None or P.labels is None:
        raise ValueError("source must be built by projective_sum")
    if len(images) != len(P.summands):
        raise ValueError("one image per summand is required")
    blocks = []
    for i, labs in enumerate(P.labels):
        cols = [M.act(u, images[g]) for g, u in labs]
        blocks.append(RationalMatrix.from_columns(M.dims[i], cols))
    return ModuleMap(P, M, tuple(blocks))


# submodules and quotients --------------------------------------------------------------


def _check_spans(M: Representation, spans: Sequence[Subspace]) -> None:
    vidx = M.presentation.vertex_index
    for a in M.presentation.arrows:
        i, j = vidx[a.source], vidx[a.target]
        for b in spans[j].basis:
            if not spans[i].contains(M.actions[a.label].apply(b)):
                raise ValueError("subspaces are not closed under the arrow actions")


def submodule(M: Representation, spans: Sequence[Subspace], *, check: bool = True) -> tuple[Representation, ModuleMap]:
    """The submodule with the given per-vertex subspaces, and its inclusion."""
    if check:
        _check_spans(M, spans)
    vidx = M.presentation.vertex_index
    actions = {}
    for a in M.presentation.arrows:
        i, j = vidx[a.source], vidx[a.target]
        cols = [spans[i].coords(M.actions[a.label].apply(b)) for b in spans[j].basis]
        actions[a.label] = RationalMatrix.from_columns(spans[i].dim, cols)
    sub = Representation(M.presentation, tuple(s.dim for s in spans), actions)
    inc = ModuleMap(sub, M, tuple(RationalMatrix.from_columns(M.dims[i], s.basis) for i, s in enumerate(spans)))
    return sub, inc


def quotient(M: Representation, spans: Sequence[Subspace]) -> tuple[Representation, ModuleMap]:
    """``M`` modulo a submodule, on the standard complement basis, and the projection."""
    _check_spans(M, spans)
    vidx = M.presentation.vertex_index
    actions = {}
    for a in M.presentation.arrows:
        i, j = vidx[a.source], vidx[a.target]
        cols = [spans[i].quotient_coords(M.actions[a.label].apply(_standard(c))) for c in spans[j].complement]
        actions[a.label] = RationalMatrix.from_columns(len(spans[i].complement), cols)
    labels = None
    if M.labels is not None:
        labels = tuple(tuple(M.labels[i][c] for c in s.complement) for i, s in enumerate(spans))
    quo = Representation(M.presentation, tuple(len(s.complement) for s in spans), actions, labels)
    proj = []
    for i, s in enumerate(spans):
        cols = [s.quotient_coords(_standard(c)) for c in range(M.dims[i])]
        proj.append(RationalMatrix.from_columns(len(s.complement), cols))
    return quo, ModuleMap(M, quo, tuple(proj))


def kernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    spans = [Subspace(f.source.dims[i], b.nullspace()) for i, b in enumerate(f.blocks)]
    return submodule(f.source, spans, check=False)  # a kernel is always closed


def image_spans(f: ModuleMap) -> list[Subspace]:
    return [Subspace(f.target.dims[i], b.columns()) for i, b in enumerate(f.blocks)]


def cokernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    return quotient(f.target, image_spans(f))


# radical, top, socle -----------------------------------------------------------------


def radical_spans(M: Representation) -> list[Subspace]:
    """``rad(M)_i`` is the sum of the images of all arrows leaving ``i``."""
    pres = M.presentation
    vectors: list[list[SparseVector]] = [[] for _ in pres.vertices]
    for a in pres.arrows:
        vectors[pres.vertex_index[a.source]].extend(M.actions[a.label].columns())
    return [Subspace(d, vecs) for d, vecs in zip(M.dims, vectors)]


def socle_spans(M: Representation) -> list[Subspace]:
    """``soc(M)_i`` is the joint kernel of all arrows entering ``i``."""
    pres = M.presentation
    stacks: list[list[RationalMatrix]] = [[] for _ in pres.vertices]
    for a in pres.arrows:
        stacks[pres.vertex_index[a.target]].append(M.actions[a.label])
    spans = []
    for d, mats in zip(M.dims, stacks):
        rows = [row for m in mats for row in m.rows.values()]
        system = RationalMatrix(len(rows), d, dict(enumerate(rows)))
        spans.append(Subspace(d, system.nullspace()))
    return spans


def radical(M: Representation) -> tuple[Representation, ModuleMap]:
    return submodule(M, radical_spans(M))


def top(M: Representation) -> tuple[Representation, ModuleMap]:
    return quotient(M, radical_spans(M))


def socle(M: Representation) -> tuple[Representation, ModuleMap]:
    return submodule(M, socle_spans(M))


def is_semisimple(M: Representation) -> bool:
    return all(s.dim == 0 for s in radical_spans(M))


# Hom -------------------------------------------------------------------------------


@dataclass(frozen=True)
class HomSpace:
    dimension: int
    basis: tuple[ModuleMap, ...]


def hom_space(M: Representation, N: Representation) -> HomSpace:
    """Solve ``f_i @ M_alpha == N_alpha @ f_j`` for every arrow ``alpha: i -> j``."""
    pres = M.presentation
    vidx = pres.vertex_index
    offsets, n = [], 0
    for i in range(len(pres.vertices)):
        offsets.append(n)
        n += N.dims[i] * M.dims[i]

    def var(i: int, r: int, c: int) -> int:
        return offsets[i] + r * M.dims[i] + c

    eqs: list[dict[int, object]] = []
    for a in pres.arrows:
        i, j = vidx[a.source], vidx[a.target]
        Ma, Na = M.actions[a.label], N.actions[a.label]
        Ma_cols = Ma.columns()
        Na_rows = Na.rows
        for r in range(N.dims[i]):
            for c in range(M.dims[j]):
                eq: dict[int, object] = {}
                # (f_i @ M_a)[r, c] = sum_k f_i[r, k] M_a[k, c]
                for k, v in Ma_cols[c].items():
                    _axpy(eq, v, {var(i, r, k): 1})
                # (N_a @ f_j)[r, c] = sum_k N_a[r, k] f_j[k, c]
                for k, v in Na_rows.get(r, {}).items():
                    _axpy(eq, -v, {var(j, k, c): 1})
                if eq:
                    eqs.append(eq)
    system = RationalMatrix(len(eqs), n, dict(enumerate(eqs)))
    basis = []
    for vec in system.nullspace():
        blocks = []
        for i in range(len(pres.vertices)):
            entries = []
            for r in range(N.dims[i]):
                for c in range(M.dims[i]):
                    v = vec.get(var(i, r, c))
                    if v:
                        entries.append((r, c, v))
            blocks.append(RationalMatrix.from_entries(N.dims[i], M.dims[i], entries))
        basis.append(ModuleMap(M, N, tuple(blocks)))
    return HomSpace(len(basis), tuple(basis))


# projective covers and resolutions -------------------------------------------------------


def projective_cover(M: Representation) -> tuple[Representation, ModuleMap]:
    """Cover by one projective per top basis vector.

    The generators are the standard basis vectors of ``M_i`` at the non-pivot
    coordinates of the radical, which span a complement of ``rad(M)_i``.
    """
    pres = M.presentation
    summands, images = [], []
    for v, span in zip(pres.vertices, radical_spans(M)):
        for c in span.complement:
            summands.append(v)
            images.append(_standard(c))
    P = projective_sum(pres, summands)
    return P, map_from_generators(P, M, images)


@dataclass(frozen=True, eq=False)
class Resolution:
    """``... -> P_1 -> P_0 -> M -> 0``; ``differentials[k]`` maps ``P_{k+1} -> P_k``."""

    module: Representation
    projectives: tuple[Representation, ...]
    differentials: tuple[ModuleMap, ...]
    augmentation: ModuleMap
    complete: bool  # the last syzygy computed was zero

    @property
    def length(self) -> int:
        """Index of the last non-zero term (``-1`` for the zero module)."""
        nonzero = [k for k, P in enumerate(self.projectives) if not P.is_zero]
        return nonzero[-1] if nonzero else -1

    def multiplicities(self, k: int) -> Counter:
        return Counter(self.projectives[k].summands)

    def is_exact(self) -> bool:
        """Ranks certify exactness at ``M`` and at every ``P_k`` below the top term."""
        maps = [self.augmentation] + list(self.differentials)
        if not self.augmentation.is_surjective():
            return False
        for k in range(len(self.differentials)):
            out, inc = maps[k], maps[k + 1]
            if not (out @ inc).is_zero():
                return False
            if inc.rank() + out.rank() != self.projectives[k].dimension:
                return False
        if self.complete:
            last = maps[len(self.differentials)]
            return last.is_injective()
        return True


def min_resolution(M: Representation, length: int) -> Resolution:
    """Minimal projective resolution computed through ``P_length`` (or until it stops)."""
    if length < 0:
        raise DomainError("resolution length must be non-negative")
    P0, aug = projective_cover(M)
    projectives, diffs = [P0], []
    prev = aug
    complete = False
    for _ in range(length):
        K, inc = kernel(prev)
        if K.is_zero:
            complete = True
            break
        P, cover = projective_cover(K)
        d = inc @ cover
        projectives.append(P)
        diffs.append(d)
        prev = d
    else:
        complete = kernel(prev)[0].is_zero
    return Resolution(M, tuple(projectives), tuple(diffs), aug, complete)


def projective_dimension(M: Representation, limit: int) -> int | None:
    """Projective dimension if at most ``limit``, else None."""
    res = min_resolution(M, limit)
    return res.length if res.complete else None


def _hom_from_projective_matrix(P_from: Representation, P_to: Representation, d: ModuleMap, N: Representation) -> RationalMatrix:
    """Matrix of ``phi |-> phi @ d`` on ``Hom(P_to, N) -> Hom(P_from, N)``.

    ``Hom(P, N)`` for ``P = sum e_{v_g} A`` is coordinatised by the images of
    the generators, i.e. by ``sum_g N_{v_g}``.
    """
    vidx = N.presentation.vertex_index

    def offsets(P):
        offs, n = [], 0
        for v in P.summands:
            offs.append(n)
            n += N.dim_at(v)
        return offs, n

    to_off, to_n = offsets(P_to)
    from_off, from_n = offsets(P_from)
    entries = []
    for g2, v2 in enumerate(P_from.summands):
        i = vidx[v2]
        col = P_from.labels[i].index((g2, Path.trivial(v2)))
        image = d.blocks[i].column(col)  # d(generator g2) in (P_to)_{v2}
        for k, coeff in image.items():
            g, u = P_to.labels[i][k]
            act = N.path_action(u)  # N_{v_g} -> N_{v2}
            for r, row in act.rows.items():
                for c, v in row.items():
                    entries.append((from_off[g2] + r, to_off[g] + c, coeff * v))
    return RationalMatrix.from_entries(from_n, to_n, entries)


def ext_dims(M: Representation, N: Representation, p_max: int) -> list[int]:
    """``[dim Ext^0(M, N), ..., dim Ext^p_max(M, N)]``."""
    if p_max < 0:
        raise DomainError("p_max must be non-negative")
    res = min_resolution(M, p_max + 1)
    Ps = list(res.projectives)
    while len(Ps) < p_max + 2:
        Ps.append(projective_sum(M.presentation, ()))
    dims = [sum(N.dim_at(v) for v in P.summands) for P in Ps]
    ranks = []
    for k in range(p_max + 1):
        if k < len(res.differentials):
            ranks.append(_hom_from_projective_matrix(Ps[k + 1], Ps[k], res.differentials[k], N).rank())
        else:
            ranks.append(0)
    return [dims[p] - ranks[p] - (ranks[p - 1] if p else 0) for p in range(p_max + 1)]


# heredity ---------------------------------------------------------------------------------


def _passes_through(path: Path, presentation: QuiverPresentation, vertices: set[str]) -> bool:
    if path.target in vertices:
        return True
    return any(presentation.arrow(l).source in vertices for l in path.arrows)


def ideal_rep(presentation: QuiverPresentation, vertices: Iterable[str]) -> Representation:
    """The two-sided ideal ``A e A`` (``e`` = sum of the given idempotents) as a right module."""
    S = set(vertices)
    A = regular_rep(presentation)
    spans = [
        Subspace(A.dims[i], [_standard(k) for k, (_, u) in enumerate(labs) if _passes_through(u, presentation, S)])
        for i, labs in enumerate(A.labels)
    ]
    return submodule(A, spans)[0]


@dataclass(frozen=True)
class CheckResult:
    """A boolean answer with a human-readable reason."""

    value: bool
    reason: str
    witness: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.value


def is_heredity_ideal(presentation: QuiverPresentation, vertices: Iterable[str]) -> CheckResult:
    S = set(vertices)
    for p in enumerate_paths(presentation):
        if p.length and p.source in S and p.target in S:
            return CheckResult(False, f"eAe is not semisimple: contains the path {p}")
    J = ideal_rep(presentation, S)
    P, cover = projective_cover(J)
    if not cover.is_surjective():  # pragma: no cover - a cover is always onto
        raise AssertionError("projective cover is not surjective")
    if P.dimension != J.dimension:
        return CheckResult(False, f"AeA is not projective: cover has dimension {P.dimension}, ideal {J.dimension}")
    return CheckResult(True, "eAe is semisimple and AeA is projective")


def is_quasi_hereditary_two_vertex(presentation: QuiverPresentation) -> CheckResult:
    verts = presentation.vertices
    if len(verts) > 2:
        raise MoreThanTwoVertices(f"expected at most two vertices, got {len(verts)}")
    paths = list(enumerate_paths(presentation))
    for v in verts:
        if not is_heredity_ideal(presentation, [v]):
            continue
        rest = [w for w in verts if w != v]
        survivors = [p for p in paths if p.length and not _passes_through(p, presentation, {v})]
        if not survivors:
            return CheckResult(True, f"heredity chain 0 < A e{v} A < A", (v, *rest))
    return CheckResult(False, "no vertex gives a heredity ideal with semisimple quotient")


# tilting module of B(x, y) --------------------------------------------------------------


@dataclass(frozen=True)
class TiltingReport:
    x: int
    y: int
    ext1: int
    ext2: int
    end_dim: int
    hom_matrix: tuple[tuple[int, int], tuple[int, int]]  # [a][b] = dim Hom(T_b, T_a)
    cokernel_dims: tuple[int, ...]
    cartan_matches: tuple[tuple[int, int], ...]  # (x', y') whose Cartan matrix equals hom_matrix up to ordering

    @property
    def self_orthogonal(self) -> bool:
        return self.ext1 == 0 and self.ext2 == 0


def tilting_check(x: int, y: int) -> TiltingReport:
    """``T = cok(f) + P_2`` with ``f = (alpha_1, ..., alpha_x)^tr: P_1 -> P_2^x`` over ``B(x, y)``."""
    if x < 1:
        raise DomainError("the tilting module needs x >= 1")
    B = build_B(x, y)
    P1 = projective_sum(B, ["1"])
    P2x = projective_sum(B, ["2"] * x)
    i1 = B.vertex_index["1"]
    images = {}
    for k, (g, u) in enumerate(P2x.labels[i1]):
        images[(g, u.arrows)] = k
    gen = {images[(p, (f"a.1.{p + 1}",))]: 1 for p in range(x)}
    f = map_from_generators(P1, P2x, [gen])
    C, _ = cokernel(f)
    P2 = projective_rep(B, "2")
    T = direct_sum(C, P2)
    ext = ext_dims(T, T, 2)
    parts = (C, P2)
    hom = tuple(tuple(hom_space(parts[b], parts[a]).dimension for b in range(2)) for a in range(2))
    end_dim = sum(map(sum, hom))
    swapped = ((hom[1][1], hom[1][0]), (hom[0][1], hom[0][0]))
    matches = []
    for xp in range(end_dim + 1):
        for yp in range(end_dim + 1):
            cart = ((1, yp), (xp, 1 + xp * yp))
            if 2 + xp + yp + xp * yp != end_dim:
                continue
            if cart in (hom, swapped):
                matches.append((xp, yp))
    return TiltingReport(x, y, ext[1], ext[2], end_dim, hom, C.dims, tuple(matches))
