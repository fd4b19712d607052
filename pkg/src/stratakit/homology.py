"""Hochschild cohomology dimensions, computed exactly.

Four independent routes:

* ``hh_koszul``: the small cochain complex ``Hom((A^!)^p, A)`` coming from the
  Koszul bimodule resolution of an ungraded quadratic monomial algebra;
* ``hh_bar_oracle``: the normalised Hochschild complex relative to the vertex
  span, split into blocks by arrow multidegree;
* ``hh_graded_kronecker``: the two-term complex of a graded Kronecker algebra;
* closed forms (``hh_kronecker_formula``, ``hh_b_formula``, ``hh_top_formula``).
"""

from __future__ import annotations

import math
import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    INFINITE,
    Path,
    QuiverPresentation,
    dual_degree_component,
    enumerate_paths,
    is_finite_dimensional,
    multiply,
    quadratic_dual,
    top_dual_degree,
)
from .errors import DomainError, GradedInput, InfiniteDimensional, InfiniteDual, SizeLimit
from .families import fibonacci, shift
from .linalg import RationalMatrix

DEFAULT_MAX_DIM = 200_000


@dataclass(frozen=True)
class HHProfile:
    """Finitely supported map ``p -> dim HH^p``; zero entries are dropped.

    Equality compares dimensions only; ``method`` and the degree bounds are
    bookkeeping.
    """

    dims: dict[int, int]
    method: str = field(default="", compare=False)
    min_degree: int | None = field(default=None, compare=False)
    max_degree: int | None = field(default=None, compare=False)

    def __post_init__(self):
        for p, d in self.dims.items():
            if d < 0:
                raise ValueError(f"negative dimension {d} in degree {p}")
        object.__setattr__(self, "dims", {p: d for p, d in sorted(self.dims.items()) if d})

    def __getitem__(self, p: int) -> int:
        return self.dims.get(p, 0)

    def __hash__(self) -> int:
        return hash(tuple(self.dims.items()))

    @property
    def support(self) -> list[int]:
        return list(self.dims)

    def total(self) -> int:
        return sum(self.dims.values())

    def items(self) -> list[tuple[int, int]]:
        return list(self.dims.items())


@dataclass
class CochainComplex:
    """``C^start -> C^start+1 -> ...``; ``differentials[k]`` maps degree ``start+k`` to ``start+k+1``.

    The last space has no outgoing differential; callers that truncate a
    longer complex must not trust the cohomology in the top degree.
    """

    dims: list[int]
    differentials: list[RationalMatrix]
    start: int = 0

    def __post_init__(self):
        if len(self.differentials) != max(len(self.dims) - 1, 0):
            raise ValueError("need one differential between each pair of consecutive spaces")
        for k, d in enumerate(self.differentials):
            if d.shape != (self.dims[k + 1], self.dims[k]):
                raise ValueError(f"differential {k} has shape {d.shape}, expected {(self.dims[k + 1], self.dims[k])}")
        self._ranks: dict[int, int] = {}

    @property
    def degrees(self) -> range:
        return range(self.start, self.start + len(self.dims))

    def dim(self, p: int) -> int:
        k = p - self.start
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def differential(self, p: int) -> RationalMatrix | None:
        k = p - self.start
        return self.differentials[k] if 0 <= k < len(self.differentials) else None

    def rank(self, p: int) -> int:
        if p not in self._ranks:
            d = self.differential(p)
            self._ranks[p] = d.rank() if d is not None else 0
        return self._ranks[p]

    def cohomology(self, p: int) -> int:
        return self.dim(p) - self.rank(p) - self.rank(p - 1)

    def cohomology_dims(self) -> dict[int, int]:
        return {p: self.cohomology(p) for p in self.degrees}

    def d_squared_is_zero(self) -> bool:
        return all((b @ a).is_zero() for a, b in zip(self.differentials, self.differentials[1:]))


def euler_characteristic(complex: CochainComplex) -> int:
    return sum((-1) ** p * complex.dim(p) for p in complex.degrees)


def cohomology_euler_characteristic(complex: CochainComplex) -> int:
    return sum((-1) ** p * h for p, h in complex.cohomology_dims().items())


# Koszul route ----------------------------------------------------------


def _require_ungraded_finite(presentation: QuiverPresentation) -> None:
    if presentation.is_graded:
        raise GradedInput("Koszul and bar routes need all arrow degrees equal to 0")
    if not is_finite_dimensional(presentation):
        raise InfiniteDimensional("algebra is infinite-dimensional")


def koszul_cochain_complex(presentation: QuiverPresentation) -> CochainComplex:
    _require_ungraded_finite(presentation)
    top = top_dual_degree(presentation)
    if top == INFINITE:
        raise InfiniteDual("quadratic dual is infinite-dimensional")
    basis = enumerate_paths(presentation)
    rels = presentation.relation_set
    arrows = presentation.arrows
    arrow_path = {a.label: Path((a.label,), a.source, a.target) for a in arrows}
    parallel: dict[tuple[str, str], list[Path]] = defaultdict(list)
    for u in basis:
        parallel[(u.source, u.target)].append(u)

    dual = [dual_degree_component(presentation, p) for p in range(top + 1)]
    slots = []
    for p in range(top + 1):
        slots.append({(w.arrows if p else (w.source,), u): k for k, (w, u) in enumerate(
            (w, u) for w in dual[p] for u in parallel[(w.source, w.target)]
        )})

    diffs = []
    for p in range(top):
        rows = slots[p + 1]
        sign = -1 if p % 2 == 0 else 1  # (-1)^(p+1)
        entries = []
        for (wkey, u), col in slots[p].items():
            if p == 0:
                v = wkey[0]
                left = [a for a in arrows if a.source == v]
                right = [a for a in arrows if a.target == v]
            else:
                left = [a for a in arrows if (a.label, wkey[0]) in rels]
                right = [a for a in arrows if (wkey[-1], a.label) in rels]
            for a in left:
                out = multiply(presentation, arrow_path[a.label], u)
                if out is not None:
                    entries.append((rows[((a.label,) + (wkey if p else ()), out)], col, 1))
            for a in right:
                out = multiply(presentation, u, arrow_path[a.label])
                if out is not None:
                    entries.append((rows[((wkey if p else ()) + (a.label,), out)], col, sign))
        diffs.append(RationalMatrix.from_entries(len(rows), len(slots[p]), entries))
    return CochainComplex([len(s) for s in slots], diffs)


def hh_koszul(presentation: QuiverPresentation) -> HHProfile:
    cx = koszul_cochain_complex(presentation)
    return HHProfile(cx.cohomology_dims(), method="koszul")


# bar-complex oracle ------------------------------------------------------


def max_dim_from_env(default: int = DEFAULT_MAX_DIM) -> int:
    raw = os.environ.get("STRATAKIT_MAX_DIM")
    return int(raw) if raw else default


class _BarData:
    """Index tables for the normalised bar complex relative to the vertex span."""

    def __init__(self, presentation: QuiverPresentation):
        basis = enumerate_paths(presentation)
        self.paths = basis.paths
        self.index = basis.index
        aidx = presentation.arrow_index
        self.vec = []
        for p in self.paths:
            v = [0] * len(aidx)
            for l in p.arrows:
                v[aidx[l]] += 1
            self.vec.append(tuple(v))
        self.nontrivial = [i for i, p in enumerate(self.paths) if p.length]
        self.by_target: dict[str, list[int]] = defaultdict(list)
        self.by_source: dict[str, list[int]] = defaultdict(list)
        for i in self.nontrivial:
            self.by_target[self.paths[i].target].append(i)
            self.by_source[self.paths[i].source].append(i)
        self.parallel: dict[tuple[str, str], list[int]] = defaultdict(list)
        for i, p in enumerate(self.paths):
            self.parallel[(p.source, p.target)].append(i)
        self.lengths = [p.length for p in self.paths]
        self.loops = [i for v in presentation.vertices for i in self.parallel[(v, v)]]
        self.max_length = max(self.lengths, default=0)
        # every non-zero product of non-trivial paths is a concatenation, so
        # splitting a path means cutting its word
        by_word = {self.paths[i].arrows: i for i in self.nontrivial}
        self.splits: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for i in self.nontrivial:
            p = self.paths[i]
            for cut in range(1, p.length):
                self.splits[i].append((by_word[p.arrows[:cut]], by_word[p.arrows[cut:]]))
        self.presentation = presentation
        self._mult: dict[tuple[int, int], int | None] = {}
        self._left: dict[int, list[tuple[int, int]]] = {}
        self._right: dict[int, list[tuple[int, int]]] = {}

    def left_products(self, u: int) -> list[tuple[int, int]]:
        """``(a, a*u)`` for the non-trivial paths ``a`` with a non-zero product."""
        got = self._left.get(u)
        if got is None:
            t = self.paths[u].target
            got = [(a, out) for a in self.by_source[t] if (out := self.mult(a, u)) is not None]
            self._left[u] = got
        return got

    def right_products(self, u: int) -> list[tuple[int, int]]:
        """``(a, u*a)`` for the non-trivial paths ``a`` with a non-zero product."""
        got = self._right.get(u)
        if got is None:
            s = self.paths[u].source
            got = [(a, out) for a in self.by_target[s] if (out := self.mult(u, a)) is not None]
            self._right[u] = got
        return got

    def mult(self, i: int, j: int) -> int | None:
        key = (i, j)
        if key not in self._mult:
            prod = multiply(self.presentation, self.paths[i], self.paths[j])
            self._mult[key] = None if prod is None else self.index[prod]
        return self._mult[key]


def twin_classes(presentation: QuiverPresentation) -> list[list[int]]:
    """Groups of arrows that any permutation of preserves the presentation.

    Two non-loop arrows are twins when they are parallel, share a degree and
    meet exactly the same relations; transposing twins is an automorphism.
    """
    rels = presentation.relation_set
    groups: dict[tuple, list[int]] = defaultdict(list)
    for k, a in enumerate(presentation.arrows):
        if a.source == a.target:
            groups[("loop", k)].append(k)
            continue
        before = frozenset(c for c, b in rels if b == a.label)
        after = frozenset(b for c, b in rels if c == a.label)
        groups[(a.source, a.target, a.degree, before, after)].append(k)
    return list(groups.values())


def _canonical_weight(w: tuple[int, ...], classes: list[list[int]]) -> bool:
    return all(all(w[c[i]] >= w[c[i + 1]] for i in range(len(c) - 1)) for c in classes)


def orbit_size(w: tuple[int, ...], classes: list[list[int]]) -> int:
    """Number of distinct weights obtained by permuting coordinates within each class."""
    size = 1
    for c in classes:
        size *= math.factorial(len(c))
        for count in Counter(w[i] for i in c).values():
            size //= math.factorial(count)
    return size


def _bar_tuples(data: _BarData, q: int, max_total: int) -> list[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """Composable q-tuples of non-trivial paths with total length <= max_total.

    Each entry carries the total length and the summed arrow multidegree.
    """
    level = [((), 0, (0,) * len(data.presentation.arrows))]
    for k in range(q):
        need = q - k - 1
        nxt = []
        for T, total, vec in level:
            cands = data.nontrivial if not T else data.by_target[data.paths[T[-1]].source]
            for i in cands:
                t = total + data.lengths[i]
                if t + need <= max_total:
                    nxt.append((T + (i,), t, tuple(a + b for a, b in zip(vec, data.vec[i]))))
        level = nxt
    return level


def bar_cochain_blocks(
    presentation: QuiverPresentation,
    p_max: int,
    *,
    window: str = "koszul",
    max_dim: int | None = None,
    symmetric: bool = False,
) -> dict[tuple[int, ...], CochainComplex]:
    """Normalised relative Hochschild cochains, one complex per arrow multidegree.

    A cochain slot is a composable tuple ``(a_1, ..., a_q)`` of non-trivial
    paths together with a parallel path ``u`` (its value).  The block key is
    ``multidegree(u) - sum(multidegree(a_i))``; the differential preserves it.

    ``window="all"`` enumerates every slot in degrees ``0..p_max``; the top
    degree ``p_max + 1`` holds only the slots the last differential reaches.
    ``window="koszul"`` keeps only the blocks whose total weight
    ``len(u) - sum(len(a_i))`` is at least ``-p``, the range where a Koszul
    algebra can carry degree-``p`` cohomology; all other blocks are skipped.

    With ``symmetric=True`` only one block per orbit under permutations of
    twin arrows is built (see ``twin_classes``); isomorphic blocks have equal
    cohomology, so callers weight each block by ``orbit_size``.  The size cap
    counts the slots actually built.
    """
    if window not in ("koszul", "all"):
        raise ValueError("window must be 'koszul' or 'all'")
    _require_ungraded_finite(presentation)
    if max_dim is None:
        max_dim = max_dim_from_env()
    data = _BarData(presentation)
    Lmax = data.max_length
    classes = twin_classes(presentation) if symmetric else []
    # (value, summed multidegree) -> block key, or None for a skipped block
    weight_of: dict = {}

    def tmin(q: int) -> int | None:
        return None if window == "all" else -min(q + 1, p_max)

    spaces: list[dict[tuple[int, ...], dict[tuple[tuple[int, ...], int], int]]] = []
    for q in range(p_max + 1):
        lo = tmin(q)
        bound = q * Lmax if lo is None else Lmax - lo
        blocks: dict[tuple[int, ...], dict] = defaultdict(dict)
        size = 0
        for T, total, tv in _bar_tuples(data, q, bound):
            if q:
                ends = data.parallel[(data.paths[T[-1]].source, data.paths[T[0]].target)]
            else:
                ends = data.loops
            for u in ends:
                if lo is not None and data.lengths[u] - total < lo:
                    continue
                w = weight_of.get((u, tv), False)
                if w is False:
                    w = tuple(a - b for a, b in zip(data.vec[u], tv))
                    if classes and not _canonical_weight(w, classes):
                        w = None
                    weight_of[(u, tv)] = w
                if w is None:
                    continue
                blk = blocks[w]
                blk[(T, u)] = len(blk)
                size += 1
                if size > max_dim:
                    raise SizeLimit(f"bar cochain space in degree {q} exceeds {max_dim} slots")
        spaces.append(dict(blocks))

    # The top space C^(p_max+1) is never enumerated: its slots enter only as
    # rows of the last differential, created the first time they are hit.
    # Untouched rows would be zero rows, which do not change any rank.
    complexes = {}
    weights = set().union(*(s.keys() for s in spaces))
    for w in sorted(weights):
        t = sum(w)  # len(u) - sum(len(a_i))
        q0 = next(q for q in range(p_max + 1) if tmin(q) is None or t >= tmin(q))
        layers = [spaces[q].get(w, {}) for q in range(q0, p_max + 1)] + [_GrowingIndex()]
        diffs = [_bar_differential(data, q0 + k, layers[k], layers[k + 1]) for k in range(len(layers) - 1)]
        complexes[w] = CochainComplex([len(l) for l in layers], diffs, start=q0)
    return complexes


class _GrowingIndex(dict):
    def __missing__(self, key):
        self[key] = len(self)
        return self[key]


def _bar_differential(data: _BarData, q: int, cols: dict, rows: dict) -> RationalMatrix:
    sign_right = -1 if q % 2 == 0 else 1  # (-1)^(q+1)
    entries = []
    for (T, u), col in cols.items():
        # u is parallel to the tuple T, so its ends are the ends of T
        for a, out in data.left_products(u):
            entries.append((rows[((a,) + T, out)], col, 1))
        for a, out in data.right_products(u):
            entries.append((rows[(T + (a,), out)], col, sign_right))
        for k, ak in enumerate(T):
            sgn = -1 if k % 2 == 0 else 1  # (-1)^(k+1)
            for b, c in data.splits.get(ak, ()):
                entries.append((rows[(T[:k] + (b, c) + T[k + 1 :], u)], col, sgn))
    return RationalMatrix.from_entries(len(rows), len(cols), entries)


def hh_bar_oracle(
    presentation: QuiverPresentation,
    p_max: int,
    *,
    window: str = "koszul",
    max_dim: int | None = None,
    symmetric: bool = True,
) -> HHProfile:
    if p_max < 0:
        raise DomainError("p_max must be non-negative")
    blocks = bar_cochain_blocks(presentation, p_max, window=window, max_dim=max_dim, symmetric=symmetric)
    classes = twin_classes(presentation) if symmetric else []
    return bar_profile(blocks, p_max, window=window, classes=classes)


def bar_profile(
    blocks: dict[tuple[int, ...], CochainComplex],
    p_max: int,
    *,
    window: str = "koszul",
    classes: list[list[int]] = (),
) -> HHProfile:
    """Sum block cohomology in degrees ``0..p_max``, weighted by orbit size.

    ``blocks``, ``window`` and ``classes`` must match the call to
    :func:`bar_cochain_blocks` (``classes=()`` when it ran with
    ``symmetric=False``).
    """
    dims = Counter()
    for w, cx in blocks.items():
        t = sum(w)
        weight = orbit_size(w, classes)
        for p in range(cx.start, p_max + 1):
            if window == "koszul" and t < -p:
                continue
            dims[p] += weight * cx.cohomology(p)
    return HHProfile(dict(dims), method="bar")


# graded Kronecker ---------------------------------------------------------


def graded_kronecker_complex(degrees: Sequence[int]) -> tuple[list[int], list[int], RationalMatrix]:
    """Two-term complex ``span{e1, e2} -> span{(alpha, rho)}``.

    Returns the internal degrees of the source basis, of the target basis, and
    the map ``g`` sending ``e1`` to the sum of the diagonal slots and ``e2`` to
    its negative.
    """
    degrees = list(degrees)
    n = len(degrees)
    src = [0, 0]
    tgt = [degrees[a] - degrees[r] for a in range(n) for r in range(n)]
    entries = []
    for r in range(n):
        slot = r * n + r
        entries.append((slot, 0, 1))
        entries.append((slot, 1, -1))
    return src, tgt, RationalMatrix.from_entries(n * n, 2, entries)


def hh_graded_kronecker(degrees: Sequence[int]) -> HHProfile:
    degrees = list(degrees)
    src, tgt, g = graded_kronecker_complex(degrees)
    # total degree = cohomological position + internal degree
    src_total = [0 + d for d in src]
    tgt_total = [1 + d for d in tgt]
    dims: Counter = Counter()
    for p in sorted(set(src_total) | set(tgt_total)):
        s_idx = [i for i, d in enumerate(src_total) if d == p]
        t_idx = [i for i, d in enumerate(tgt_total) if d == p]
        prev = [i for i, d in enumerate(src_total) if d == p - 1]
        kernel = len(s_idx) - g.submatrix(list(range(g.nrows)), s_idx).rank() if s_idx else 0
        coker = len(t_idx) - g.submatrix(t_idx, prev).rank() if t_idx else 0
        dims[p] += kernel + coker
    return HHProfile(
        dict(dims),
        method="graded-two-term",
        min_degree=min(degrees, default=None),
        max_degree=max(degrees, default=None),
    )


def hh_kronecker_formula(degrees: Sequence[int]) -> HHProfile:
    degrees = list(degrees)
    if not degrees:
        return HHProfile({0: 2}, method="formula")
    diffs = Counter(a - b for a in degrees for b in degrees)
    dims = {}
    for delta, count in diffs.items():
        dims[delta + 1] = count
    dims[1] = diffs[0] - 1
    dims[0] = diffs[-1] + 1
    return HHProfile(dims, method="formula", min_degree=min(degrees), max_degree=max(degrees))


def hh_b_formula(x: int, y: int) -> HHProfile:
    """Closed-form profile of ``B(x, y)``."""
    if x < 0 or y < 0:
        raise DomainError("x and y must be non-negative")
    if x == y == 0:
        return HHProfile({0: 2}, method="formula")
    return HHProfile({0: x * y + 1, 1: x * x + y * y - 1, 2: x * y}, method="formula")


def top_image_rank(n: int, x_seq: Sequence[int], y_seq: Sequence[int]) -> int:
    """Rank of the last Koszul differential of ``A_n`` for odd ``n = 2m + 1``.

    A top dual path ``alpha_(m+1) beta_m ... beta_1 alpha_1`` receives
    ``alpha_(m+1) * phi(drop alpha_(m+1))`` and ``phi(drop alpha_1) * alpha_1``.
    Only the ``e_1`` (resp. ``e_2``) coefficient survives, and every truncated
    dual path carries its own free coefficient, so the rank is the number of
    left truncations plus the number of right truncations.  Both are 1
    exactly when every parameter involved is 1.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError("top_image_rank needs odd n >= 3")
    m = n // 2
    left = math.prod(x_seq[i] * y_seq[i] for i in range(m))
    right = x_seq[m] * math.prod(x_seq[1:m]) * math.prod(y_seq[:m])
    return left + right


def hh_top_formula(n: int, x_seq: Sequence[int], y_seq: Sequence[int]) -> int:
    """Closed-form ``dim HH^n(A_n)`` for ``n >= 2``.

    Even ``n``: ``F_(n-1)(y, Sx) * prod x_i y_i``.  Odd ``n``: the dimension of
    the top cochain space ``F_(n+1)(x, y) * x_(m+1) * prod x_i y_i`` minus
    :func:`top_image_rank`, which equals 2 when all parameters are 1.
    """
    if n < 2:
        raise DomainError("top Hochschild formula needs n >= 2")
    m = n // 2
    prod = math.prod(x_seq[i] * y_seq[i] for i in range(m))
    if n % 2 == 0:
        return fibonacci(y_seq, shift(x_seq), n - 1)[n - 1] * prod
    return fibonacci(x_seq, y_seq, n + 1)[n + 1] * x_seq[m] * prod - top_image_rank(n, x_seq, y_seq)
