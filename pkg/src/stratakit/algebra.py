"""Quiver presentations with quadratic monomial relations, and their path bases.

Conventions used everywhere in the package:

* paths are written in composition order, so ``("b", "a")`` is the path that
  first traverses ``a`` and then ``b``;
* a relation is the ordered pair ``(later, earlier)`` of arrow labels and
  declares the length-two path ``later * earlier`` to be zero;
* the Cartan entry ``c[i][j]`` counts allowed paths from ``j`` to ``i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    DanglingVertex,
    DuplicateLabel,
    DuplicateRelation,
    InfiniteDimensional,
    NonComposableRelation,
    PresentationError,
)

INFINITE = math.inf


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True, eq=False)
class QuiverPresentation:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "relations", tuple((str(l), str(e)) for l, e in self.relations))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuiverPresentation):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.arrows == other.arrows
            and self.relation_set == other.relation_set
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows, self.relation_set))

    @cached_property
    def relation_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.relations)

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.label: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, label: str) -> Arrow:
        return self.arrows[self.arrow_index[label]]

    @property
    def is_graded(self) -> bool:
        return any(a.degree != 0 for a in self.arrows)

    def composable_pairs(self) -> list[tuple[str, str]]:
        """All ``(later, earlier)`` pairs with ``target(earlier) == source(later)``, canonical order."""
        return [
            (later.label, earlier.label)
            for later in self.arrows
            for earlier in self.arrows
            if earlier.target == later.source
        ]

    def canonical(self) -> "QuiverPresentation":
        """Same presentation with relations sorted by arrow declaration order."""
        idx = self.arrow_index
        rels = sorted(self.relation_set, key=lambda r: (idx.get(r[0], -1), idx.get(r[1], -1)))
        return QuiverPresentation(self.vertices, self.arrows, tuple(rels))

    def relabel(self, mapping: dict[str, str]) -> "QuiverPresentation":
        """Rename arrows; labels missing from ``mapping`` are kept."""
        arrows = tuple(Arrow(mapping.get(a.label, a.label), a.source, a.target, a.degree) for a in self.arrows)
        rels = tuple((mapping.get(l, l), mapping.get(e, e)) for l, e in self.relations)
        return QuiverPresentation(self.vertices, arrows, rels)


@dataclass(frozen=True)
class Path:
    arrows: tuple[str, ...]
    source: str
    target: str
    degree: int = 0

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls((), vertex, vertex, 0)

    def __str__(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e{self.source}"


def path_from_labels(presentation: QuiverPresentation, labels: Sequence[str]) -> Path:
    """Path given in composition order (leftmost label acts last).  No relation check."""
    if not labels:
        raise ValueError("use Path.trivial for length-zero paths")
    arrows = [presentation.arrow(l) for l in labels]
    for later, earlier in zip(arrows, arrows[1:]):
        if earlier.target != later.source:
            raise ValueError(f"{later.label} cannot follow {earlier.label}")
    return Path(tuple(labels), arrows[-1].source, arrows[0].target, sum(a.degree for a in arrows))


def validate(presentation: QuiverPresentation) -> QuiverPresentation:
    """Return the presentation unchanged if every invariant holds, else raise."""
    seen_v = set()
    for v in presentation.vertices:
        if v in seen_v:
            raise PresentationError(f"duplicate vertex {v!r}")
        seen_v.add(v)
    labels = set()
    for a in presentation.arrows:
        if a.label in labels:
            raise DuplicateLabel(f"duplicate arrow label {a.label!r}")
        labels.add(a.label)
        for end in (a.source, a.target):
            if end not in seen_v:
                raise DanglingVertex(f"arrow {a.label!r} uses undeclared vertex {end!r}")
        if not isinstance(a.degree, int):
            raise PresentationError(f"arrow {a.label!r} has non-integer degree {a.degree!r}")
    seen_r = set()
    for rel in presentation.relations:
        later, earlier = rel
        if later not in labels or earlier not in labels:
            missing = later if later not in labels else earlier
            raise NonComposableRelation(f"relation {rel!r} references unknown arrow {missing!r}")
        if presentation.arrow(earlier).target != presentation.arrow(later).source:
            raise NonComposableRelation(f"relation {rel!r}: {later!r} cannot follow {earlier!r}")
        if rel in seen_r:
            raise DuplicateRelation(f"relation {rel!r} listed twice")
        seen_r.add(rel)
    return presentation


# path enumeration ------------------------------------------------------


def _followers(presentation: QuiverPresentation, allowed: Callable[[str, str], bool]) -> dict[str, list[str]]:
    """For each arrow, the arrows that may act right after it."""
    out: dict[str, list[str]] = {a.label: [] for a in presentation.arrows}
    for later, earlier in presentation.composable_pairs():
        if allowed(later, earlier):
            out[earlier].append(later)
    return out


def _not_relation(presentation):
    rels = presentation.relation_set
    return lambda later, earlier: (later, earlier) not in rels


def _is_relation(presentation):
    rels = presentation.relation_set
    return lambda later, earlier: (later, earlier) in rels


def _acyclic(followers: dict[str, list[str]]) -> bool:
    try:
        tuple(TopologicalSorter({a: set(bs) for a, bs in followers.items()}).static_order())
    except CycleError:
        return False
    return True


def is_finite_dimensional(presentation: QuiverPresentation) -> bool:
    return _acyclic(_followers(presentation, _not_relation(presentation)))


def _walk(presentation, followers, max_length: int | None) -> Iterator[tuple[str, ...]]:
    """DFS over arrow words; yields composition-order label tuples (non-trivial)."""

    def extend(word: tuple[str, ...]):
        yield word
        if max_length is not None and len(word) >= max_length:
            return
        for nxt in followers[word[0]]:
            yield from extend((nxt,) + word)

    for a in presentation.arrows:
        yield from extend((a.label,))


def count_paths(presentation: QuiverPresentation) -> int:
    """Number of allowed paths (trivial ones included) via memoised suffix counts."""
    followers = _followers(presentation, _not_relation(presentation))
    if not _acyclic(followers):
        raise InfiniteDimensional("relation-avoiding paths form an infinite set")
    memo: dict[str, int] = {}

    def from_arrow(label: str) -> int:
        if label not in memo:
            memo[label] = 1 + sum(from_arrow(b) for b in followers[label])
        return memo[label]

    return len(presentation.vertices) + sum(from_arrow(a.label) for a in presentation.arrows)


class PathBasis:
    """Allowed paths of a finite-dimensional presentation, bucketed by (source, target, length)."""

    def __init__(self, presentation: QuiverPresentation, paths: Iterable[Path]):
        self.presentation = presentation
        self.buckets: dict[tuple[str, str, int], list[Path]] = {}
        self._paths: list[Path] = []
        for p in paths:
            self.buckets.setdefault((p.source, p.target, p.length), []).append(p)
            self._paths.append(p)
        self.index: dict[Path, int] = {p: i for i, p in enumerate(self._paths)}

    def __len__(self) -> int:
        return len(self._paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self._paths)

    def __contains__(self, path: Path) -> bool:
        return path in self.index

    @property
    def dimension(self) -> int:
        return len(self._paths)

    @property
    def paths(self) -> list[Path]:
        return list(self._paths)

    @property
    def max_length(self) -> int:
        return max((p.length for p in self._paths), default=0)

    def between(self, source: str, target: str) -> list[Path]:
        return [p for p in self._paths if p.source == source and p.target == target]

    def of_length(self, length: int) -> list[Path]:
        return [p for p in self._paths if p.length == length]

    def multiply(self, left: Path, right: Path) -> Path | None:
        """The product ``left * right`` (``right`` acts first), or None when it vanishes."""
        return multiply(self.presentation, left, right)


def multiply(presentation: QuiverPresentation, left: Path, right: Path) -> Path | None:
    if right.target != left.source:
        return None
    if right.is_trivial:
        return left
    if left.is_trivial:
        return right
    if (left.arrows[-1], right.arrows[0]) in presentation.relation_set:
        return None
    return Path(left.arrows + right.arrows, right.source, left.target, left.degree + right.degree)


def _word_to_path(presentation: QuiverPresentation, word: tuple[str, ...]) -> Path:
    first = presentation.arrow(word[-1])
    last = presentation.arrow(word[0])
    return Path(word, first.source, last.target, sum(presentation.arrow(l).degree for l in word))


def enumerate_paths(presentation: QuiverPresentation) -> PathBasis:
    followers = _followers(presentation, _not_relation(presentation))
    if not _acyclic(followers):
        raise InfiniteDimensional("relation-avoiding paths form an infinite set")
    paths = [Path.trivial(v) for v in presentation.vertices]
    words = sorted(_walk(presentation, followers, None), key=len)
    paths.extend(_word_to_path(presentation, w) for w in words)
    return PathBasis(presentation, paths)


# Cartan matrix ---------------------------------------------------------


@dataclass(frozen=True)
class CartanMatrix:
    vertices: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[str, str]) -> int:
        i, j = key
        return self.entries[self.vertices.index(i)][self.vertices.index(j)]

    def total(self) -> int:
        return sum(map(sum, self.entries))


def cartan_matrix(source: PathBasis | QuiverPresentation) -> CartanMatrix:
    """``c[i][j]`` = number of allowed paths ``j -> i``.

    Given a :class:`PathBasis` the paths are counted one by one.  Given a
    presentation nothing is enumerated: the counts come from memoised
    per-arrow tallies of path targets, which stays cheap when the algebra
    has millions of basis paths.
    """
    if isinstance(source, PathBasis):
        verts = source.presentation.vertices
        idx = {v: k for k, v in enumerate(verts)}
        counts = [[0] * len(verts) for _ in verts]
        for p in source:
            counts[idx[p.target]][idx[p.source]] += 1
        return CartanMatrix(verts, tuple(tuple(r) for r in counts))
    return _cartan_by_counting(source)


def _cartan_by_counting(presentation: QuiverPresentation) -> CartanMatrix:
    followers = _followers(presentation, _not_relation(presentation))
    verts = presentation.vertices
    idx = presentation.vertex_index
    memo: dict[str, list[int] | None] = {}

    def targets(label: str) -> list[int]:
        # targets of the allowed paths whose first arrow is ``label``
        done = memo.get(label, False)
        if done is None:
            raise InfiniteDimensional("relation-avoiding paths form an infinite set")
        if done is not False:
            return done
        memo[label] = None  # in progress
        tally = [0] * len(verts)
        tally[idx[presentation.arrow(label).target]] += 1
        for b in followers[label]:
            for k, c in enumerate(targets(b)):
                tally[k] += c
        memo[label] = tally
        return tally

    counts = [[int(i == j) for j in range(len(verts))] for i in range(len(verts))]
    for a in presentation.arrows:
        j = idx[a.source]
        for i, c in enumerate(targets(a.label)):
            counts[i][j] += c
    return CartanMatrix(verts, tuple(tuple(r) for r in counts))


# quadratic dual ----------------------------------------------------------


def quadratic_dual(presentation: QuiverPresentation) -> QuiverPresentation:
    """Same quiver; relations are the composable pairs that are *not* relations of the input."""
    rels = presentation.relation_set
    dual = tuple(p for p in presentation.composable_pairs() if p not in rels)
    return QuiverPresentation(presentation.vertices, presentation.arrows, dual)


def dual_degree_component(presentation: QuiverPresentation, p: int) -> list[Path]:
    """Length-``p`` paths all of whose length-two subpaths are relations of the input."""
    if p < 0:
        raise ValueError("degree must be non-negative")
    if p == 0:
        return [Path.trivial(v) for v in presentation.vertices]
    followers = _followers(presentation, _is_relation(presentation))
    return [
        _word_to_path(presentation, w)
        for w in _walk(presentation, followers, p)
        if len(w) == p
    ]


def top_dual_degree(presentation: QuiverPresentation) -> float | int:
    dual = quadratic_dual(presentation)
    if not is_finite_dimensional(dual):
        return INFINITE
    followers = _followers(dual, _not_relation(dual))
    memo: dict[str, int] = {}

    def longest(label: str) -> int:
        if label not in memo:
            memo[label] = 1 + max((longest(b) for b in followers[label]), default=0)
        return memo[label]

    return max((longest(a.label) for a in presentation.arrows), default=0)
