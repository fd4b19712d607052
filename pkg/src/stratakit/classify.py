"""Derived-equivalence invariants and a derived-simplicity certificate for two-simple algebras.

The certificate rests on two facts about an algebra ``A`` with two simple
modules and finite global dimension: it is either derived simple or derived
equivalent to some ``B(x, y)``, and the Hochschild cohomology of ``B(x, y)``
lives in degrees 0, 1 and 2 with dimensions ``xy + 1``, ``x^2 + y^2 - 1`` and
``xy``.  Cohomology in a degree above 2 therefore rules out the second case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import isqrt

from .algebra import INFINITE, QuiverPresentation, is_finite_dimensional, top_dual_degree
from .errors import GradedInput, InfiniteDimensional, InfiniteGlobalDimension, WrongSimpleCount
from .homology import HHProfile, hh_b_formula, hh_koszul
from .modules import min_resolution, simple_rep


class Verdict(str, Enum):
    DERIVED_SIMPLE = "DerivedSimple"
    CONSISTENT_WITH_QUASI_HEREDITARY = "ConsistentWithQuasiHereditary"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    profile: HHProfile
    witness: tuple[int, int] | None = None  # (degree p > 2, dim HH^p)
    candidates: tuple[tuple[int, int], ...] = ()
    global_dimension: int | None = None
    assumptions: dict[str, str] = field(default_factory=dict)


ASSUMPTIONS = {
    "two_simple_modules": "checked: the presentation has exactly two vertices",
    "finite_global_dimension": "checked: minimal resolutions of both simples terminate",
    "base_field_algebraically_closed": "assumed: not decidable from a presentation",
}


def b_candidates(profile: HHProfile) -> tuple[tuple[int, int], ...]:
    """All ordered pairs ``(x, y)`` whose ``B(x, y)`` has exactly this profile."""
    dims = profile.dims
    if dims == {0: 2}:
        return ((0, 0),)
    if set(dims) - {0, 1, 2}:
        return ()
    h0, h1, h2 = profile[0], profile[1], profile[2]
    if h0 != h2 + 1:
        return ()
    squares = h1 + 1  # x^2 + y^2
    out = []
    for x in range(isqrt(squares) + 1):
        y2 = squares - x * x
        y = isqrt(y2)
        if y * y == y2 and x * y == h2 and x + y >= 1:
            out.append((x, y))
    return tuple(out)


def global_dimension(presentation: QuiverPresentation) -> int:
    """Largest projective dimension of a simple, from minimal resolutions.

    For a quadratic monomial algebra ``Ext^p`` between simples has the
    degree-``p`` part of the quadratic dual as a basis, so an infinite dual
    means infinite global dimension and a finite one bounds every resolution.
    """
    top = top_dual_degree(presentation)
    if top == INFINITE:
        raise InfiniteGlobalDimension("quadratic dual is infinite-dimensional")
    lengths = []
    for v in presentation.vertices:
        res = min_resolution(simple_rep(presentation, v), top + 1)
        if not res.complete:
            raise InfiniteGlobalDimension(f"resolution of S_{v} does not stop by step {top + 1}")
        lengths.append(res.length)
    return max(lengths, default=0)


def certify(presentation: QuiverPresentation) -> Certificate:
    if len(presentation.vertices) != 2:
        raise WrongSimpleCount(f"need exactly two vertices, got {len(presentation.vertices)}")
    if presentation.is_graded:
        raise GradedInput("certification needs an ungraded presentation")
    if not is_finite_dimensional(presentation):
        raise InfiniteDimensional("algebra is infinite-dimensional")
    gldim = global_dimension(presentation)
    profile = hh_koszul(presentation)
    high = [p for p in profile.support if p > 2]
    if high:
        p = max(high)
        return Certificate(Verdict.DERIVED_SIMPLE, profile, (p, profile[p]), (), gldim, dict(ASSUMPTIONS))
    cands = b_candidates(profile)
    if cands:
        return Certificate(Verdict.CONSISTENT_WITH_QUASI_HEREDITARY, profile, None, cands, gldim, dict(ASSUMPTIONS))
    return Certificate(Verdict.INCONCLUSIVE, profile, None, (), gldim, dict(ASSUMPTIONS))


def b_derived_equivalent(x: int, y: int, x2: int, y2: int) -> bool:
    """Whether ``B(x, y)`` and ``B(x2, y2)`` have the same Hochschild profile.

    Away from ``B(0, 0)`` that is the system ``xy = x2 y2`` and
    ``x^2 + y^2 = x2^2 + y2^2``; ``B(0, 0)`` only matches itself.
    """
    for v in (x, y, x2, y2):
        if v < 0:
            raise ValueError("parameters must be non-negative")
    if (x, y) == (0, 0) or (x2, y2) == (0, 0):
        solved = x == y == x2 == y2 == 0
    else:
        solved = x * y == x2 * y2 and x * x + y * y == x2 * x2 + y2 * y2
    if solved != (sorted((x, y)) == sorted((x2, y2))):  # pragma: no cover - would be a bug
        raise AssertionError(f"equation system and pair comparison disagree on {(x, y)} vs {(x2, y2)}")
    return solved


def hh_invariance_check(presentation: QuiverPresentation, x: int, y: int) -> bool:
    return hh_koszul(presentation) == hh_b_formula(x, y)
