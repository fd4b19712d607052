"""Named two-vertex algebra families and the generalised Fibonacci numbers.

Arrow labels use a dotted double index: ``a.i.j`` for the ``j``-th arrow
``1 -> 2`` added at stage ``i``, ``b.i.j`` for arrows ``2 -> 1``.  In ``B(x, y)``
the stage index is always 1.  Graded Kronecker arrows are ``k.<n>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Arrow, QuiverPresentation, validate
from .errors import Degenerate, DomainError

VERTICES = ("1", "2")


def _check_positive(name: str, seq: Sequence[int]) -> None:
    for v in seq:
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} entries must be positive integers, got {v!r}")


def build_B(x: int, y: int) -> QuiverPresentation:
    """``x`` arrows ``1 -> 2``, ``y`` arrows ``2 -> 1``, every ``beta * alpha`` zero."""
    if x < 0 or y < 0:
        raise DomainError("x and y must be non-negative")
    alphas = [Arrow(f"a.1.{p}", "1", "2") for p in range(1, x + 1)]
    betas = [Arrow(f"b.1.{q}", "2", "1") for q in range(1, y + 1)]
    rels = tuple((b.label, a.label) for a in alphas for b in betas)
    return validate(QuiverPresentation(VERTICES, tuple(alphas + betas), rels))


def build_Lambda(degrees: Iterable[int]) -> QuiverPresentation:
    """Graded Kronecker quiver: one arrow ``1 -> 2`` per entry of ``degrees``, no relations."""
    degrees = sorted(int(d) for d in degrees)
    arrows = tuple(Arrow(f"k.{i + 1}", "1", "2", d) for i, d in enumerate(degrees))
    return validate(QuiverPresentation(VERTICES, arrows, ()))


def degree_multiset(presentation: QuiverPresentation) -> list[int]:
    return sorted(a.degree for a in presentation.arrows)


def lambda_for_B(x: int, y: int) -> QuiverPresentation:
    """The graded Kronecker algebra derived equivalent to ``B(x, y)``: y arrows in degree 0, x in degree 1."""
    if x < 0 or y < 0:
        raise DomainError("x and y must be non-negative")
    if x + y == 0:
        raise Degenerate("B(0, 0) is semisimple and has no graded Kronecker counterpart")
    return build_Lambda([0] * y + [1] * x)


def an_lengths(n: int) -> tuple[int, int]:
    """How many ``x`` and ``y`` entries ``A_n`` consumes."""
    return (n + 1) // 2, n // 2


def build_An(n: int, x_seq: Sequence[int], y_seq: Sequence[int]) -> QuiverPresentation:
    if n < 0:
        raise DomainError("n must be non-negative")
    nx, ny = an_lengths(n)
    if len(x_seq) < nx or len(y_seq) < ny:
        raise DomainError(f"A_{n} needs {nx} x-entries and {ny} y-entries, got {len(x_seq)} and {len(y_seq)}")
    _check_positive("x", x_seq[:nx])
    _check_positive("y", y_seq[:ny])

    # arrows are declared stage by stage, so A_{n-1} is a prefix of A_n
    arrows: list[Arrow] = []
    alpha: dict[int, list[str]] = {}
    beta: dict[int, list[str]] = {}
    for stage in range(1, n + 1):
        m = (stage + 1) // 2
        if stage % 2:
            alpha[m] = [f"a.{m}.{j}" for j in range(1, x_seq[m - 1] + 1)]
            arrows.extend(Arrow(l, "1", "2") for l in alpha[m])
        else:
            beta[m] = [f"b.{m}.{j}" for j in range(1, y_seq[m - 1] + 1)]
            arrows.extend(Arrow(l, "2", "1") for l in beta[m])

    rels = []
    for i, a_labels in alpha.items():
        for ip, b_labels in beta.items():
            for a in a_labels:
                for b in b_labels:
                    if ip < i:
                        rels.append((a, b))  # alpha_i after beta_i'
                    else:
                        rels.append((b, a))  # beta_i' after alpha_i, i <= i'
    pres = QuiverPresentation(VERTICES, tuple(arrows), tuple(rels))
    return validate(pres.canonical())


@dataclass(frozen=True)
class FibonacciSeq:
    x_seq: tuple[int, ...]
    y_seq: tuple[int, ...]
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def fibonacci(x_seq: Sequence[int], y_seq: Sequence[int], N: int) -> FibonacciSeq:
    """``F_0 .. F_N`` with ``F_2m = F_2m-2 + F_2m-1 x_m`` and ``F_2m+1 = F_2m-1 + F_2m y_m``."""
    if N < 0:
        raise DomainError("N must be non-negative")
    need_x, need_y = N // 2, (N - 1) // 2 if N >= 1 else 0
    if len(x_seq) < need_x or len(y_seq) < need_y:
        raise DomainError(f"F_{N} needs {need_x} x-entries and {need_y} y-entries")
    F = [0, 1]
    for k in range(2, N + 1):
        m = k // 2
        if k % 2 == 0:
            F.append(F[k - 2] + F[k - 1] * x_seq[m - 1])
        else:
            F.append(F[k - 2] + F[k - 1] * y_seq[m - 1])
    return FibonacciSeq(tuple(x_seq), tuple(y_seq), tuple(F[: N + 1]))


def shift(seq: Sequence[int]) -> tuple[int, ...]:
    return tuple(seq[1:])


def cartan_formula(n: int, x_seq: Sequence[int], y_seq: Sequence[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Cartan matrix of ``A_n`` in terms of generalised Fibonacci numbers."""
    if n == 0:
        return ((1, 0), (0, 1))
    m = n // 2
    if n % 2 == 0:
        F = fibonacci(x_seq, y_seq, n + 1)
        G = fibonacci(y_seq, shift(x_seq), n)
        return ((G[2 * m - 1], G[2 * m]), (F[2 * m], F[2 * m + 1]))
    F = fibonacci(x_seq, y_seq, n + 1)
    G = fibonacci(y_seq, shift(x_seq), n)
    return ((G[2 * m + 1], G[2 * m]), (F[2 * m + 2], F[2 * m + 1]))
