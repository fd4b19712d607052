"""Command-line front end.

Exit codes: 0 success, 2 unreadable or invalid input, 3 a precondition of
the requested computation fails, 4 a ``--verify`` cross-check disagrees.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

from . import __version__
from .algebra import INFINITE, QuiverPresentation, cartan_matrix, top_dual_degree
from .classify import b_derived_equivalent, certify, global_dimension
from .errors import (
    Degenerate,
    DomainError,
    GradedInput,
    InfiniteDimensional,
    InfiniteDual,
    InfiniteGlobalDimension,
    MoreThanTwoVertices,
    PresentationError,
    SizeLimit,
    WrongSimpleCount,
)
from .families import an_lengths, build_An, build_B, build_Lambda, fibonacci
from .formats import dumps_presentation, flatten, loads_presentation, presentation_to_dict, profile_pairs, result_document
from .homology import (
    DEFAULT_MAX_DIM,
    HHProfile,
    hh_b_formula,
    hh_bar_oracle,
    hh_graded_kronecker,
    hh_koszul,
    hh_kronecker_formula,
    hh_top_formula,
)
from .modules import direct_sum, ext_dims, projective_rep, regular_rep, simple_rep, socle

EXIT_INPUT, EXIT_PRECONDITION, EXIT_MISMATCH = 2, 3, 4
PRECONDITION_ERRORS = (
    GradedInput,
    InfiniteDimensional,
    InfiniteDual,
    InfiniteGlobalDimension,
    SizeLimit,
    WrongSimpleCount,
    MoreThanTwoVertices,
    Degenerate,
)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# argument helpers -------------------------------------------------------------


def int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def int_range(text: str) -> list[int]:
    """``a:b`` (inclusive; empty when ``b < a``) or a comma list."""
    if ":" in text:
        lo, _, hi = text.partition(":")
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return int_list(text)


def _family_params(args) -> dict[str, Any]:
    kind = args.family
    if kind == "b":
        if args.x is None or args.y is None:
            raise CliError("family b needs --x and --y", EXIT_INPUT)
        return {"family": "b", "x": args.x, "y": args.y}
    if kind == "an":
        if args.n is None:
            raise CliError("family an needs --n", EXIT_INPUT)
        return {"family": "an", "n": args.n, "xs": args.xs or [], "ys": args.ys or []}
    if kind == "kronecker":
        return {"family": "kronecker", "degrees": args.degrees or []}
    raise CliError(f"unknown family {kind!r}", EXIT_INPUT)


def build_family(params: dict[str, Any]) -> QuiverPresentation:
    kind = params["family"]
    try:
        if kind == "b":
            return build_B(params["x"], params["y"])
        if kind == "an":
            return build_An(params["n"], params["xs"], params["ys"])
        return build_Lambda(params["degrees"])
    except DomainError as exc:
        raise CliError(str(exc), EXIT_INPUT)


def load_input(args) -> tuple[QuiverPresentation, Any, dict[str, Any] | None]:
    """The presentation, the document's ``input`` section and the family parameters (if any)."""
    if getattr(args, "input", None):
        try:
            text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc.strerror}", EXIT_INPUT)
        pres = loads_presentation(text)
        return pres, presentation_to_dict(pres), None
    if getattr(args, "family", None):
        params = _family_params(args)
        return build_family(params), params, params
    raise CliError("give --input FILE or --family", EXIT_INPUT)


def max_dim_setting(args) -> int:
    """``STRATAKIT_MAX_DIM`` wins over ``--max-dim``, which wins over the default."""
    raw = os.environ.get("STRATAKIT_MAX_DIM")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise CliError(f"STRATAKIT_MAX_DIM must be an integer, got {raw!r}", EXIT_INPUT)
    return args.max_dim if args.max_dim is not None else DEFAULT_MAX_DIM


def kronecker_degrees(pres: QuiverPresentation) -> list[int] | None:
    """Arrow degrees if ``pres`` is a graded Kronecker quiver, else None."""
    if len(pres.vertices) != 2 or pres.relations:
        return None
    v1, v2 = pres.vertices
    if any((a.source, a.target) != (v1, v2) for a in pres.arrows):
        return None
    return sorted(a.degree for a in pres.arrows)


# computations -------------------------------------------------------------------


def hh_profile(pres: QuiverPresentation, params: dict | None, method: str, args) -> HHProfile:
    if method == "koszul":
        return hh_koszul(pres)
    if method == "bar":
        top = top_dual_degree(pres)
        p_max = args.p_max if args.p_max is not None else top
        if p_max == INFINITE:
            raise InfiniteDual("bar oracle needs --p-max when the quadratic dual is infinite")
        return hh_bar_oracle(pres, int(p_max), max_dim=max_dim_setting(args))
    if method == "graded":
        degrees = kronecker_degrees(pres)
        if degrees is None:
            raise CliError("graded method needs a graded Kronecker quiver", EXIT_PRECONDITION)
        return hh_graded_kronecker(degrees)
    # closed forms
    if params and params["family"] == "b":
        return hh_b_formula(params["x"], params["y"])
    if params and params["family"] == "an" and params["n"] <= 2:
        nx, ny = an_lengths(params["n"])
        x = params["xs"][0] if nx else 0
        y = params["ys"][0] if ny else 0
        return hh_b_formula(x, y)
    degrees = kronecker_degrees(pres)
    if degrees is not None:
        return hh_kronecker_formula(degrees)
    raise CliError("no closed form for this input; the top degree of A_n is available via 'sweep top-hh'", EXIT_PRECONDITION)


def _second_method(pres: QuiverPresentation, first: str) -> str:
    graded_ok = kronecker_degrees(pres) is not None
    if first == "koszul":
        return "bar"
    if first == "bar":
        return "koszul"
    if first == "graded":
        return "formula"
    return "graded" if graded_ok else "koszul"


def cmd_family(args) -> tuple[Any, str, dict, Any]:
    params = _family_params(args)
    return None, "family", params, build_family(params)


def cmd_cartan(args):
    pres, inp, _ = load_input(args)
    c = cartan_matrix(pres)
    return inp, "cartan", {}, {"vertices": list(c.vertices), "matrix": [list(r) for r in c.entries], "dimension": c.total()}


def cmd_hh(args):
    pres, inp, params = load_input(args)
    profile = hh_profile(pres, params, args.method, args)
    result: dict[str, Any] = {"method": args.method, "profile": profile_pairs(profile)}
    if args.verify:
        other = _second_method(pres, args.method)
        second = hh_profile(pres, params, other, args)
        result["verified_against"] = other
        if second != profile:
            raise CliError(
                f"verification failed: {args.method} {profile_pairs(profile)} != {other} {profile_pairs(second)}",
                EXIT_MISMATCH,
            )
    return inp, "hh", {"method": args.method, "verify": args.verify}, result


def cmd_gldim(args):
    pres, inp, _ = load_input(args)
    top = top_dual_degree(pres)
    result: dict[str, Any] = {"top_dual_degree": "infinite" if top == INFINITE else top}
    result["global_dimension"] = global_dimension(pres) if top != INFINITE else "infinite"
    return inp, "gldim", {}, result


def parse_module(pres: QuiverPresentation, spec: str):
    """``S1+P2+A``: simples ``S<v>``, projectives ``P<v>``, the regular module ``A``."""
    parts = []
    for token in spec.split("+"):
        token = token.strip()
        if token == "A":
            parts.append(regular_rep(pres))
        elif token[:1] in ("S", "P") and token[1:] in pres.vertex_index:
            parts.append((simple_rep if token[0] == "S" else projective_rep)(pres, token[1:]))
        else:
            raise CliError(f"bad module token {token!r}", EXIT_INPUT)
    return parts[0] if len(parts) == 1 else direct_sum(*parts)


def cmd_ext(args):
    pres, inp, _ = load_input(args)
    M, N = parse_module(pres, args.left), parse_module(pres, args.right)
    dims = ext_dims(M, N, args.p_max)
    return inp, "ext", {"left": args.left, "right": args.right, "p_max": args.p_max}, {"ext": dims}


def cmd_socle(args):
    pres, inp, _ = load_input(args)
    M = parse_module(pres, args.module)
    S, _ = socle(M)
    return inp, "socle", {"module": args.module}, {"dimension_vector": dict(zip(pres.vertices, S.dims))}


def certificate_dict(cert) -> dict[str, Any]:
    return {
        "verdict": cert.verdict.value,
        "witness": None if cert.witness is None else {"degree": cert.witness[0], "dimension": cert.witness[1]},
        "candidates": [list(c) for c in cert.candidates],
        "profile": profile_pairs(cert.profile),
        "global_dimension": cert.global_dimension,
        "assumptions": cert.assumptions,
    }


def cmd_certify(args):
    pres, inp, _ = load_input(args)
    return inp, "certify", {}, certificate_dict(certify(pres))


def cmd_fib(args):
    try:
        seq = fibonacci(args.xs, args.ys, args.n)
    except DomainError as exc:
        raise CliError(str(exc), EXIT_INPUT)
    params = {"xs": args.xs, "ys": args.ys, "n": args.n}
    return params, "fib", params, {"values": list(seq.values)}


# sweeps -------------------------------------------------------------------------

SWEEP_COLUMNS = {
    "top-hh": ["n", "xs", "ys", "formula", "computed", "equal"],
    "hh": ["n", "xs", "ys", "profile"],
    "cartan": ["n", "xs", "ys", "c11", "c12", "c21", "c22"],
    "certify": ["n", "xs", "ys", "verdict", "witness_degree", "witness_dimension"],
    "b-equiv": ["x", "y", "class"],
}


def _join(seq) -> str:
    return ";".join(str(v) for v in seq)


def _sweep_an(n: int, xs: tuple, ys: tuple, what: str) -> dict[str, Any]:
    pres = build_An(n, xs, ys)
    row: dict[str, Any] = {"n": n, "xs": _join(xs), "ys": _join(ys)}
    if what == "top-hh":
        if n < 2:
            raise DomainError("top Hochschild formula needs n >= 2")
        formula = hh_top_formula(n, xs, ys)
        computed = hh_koszul(pres)[n]
        row.update(formula=formula, computed=computed, equal=str(formula == computed).lower())
    elif what == "hh":
        row["profile"] = _join(f"{p}:{d}" for p, d in hh_koszul(pres).items())
    elif what == "cartan":
        (c11, c12), (c21, c22) = cartan_matrix(pres).entries
        row.update(c11=c11, c12=c12, c21=c21, c22=c22)
    else:
        cert = certify(pres)
        row["verdict"] = cert.verdict.value
        if cert.witness:
            row["witness_degree"], row["witness_dimension"] = cert.witness
    return row


def _sweep_b(x: int, y: int, xmax: int, ymax: int) -> dict[str, Any]:
    cls = [f"{a}:{b}" for a in range(xmax + 1) for b in range(ymax + 1) if b_derived_equivalent(x, y, a, b)]
    return {"x": x, "y": y, "class": ";".join(cls)}


def _run_point(point):
    kind, payload = point
    try:
        if kind == "b-equiv":
            return _sweep_b(*payload), None
        return _sweep_an(*payload, kind), None
    except Exception as exc:  # a failing point becomes an error row
        return None, f"{type(exc).__name__}: {exc}"


def sweep_points(args) -> list[tuple[dict[str, Any], tuple]]:
    """Grid points in lexicographic parameter order, each with its identifying columns."""
    points = []
    if args.computation == "b-equiv":
        xs, ys = args.x or [], args.y or []
        xmax, ymax = max(xs, default=0), max(ys, default=0)
        for x in xs:
            for y in ys:
                points.append(({"x": x, "y": y}, ("b-equiv", (x, y, xmax, ymax))))
        return points
    entries = sorted(set(args.entries or [1]))
    for n in sorted(set(args.n or [])):
        nx, ny = an_lengths(n)
        for xs in itertools.product(entries, repeat=nx):
            for ys in itertools.product(entries, repeat=ny):
                ident = {"n": n, "xs": _join(xs), "ys": _join(ys)}
                points.append((ident, (args.computation, (n, xs, ys))))
    return points


def cmd_sweep(args) -> int:
    points = sweep_points(args)
    columns = SWEEP_COLUMNS[args.computation] + ["error"]
    work = [p for _, p in points]
    if args.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_run_point, work))
    else:
        outcomes = [_run_point(p) for p in work]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    failures = 0
    for (ident, _), (row, err) in zip(points, outcomes):
        if err is not None:
            failures += 1
            row = dict(ident, error=err)
        writer.writerow({c: row.get(c, "") for c in columns})
    text = buf.getvalue()
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if points and failures == len(points):
        return 1
    return 0


# output --------------------------------------------------------------------------


def emit(doc: dict[str, Any], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    flat = flatten(doc["result"])
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(list(flat))
        writer.writerow(list(flat.values()))
        return
    width = max((len(k) for k in flat), default=0)
    for k, v in flat.items():
        out.write(f"{k.ljust(width)}  {v}\n")


def _add_input_options(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input")
    src.add_argument("--input", metavar="FILE", help="presentation JSON file ('-' for stdin)")
    src.add_argument("--family", choices=["b", "an", "kronecker"])
    _add_family_params(src)


def _add_family_params(p) -> None:
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--xs", type=int_list)
    p.add_argument("--ys", type=int_list)
    p.add_argument("--degrees", type=int_list, help="comma list; negative values allowed (use --degrees=-1,0,2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stratakit", description="Homological invariants of quiver algebras with quadratic monomial relations.")
    parser.add_argument("--version", action="version", version=f"stratakit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default="json")
    common.add_argument("--max-dim", type=int, help=f"bar oracle cap on cochain slots per degree (default {DEFAULT_MAX_DIM})")
    sub = parser.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="emit a family presentation", parents=[common])
    fam.add_argument("family", choices=["b", "an", "kronecker"])
    _add_family_params(fam)
    fam.set_defaults(func=cmd_family)

    for name, func, helptext in [
        ("cartan", cmd_cartan, "Cartan matrix"),
        ("gldim", cmd_gldim, "global dimension"),
        ("certify", cmd_certify, "derived-simplicity certificate"),
    ]:
        p = sub.add_parser(name, help=helptext, parents=[common])
        _add_input_options(p)
        p.set_defaults(func=func)

    hh = sub.add_parser("hh", help="Hochschild cohomology profile", parents=[common])
    _add_input_options(hh)
    hh.add_argument("--method", choices=["koszul", "bar", "formula", "graded"], default="koszul")
    hh.add_argument("--verify", action="store_true", help="cross-check with a second method")
    hh.add_argument("--p-max", type=int, help="highest degree for the bar oracle (default: top dual degree)")
    hh.set_defaults(func=cmd_hh)

    ext = sub.add_parser("ext", help="Ext dimensions between modules", parents=[common])
    _add_input_options(ext)
    ext.add_argument("--left", default="S1+S2", help="module tokens S<v>, P<v>, A joined by '+'")
    ext.add_argument("--right", default="S1+S2")
    ext.add_argument("--p-max", type=int, default=2)
    ext.set_defaults(func=cmd_ext)

    soc = sub.add_parser("socle", help="socle dimension vector", parents=[common])
    _add_input_options(soc)
    soc.add_argument("--module", default="A")
    soc.set_defaults(func=cmd_socle)

    fib = sub.add_parser("fib", help="generalised Fibonacci numbers F_0..F_n", parents=[common])
    fib.add_argument("--xs", type=int_list, required=True)
    fib.add_argument("--ys", type=int_list, required=True)
    fib.add_argument("--n", type=int, required=True)
    fib.set_defaults(func=cmd_fib)

    sw = sub.add_parser("sweep", help="CSV over a parameter grid")
    sw.add_argument("computation", choices=sorted(SWEEP_COLUMNS))
    sw.add_argument("--n", type=int_range, help="A_n sizes, 'a:b' inclusive or a comma list")
    sw.add_argument("--entries", type=int_list, help="allowed x_i, y_i values (default 1)")
    sw.add_argument("--x", type=int_range)
    sw.add_argument("--y", type=int_range)
    sw.add_argument("--output", "-o", help="CSV path (default stdout)")
    sw.add_argument("--jobs", type=int, default=1)
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            return args.func(args)
        start = time.perf_counter()
        inp, name, params, result = args.func(args)
        if args.command == "family":
            if args.format == "json":
                sys.stdout.write(dumps_presentation(result))
                return 0
            result = presentation_to_dict(result)
        elapsed = int((time.perf_counter() - start) * 1000)
        doc = result_document(inp, name, params, result, version=__version__, elapsed_ms=elapsed)
        emit(doc, args.format, sys.stdout)
        return 0
    except CliError as exc:
        print(f"stratakit: {exc}", file=sys.stderr)
        return exc.code
    except (PresentationError, DomainError) as exc:
        print(f"stratakit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PRECONDITION_ERRORS as exc:
        print(f"stratakit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
