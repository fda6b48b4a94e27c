"""
Command-line surface.

    python -m app.cli tiles --prebasis 2,5 --format ascii
    python -m app.cli patch --prebasis 2,5 --rational 64 --box=-4..1,-4..1
    python -m app.cli verify patch.json
    python -m app.cli integrate patch.json path.json --expect-zero
    python -m app.cli macro --prebasis 2,5 --rational 1638 --matrix m.json --box=-1..0,-1..0
    python -m app.cli ca-run --rule 3@6 --config one.json --steps 3 --format ascii
    python -m app.cli convert x.json --target 100 --mode conj
    python -m app.cli trace --rule 2@10 --width 1 --horizon 1

Exit codes: 0 success, 1 semantic failure, 2 usage or parse error.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from app.config import configure_logging, is_development
from app.exceptions import MulticubeError, ParseError
from app.models.automata import TraceQuery
from app.models.lattice import Point, Prebasis
from app.models.tessellation import Tessellation
from app.schemas.automata import RunResponse, TraceResponse
from app.schemas.digits import DigitConfigSchema
from app.schemas.tessellation import MatrixSchema, PatchSchema, PathSchema
from app.services.automata_service import run, trace_words
from app.services.conjugacy_service import conj, fact
from app.services.exact_arith import real_of_config
from app.services.macro_service import derived_prebasis, macrotile, microtile
from app.services.render_service import RenderSpec, render_service, tileset_payload
from app.services.tessellation_service import (
    extract_patch,
    from_rational,
    is_valid_patch,
    path_integral,
    tessellation,
)
from app.utils.parsing import parse_box, parse_multiplier, parse_prebasis, parse_rational

logger = logging.getLogger("app.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

BOX_HELP = "x0..x1,y0..y1; write --box=-3..0,-3..0 when a range starts below zero"


def _read_json(path: str) -> object:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from e


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def _load_config(path: str):
    return DigitConfigSchema.model_validate(_read_json(path)).to_model()


def _load_path(path: str):
    data = _read_json(path)
    if isinstance(data, list):
        data = {"points": data}
    return PathSchema.model_validate(data).to_model()


def _source(args, n: Prebasis) -> Tessellation:
    if args.rational is not None:
        return from_rational(n, parse_rational(args.rational))
    if args.config is not None:
        return tessellation(n, _load_config(args.config))
    raise ParseError("Give --rational or --config")


def _box(text: str) -> tuple[Point, Point]:
    lo, hi = parse_box(text)
    for axis, (a, b) in enumerate(zip(lo, hi)):
        if a > b:
            raise ParseError(f"Empty box '{text}': {a} > {b} on axis {axis}")
    return lo, hi


def _check_drawable(dim: int, fmt: str) -> None:
    if fmt != "json" and dim > 2:
        raise ParseError(f"Cannot draw a {dim}-dimensional tiling as {fmt}, use --format json")


def _emit_patch(patch, args) -> None:
    _check_drawable(patch.prebasis.dim, args.format)
    if args.format == "json":
        _emit(PatchSchema.from_model(patch).model_dump_json(indent=2) + "\n", args.out)
    elif args.format == "svg":
        _emit(render_service.patch_svg(patch, RenderSpec(cell_size=args.cell_size)), args.out)
    else:
        _emit(render_service.patch_ascii(patch), args.out)


def cmd_tiles(args) -> int:
    n = parse_prebasis(args.prebasis)
    _check_drawable(n.dim, args.format)
    if args.format == "json":
        _emit(tileset_payload(n).model_dump_json(indent=2) + "\n", args.out)
    elif args.format == "svg":
        _emit(render_service.tiles_svg(n, RenderSpec(cell_size=args.cell_size)), args.out)
    else:
        _emit(render_service.tiles_ascii(n), args.out)
    return EXIT_OK


def cmd_patch(args) -> int:
    n = parse_prebasis(args.prebasis)
    lo, hi = _box(args.box)
    _emit_patch(extract_patch(_source(args, n), lo, hi), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    patch = PatchSchema.model_validate(_read_json(args.patch)).to_model()
    report = is_valid_patch(patch)
    if report.valid:
        print(f"valid: {len(patch.cells)} cells")
        return EXIT_OK
    print(f"invalid: {len(report.violations)} violation(s)")
    for z, axis in report.violations:
        print(f"  {list(z)} axis {axis}")
    return EXIT_FAILURE


def cmd_integrate(args) -> int:
    patch = PatchSchema.model_validate(_read_json(args.patch)).to_model()
    path = _load_path(args.path)
    value = path_integral(patch, path)
    print(value)
    if args.expect_zero and value != 0:
        logger.warning(f"Nonzero cycle defect {value}")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_macro(args) -> int:
    n = parse_prebasis(args.prebasis)
    A = MatrixSchema.model_validate(_read_json(args.matrix)).to_model()
    lo, hi = _box(args.box)
    _emit_patch(extract_patch(macrotile(_source(args, n), A), lo, hi), args)
    return EXIT_OK


def cmd_micro(args) -> int:
    n = parse_prebasis(args.prebasis)
    A = MatrixSchema.model_validate(_read_json(args.matrix)).to_model()
    lo, hi = _box(args.box)
    g = _source(args, derived_prebasis(n, A))
    _emit_patch(extract_patch(microtile(g, n, A), lo, hi), args)
    return EXIT_OK


def cmd_ca_run(args) -> int:
    multiplier = parse_multiplier(args.rule)
    rows = run(multiplier, _load_config(args.config), args.steps)
    if args.format == "ascii":
        _emit(render_service.spacetime_ascii(rows), args.out)
    else:
        response = RunResponse(
            rule=args.rule,
            rows=[DigitConfigSchema.from_model(x) for x in rows],
            values=[str(real_of_config(x)) for x in rows],
        )
        _emit(response.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_convert(args) -> int:
    x = _load_config(args.config)
    converted = conj(x, args.target) if args.mode == "conj" else fact(x, args.target)
    _emit(DigitConfigSchema.from_model(converted).model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_trace(args) -> int:
    query = TraceQuery(multiplier=parse_multiplier(args.rule), width=args.width, horizon=args.horizon)
    words = trace_words(query)
    response = TraceResponse(
        rule=args.rule,
        width=args.width,
        horizon=args.horizon,
        count=len(words),
        words=[[list(frame) for frame in word] for word in words],
    )
    _emit(response.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("app.main:app", host=args.host, port=args.port, reload=is_development())
    return EXIT_OK


def _add_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--rational", help="Value p/q backing the tessellation")
    group.add_argument("--config", help="JSON digit configuration used as the diagonal")


def _add_output(parser: argparse.ArgumentParser, formats: tuple[str, ...], default: str) -> None:
    parser.add_argument("--format", choices=formats, default=default)
    parser.add_argument("--out", help="Output file (stdout if omitted)")
    parser.add_argument("--cell-size", type=int, default=RenderSpec().cell_size, help="SVG cell size in px")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multicube", description="Multiplication cubes, tilings and automata")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    tiles = commands.add_parser("tiles", help="Render the tile set T_n")
    tiles.add_argument("--prebasis", required=True)
    _add_output(tiles, ("svg", "ascii", "json"), "json")
    tiles.set_defaults(handler=cmd_tiles)

    patch = commands.add_parser("patch", help="Cut a box out of a tessellation")
    patch.add_argument("--prebasis", required=True)
    _add_source(patch)
    patch.add_argument("--box", required=True, help=BOX_HELP)
    _add_output(patch, ("json", "svg", "ascii"), "json")
    patch.set_defaults(handler=cmd_patch)

    verify = commands.add_parser("verify", help="Check a patch file for matching faces")
    verify.add_argument("patch")
    verify.set_defaults(handler=cmd_verify)

    integrate = commands.add_parser("integrate", help="Path integral over a patch")
    integrate.add_argument("patch")
    integrate.add_argument("path")
    integrate.add_argument("--expect-zero", action="store_true", help="Exit 1 on a nonzero result")
    integrate.set_defaults(handler=cmd_integrate)

    for name, handler, help_text in (
        ("macro", cmd_macro, "Macrotile a tessellation over n"),
        ("micro", cmd_micro, "Microtile a tessellation over n^A back onto n"),
    ):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--prebasis", required=True, help="The fine prebasis n")
        _add_source(sub)
        sub.add_argument("--matrix", required=True, help="JSON matrix file")
        sub.add_argument("--box", required=True, help=BOX_HELP)
        _add_output(sub, ("json", "svg", "ascii"), "json")
        sub.set_defaults(handler=handler)

    ca_run = commands.add_parser("ca-run", help="Space-time diagram of Mul_{alpha,N}")
    ca_run.add_argument("--rule", required=True, help="p/q@N")
    ca_run.add_argument("--config", required=True)
    ca_run.add_argument("--steps", type=int, required=True)
    ca_run.add_argument("--format", choices=("json", "ascii"), default="json")
    ca_run.add_argument("--out")
    ca_run.set_defaults(handler=cmd_ca_run)

    convert = commands.add_parser("convert", help="Change base by conjugacy or factor map")
    convert.add_argument("config")
    convert.add_argument("--target", type=int, required=True)
    convert.add_argument("--mode", choices=("conj", "fact"), default="conj")
    convert.add_argument("--out")
    convert.set_defaults(handler=cmd_convert)

    trace = commands.add_parser("trace", help="Enumerate trace words")
    trace.add_argument("--rule", required=True)
    trace.add_argument("--width", type=int, default=1)
    trace.add_argument("--horizon", type=int, default=1)
    trace.add_argument("--out")
    trace.set_defaults(handler=cmd_trace)

    serve = commands.add_parser("serve", help="Run the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None)
    try:
        return args.handler(args)
    except (ParseError, ValidationError) as e:
        logger.error(f"{e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MulticubeError as e:
        logger.error(f"{e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
