"""Command-line front end over the analysis modules.

    jsrkit construct --example 1 --l1 0 --l2 0 > pair.json
    jsrkit bounds --input pair.json --depth 2
    jsrkit rank1 --input pair.json --depth 1
    jsrkit irreducible --input pair.json
    jsrkit barabanov approx --input pair.json
    jsrkit barabanov verify --input pair.json --norm maxnorm.json
    jsrkit sfh --input pair.json --word 1,2
    jsrkit words --alphabet 2 --length 3 --necklaces

construct emits the portable tuple JSON itself (plus a "truth" block), so
its output feeds straight back into every other command.  All other
commands wrap their result as {"command", "config", "result"} with sorted
keys; a fixed invocation produces byte-identical output.

Exit codes: 0 success; 1 under --strict when a verdict stays Unknown, a
verification fails, an approximation does not converge, or an offender
scan reports offenders; 2 on bad input (malformed file, out-of-range
value, exhausted enumeration budget) with the reason on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import bounds as jsr_bounds
from .bounds import finiteness_verified_at_depth
from .config import DEFAULTS, pick
from .errors import ConvergenceError, InputError
from .finiteness import characteristic_word_search, sfh_evidence
from .norms import (
    approx_barabanov,
    circle_mesh,
    norm_from_json_dict,
    norm_to_json_dict,
    sphere_samples,
    verify_barabanov,
)
from .structure import is_irreducible, rank_one_property
from .tuples import MatrixTuple, from_json, to_json
from .words import enumerate_necklaces, enumerate_words, format_word, is_primitive, parse_word
from .constructions import (
    characteristic_truth,
    characteristic_tuple,
    example_tuple,
)


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_tuple(path: str) -> MatrixTuple:
    return from_json(_read_file(path))


def _load_norm(path: str):
    try:
        payload = json.loads(_read_file(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed norm JSON in {path}: {exc}") from exc
    return norm_from_json_dict(payload)


def _require_depth(depth: int) -> int:
    if depth < 1:
        raise InputError(f"depth must be >= 1, got {depth}")
    return depth


def _require_positive(name: str, value: float) -> float:
    if not value > 0:
        raise InputError(f"{name} must be positive, got {value}")
    return value


def _text_lines(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _text_lines(f"{prefix}{key}." if prefix else f"{key}.", value[key], out)
    elif isinstance(value, (list, tuple)):
        if len(value) > 12 or any(isinstance(x, (dict, list, tuple)) for x in value):
            for i, item in enumerate(value):
                _text_lines(f"{prefix}{i}.", item, out)
            if not value:
                out.append(f"{prefix.rstrip('.')} = []")
        else:
            out.append(f"{prefix.rstrip('.')} = {json.dumps(value)}")
    else:
        out.append(f"{prefix.rstrip('.')} = {json.dumps(value)}")


def _emit(args, command: str, config: dict, result) -> None:
    if args.format == "json":
        payload = {"command": command, "config": config, "result": result}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        lines: list[str] = []
        _text_lines("", result, lines)
        sys.stdout.write("\n".join(lines) + "\n")


def _default_rho(t: MatrixTuple, depth: int, budget: int | None) -> float:
    b = jsr_bounds(t, depth, budget=budget)
    return 0.5 * (b.lower + b.upper)


def _sample_directions(t: MatrixTuple, args):
    """Direction set for verification: explicit sphere draw, else planar mesh."""
    if getattr(args, "samples", None):
        return sphere_samples(t.d, args.samples, seed=args.seed, field=t.field)
    if t.field == "real" and t.d == 2:
        return circle_mesh(args.mesh)
    return None  # downstream raises with a pointer to --samples


def cmd_bounds(args) -> int:
    depth = _require_depth(args.depth)
    t = _load_tuple(args.input)
    b = jsr_bounds(t, depth, budget=args.budget)
    config = {
        "budget": args.budget,
        "close_tol": args.close_tol,
        "depth": depth,
        "input": args.input,
    }
    result = b.to_json_dict()
    result["closed"] = finiteness_verified_at_depth(b, args.close_tol)
    _emit(args, "bounds", config, result)
    return 0


def cmd_rank1(args) -> int:
    depth = _require_depth(args.depth)
    _require_positive("tol", args.tol)
    t = _load_tuple(args.input)
    verdict = rank_one_property(t, depth, tol=args.tol, budget=args.budget)
    config = {
        "budget": args.budget,
        "depth": depth,
        "input": args.input,
        "tol": args.tol,
    }
    _emit(args, "rank1", config, verdict.to_json_dict())
    return 1 if args.strict and verdict.status == "Unknown" else 0


def cmd_irreducible(args) -> int:
    _require_positive("tol", args.tol)
    t = _load_tuple(args.input)
    verdict = is_irreducible(t, drop_tol=args.tol, seed=args.seed, rounds=args.rounds)
    config = {
        "input": args.input,
        "rounds": args.rounds,
        "seed": args.seed,
        "tol": args.tol,
    }
    _emit(args, "irreducible", config, verdict.to_json_dict())
    return 1 if args.strict and verdict.status == "Unknown" else 0


def cmd_barabanov_approx(args) -> int:
    depth = _require_depth(args.depth)
    _require_positive("tol", args.tol)
    t = _load_tuple(args.input)
    rho = args.rho_hat if args.rho_hat is not None else _default_rho(t, depth, args.budget)
    result = approx_barabanov(
        t, rho, mesh_size=args.mesh, max_iter=args.max_iter, step_tol=args.tol
    )
    config = {
        "budget": args.budget,
        "depth": depth,
        "input": args.input,
        "max_iter": args.max_iter,
        "mesh": args.mesh,
        "rho_hat": rho,
        "step_tol": args.tol,
    }
    _emit(args, "barabanov-approx", config, result.to_json_dict())
    return 1 if args.strict and not result.converged else 0


def cmd_barabanov_verify(args) -> int:
    _require_positive("tol", args.tol)
    t = _load_tuple(args.input)
    norm = _load_norm(args.norm)
    depth = _require_depth(args.depth)
    rho = args.rho_hat if args.rho_hat is not None else _default_rho(t, depth, args.budget)
    report = verify_barabanov(
        t, norm, rho, samples=_sample_directions(t, args), tol=args.tol
    )
    config = {
        "budget": args.budget,
        "depth": depth,
        "input": args.input,
        "mesh": args.mesh,
        "norm": args.norm,
        "rho_hat": rho,
        "samples": args.samples,
        "seed": args.seed,
        "tol": args.tol,
    }
    result = report.to_json_dict()
    result["norm"] = norm_to_json_dict(norm)
    _emit(args, "barabanov-verify", config, result)
    return 1 if args.strict and not report.passed else 0


def cmd_sfh(args) -> int:
    depth = _require_depth(args.depth)
    _require_positive("tol", args.tol)
    t = _load_tuple(args.input)
    rho = args.rho_hat if args.rho_hat is not None else _default_rho(t, depth, args.budget)
    directions = _sample_directions(t, args)
    if args.norm:
        reps = [_load_norm(path) for path in args.norm]
        norm_source = list(args.norm)
    else:
        approx = approx_barabanov(t, rho, mesh_size=args.mesh)
        if not approx.converged:
            raise InputError(
                "no norm supplied and the built-in approximation did not converge; "
                "pass --norm"
            )
        reps = [approx.norm]
        norm_source = "approximated"
    common = dict(
        offender_tol=args.tol,
        norm_check_tol=args.norm_check_tol,
        samples=directions,
        budget=args.budget,
    )
    if args.word:
        omega = parse_word(args.word)
        reports = [sfh_evidence(t, omega, reps, rho, **common)]
    else:
        reports = characteristic_word_search(t, depth, reps, rho, **common)
    config = {
        "budget": args.budget,
        "depth": depth,
        "input": args.input,
        "mesh": args.mesh,
        "norm_check_tol": args.norm_check_tol,
        "norms": norm_source,
        "offender_tol": args.tol,
        "rho_hat": rho,
        "samples": args.samples,
        "seed": args.seed,
        "word": args.word,
    }
    result = {"reports": [rep.to_json_dict() for rep in reports]}
    _emit(args, "sfh", config, result)
    return 1 if args.strict and any(not rep.passed for rep in reports) else 0


def cmd_construct(args) -> int:
    if args.example is not None:
        t, truth = example_tuple(
            args.example, field=args.field, l1=args.l1, l2=args.l2, lam=args.lam
        )
    else:
        omega = parse_word(args.word)
        r = args.alphabet if args.alphabet is not None else max(omega)
        t = characteristic_tuple(r, len(omega), omega, field=args.field)
        truth = characteristic_truth(r, len(omega), omega)
    sys.stdout.write(to_json(t, extra={"truth": truth}))
    return 0


def cmd_words(args) -> int:
    if args.alphabet < 1:
        raise InputError(f"alphabet size must be >= 1, got {args.alphabet}")
    if args.length < 1:
        raise InputError(f"length must be >= 1, got {args.length}")
    source = enumerate_necklaces if args.necklaces else enumerate_words
    listed = [
        w
        for w in source(args.alphabet, args.length, args.budget)
        if not args.primitive_only or is_primitive(w)
    ]
    if args.format == "json":
        config = {
            "alphabet": args.alphabet,
            "budget": args.budget,
            "length": args.length,
            "necklaces": args.necklaces,
            "primitive_only": args.primitive_only,
        }
        result = {"count": len(listed), "words": [format_word(w) for w in listed]}
        _emit(args, "words", config, result)
    else:
        for w in listed:
            sys.stdout.write(format_word(w) + "\n")
    return 0


def _add_io(p, *, fmt_default="json"):
    p.add_argument("--input", required=True, help="path to tuple JSON")
    p.add_argument("--format", choices=("json", "text"), default=fmt_default)
    p.add_argument("--strict", action="store_true",
                   help="exit 1 on Unknown / failed / non-converged results")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jsrkit",
        description="Joint-spectral-radius analysis of finite matrix tuples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="certified lower/upper bounds")
    _add_io(p)
    p.add_argument("--depth", type=int, default=DEFAULTS.depth)
    p.add_argument("--budget", type=int, default=DEFAULTS.word_budget)
    p.add_argument("--close-tol", type=float, default=DEFAULTS.close_tol)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("rank1", help="exterior-square rank-one test")
    _add_io(p)
    p.add_argument("--depth", type=int, default=DEFAULTS.depth)
    p.add_argument("--budget", type=int, default=DEFAULTS.word_budget)
    p.add_argument("--tol", type=float, default=DEFAULTS.rank_one_tol)
    p.set_defaults(func=cmd_rank1)

    p = sub.add_parser("irreducible", help="common-invariant-subspace test")
    _add_io(p)
    p.add_argument("--tol", type=float, default=DEFAULTS.span_drop_tol)
    p.add_argument("--seed", type=int, default=DEFAULTS.seed)
    p.add_argument("--rounds", type=int, default=DEFAULTS.witness_rounds)
    p.set_defaults(func=cmd_irreducible)

    p = sub.add_parser("barabanov", help="extremal norm approximation/verification")
    mode = p.add_subparsers(dest="mode", required=True)

    pa = mode.add_parser("approx", help="planar mesh fixed-point iteration")
    _add_io(pa)
    pa.add_argument("--rho-hat", type=float, default=None,
                    help="defaults to the midpoint of certified bounds")
    pa.add_argument("--depth", type=int, default=DEFAULTS.depth)
    pa.add_argument("--budget", type=int, default=DEFAULTS.word_budget)
    pa.add_argument("--mesh", type=int, default=DEFAULTS.mesh_size)
    pa.add_argument("--max-iter", type=int, default=DEFAULTS.max_iter)
    pa.add_argument("--tol", type=float, default=DEFAULTS.step_tol)
    pa.set_defaults(func=cmd_barabanov_approx)

    pv = mode.add_parser("verify", help="sampled functional-equation residual")
    _add_io(pv)
    pv.add_argument("--norm", required=True, help="path to norm JSON")
    pv.add_argument("--rho-hat", type=float, default=None)
    pv.add_argument("--depth", type=int, default=DEFAULTS.depth)
    pv.add_argument("--budget", type=int, default=DEFAULTS.word_budget)
    pv.add_argument("--mesh", type=int, default=DEFAULTS.mesh_size)
    pv.add_argument("--samples", type=int, default=None,
                    help="random sphere directions (needed when d > 2 or complex)")
    pv.add_argument("--seed", type=int, default=DEFAULTS.seed)
    pv.add_argument("--tol", type=float, default=DEFAULTS.verify_tol)
    pv.set_defaults(func=cmd_barabanov_verify)

    p = sub.add_parser("sfh", help="offender scan for a candidate word")
    _add_io(p)
    p.add_argument("--word", default=None, help="candidate word; omit to search")
    p.add_argument("--norm", action="append", default=None,
                   help="path to norm JSON; repeatable; omit to approximate one")
    p.add_argument("--rho-hat", type=float, default=None)
    p.add_argument("--depth", type=int, default=DEFAULTS.depth)
    p.add_argument("--budget", type=int, default=DEFAULTS.word_budget)
    p.add_argument("--mesh", type=int, default=DEFAULTS.mesh_size)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULTS.seed)
    p.add_argument("--norm-check-tol", type=float, default=DEFAULTS.norm_check_tol)
    p.add_argument("--tol", type=float, default=DEFAULTS.offender_tol,
                   help="offender admission tolerance")
    p.set_defaults(func=cmd_sfh)

    p = sub.add_parser("construct", help="emit a reference tuple as JSON")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--example", type=int, default=None, help="catalogue id 1..5")
    what.add_argument("--word", default=None, help="characteristic word, e.g. 1,2,2")
    p.add_argument("--alphabet", type=int, default=None,
                   help="alphabet size for --word (default: largest letter)")
    p.add_argument("--field", choices=("real", "complex"), default="real")
    p.add_argument("--l1", type=float, default=None)
    p.add_argument("--l2", type=float, default=None)
    p.add_argument("--lam", type=float, default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("words", help="list words or necklace representatives")
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--necklaces", action="store_true",
                   help="one representative per rotation class")
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULTS.word_budget)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_words)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
