"""Command-line front end: ``mspotty <command> [options]``.

Exit status is 0 on success (or PASS), 1 when ``verify`` finds a mismatch,
and 2 for usage errors, unreadable inputs and exceeded sweep limits.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .codes import DEFAULT_MAX_SWEEP, code_from_file, dual, read_generator_file
from .errors import MSpottyError
from .macwilliams import s_value, transform, v_table, verify_identity
from .rings import build, is_additive_character, parse_spec, units, verify_generating_character
from .weights import distribution, enumerator

COMMANDS = ("ring-info", "enumerate", "dual", "transform", "verify", "vtable")


class UsageError(Exception):
    pass


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mspotty",
        description="m-spotty RT weight enumerators and their MacWilliams transform over finite Frobenius rings.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--ring", help="ring spec, e.g. Z6, F(2,2;1,1,1), chain(2,1,2;0,1), prod(Z2,Z3)")
    p.add_argument("--input", help="generator matrix file (text header format or .json)")
    p.add_argument("--b", type=int, help="byte length (vtable)")
    p.add_argument("--t", type=int, help="spotty parameter; overrides the matrix file header")
    p.add_argument("--l", type=int, dest="ell", help="ring order (vtable)")
    p.add_argument("--k", type=int, help="with --j: also print S(k, j) (vtable)")
    p.add_argument("--j", type=int, help="with --k: also print S(k, j) (vtable)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-sweep", type=int, default=DEFAULT_MAX_SWEEP,
                   help=f"bound on brute-force sweeps (default {DEFAULT_MAX_SWEEP})")
    return p


def _load_code(args):
    if not args.input:
        raise UsageError(f"{args.command} needs --input FILE")
    gf = read_generator_file(args.input)
    if args.ring:
        gf = type(gf)(parse_spec(args.ring), gf.layout, gf.rows)
    code = code_from_file(gf, t=args.t, max_sweep=args.max_sweep)
    return gf, code


def _code_params(gf, code):
    return {"ring": str(gf.ring), "n": code.layout.n, "b": code.layout.b, "t": code.layout.t}


def _ring_info(args):
    if not args.ring:
        raise UsageError("ring-info needs --ring SPEC")
    ring = build(args.ring)
    result = {
        "order": ring.order,
        "char_modulus": ring.char_modulus,
        "units": len(units(ring)),
        "additive_character": is_additive_character(ring),
        "generating_character": verify_generating_character(ring),
    }
    text = "\n".join([
        f"ring: {ring.spec}",
        f"order: {ring.order}",
        f"character modulus M: {ring.char_modulus}",
        f"units: {result['units']}",
        f"additive character: {'yes' if result['additive_character'] else 'NO'}",
        f"generating character: {'yes' if result['generating_character'] else 'NO'}",
    ])
    return {"ring": str(ring.spec)}, result, text, 0


def _enumerate(args):
    gf, code = _load_code(args)
    dist = distribution(code)
    W = enumerator(dist)
    result = {"cardinality": code.cardinality, "distribution": dist.to_json_obj(), "enumerator": W.to_list()}
    text = f"|C| = {code.cardinality}\n{dist.render()}\nW(z) = {W}"
    return _code_params(gf, code), result, text, 0


def _dual(args):
    gf, code = _load_code(args)
    d = dual(code, max_sweep=args.max_sweep)
    dist = distribution(d)
    W = enumerator(dist)
    result = {"dual_cardinality": d.cardinality, "distribution": dist.to_json_obj(), "enumerator": W.to_list()}
    text = f"|C_dual| = {d.cardinality}\n{dist.render()}\nW_dual(z) = {W}"
    return _code_params(gf, code), result, text, 0


def _transform(args):
    gf, code = _load_code(args)
    vt = v_table(code.ring.order, code.layout.b, code.layout.t)
    W = transform(distribution(code), code.cardinality, vt)
    result = {"cardinality": code.cardinality, "dual_enumerator": W.to_list()}
    text = f"|C| = {code.cardinality}\nW_dual(z) = {W}"
    return _code_params(gf, code), result, text, 0


def _verify(args):
    gf, code = _load_code(args)
    rep = verify_identity(code, max_sweep=args.max_sweep)
    result = {
        "cardinality": rep.card,
        "dual_cardinality": rep.dual_card,
        "via_transform": rep.via_transform.to_list(),
        "via_dual": rep.via_dual.to_list(),
        "equal": rep.equal,
        "verdict": rep.verdict,
    }
    text = "\n".join([
        f"|C| = {rep.card}, |C_dual| = {rep.dual_card}",
        f"transform:  W_dual(z) = {rep.via_transform}",
        f"dual sweep: W_dual(z) = {rep.via_dual}",
        rep.verdict,
    ])
    return _code_params(gf, code), result, text, 0 if rep.equal else 1


def _vtable(args):
    missing = [f"--{n}" for n, v in (("l", args.ell), ("b", args.b), ("t", args.t)) if v is None]
    if missing:
        raise UsageError("vtable needs " + ", ".join(missing))
    vt = v_table(args.ell, args.b, args.t)
    params = {"l": args.ell, "b": args.b, "t": args.t}
    result = {"polys": [p.to_list() for p in vt.polys]}
    text = vt.render()
    if (args.k is None) != (args.j is None):
        raise UsageError("--k and --j must be given together")
    if args.k is not None:
        s = s_value(args.ell, args.b, args.k, args.j)
        params.update(k=args.k, j=args.j)
        result["s_value"] = s
        text += f"\nS^({args.ell})({args.k},{args.j}) = {s}"
    return params, result, text, 0


_HANDLERS = {
    "ring-info": _ring_info,
    "enumerate": _enumerate,
    "dual": _dual,
    "transform": _transform,
    "verify": _verify,
    "vtable": _vtable,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = make_parser().parse_args(argv)
    try:
        params, result, text, status = _HANDLERS[args.command](args)
    except (UsageError, MSpottyError, OSError) as e:
        print(f"mspotty {args.command}: error: {e}", file=err)
        return 2
    if args.format == "json":
        print(json.dumps({"command": args.command, "params": params, "result": result}, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return status


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
