"""Command-line front end.

stdout carries one JSON document per invocation; diagnostics go to stderr.
Exit codes: 0 ok, 1 property violation, 2 input error.

Syntax: weights are comma-separated within a block and ``|`` between blocks
(``12,3|0``); partitions are comma-separated parts (``2,1``; ``0`` or ``()``
for the empty partition); shapes are ``L<k>:<mult>`` items joined by commas.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Optional, Sequence

from . import glx, suites, verp, versln
from .serialize import encode

EXIT = {"ok": 0, "property-violation": 1, "input-error": 2}


@dataclass
class CommandResult:
    status: str
    payload: object

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


# -- parsing helpers -------------------------------------------------------------


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad integer list {text!r}") from exc


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "()", "0", "-"):
        return ()
    return tuple(parse_int_list(text.strip("()")))


def parse_shape(p: int, text: str) -> glx.GLXShape:
    mults = [0] * (p - 1)
    for item in text.split(","):
        item = item.strip()
        try:
            label, m = item.split(":")
            if not label.startswith("L"):
                raise ValueError
            k = int(label[1:])
            m = int(m)
        except ValueError as exc:
            raise InputError(f"bad shape item {item!r}; expected L<k>:<mult>") from exc
        if not 1 <= k <= p - 1:
            raise InputError(f"simple label L{k} out of range for p={p}")
        mults[k - 1] += m
    return glx.build_shape(p, mults)


def parse_weight(shape: glx.GLXShape, text: str) -> glx.GWeight:
    blocks = text.split("|")
    sizes = [m for _, _, m in shape.blocks()]
    if len(blocks) != len(sizes):
        raise InputError(f"weight {text!r} needs {len(sizes)} block(s) separated by '|'")
    entries = []
    for b, m in zip(blocks, sizes):
        vals = parse_int_list(b)
        if len(vals) != m:
            raise InputError(f"block {b!r} needs {m} entries")
        entries.extend(vals)
    return glx.GWeight(shape, tuple(entries))


def parse_vtuple(shape: glx.GLXShape, text: Optional[str]):
    if text is None:
        return None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"--V must be JSON, e.g. [[[]],[[3],[]]]: {exc}") from exc
    return glx.validate_vtuple(shape, tuple(tuple(tuple(lab) for lab in comp) for comp in raw))


def _partition_str(parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


# -- commands ---------------------------------------------------------------------


def cmd_fuse(args) -> CommandResult:
    p = args.p
    for k in (args.m, args.n):
        if not 1 <= k <= p - 1:
            raise InputError(f"simple index {k} out of range 1..{p - 1}")
    obj = verp.fuse(verp.VerpObject.simple(p, args.m), verp.VerpObject.simple(p, args.n))
    expansion = {f"L{k}": m for k, m in obj.items()}
    if not args.json:
        return CommandResult("ok", expansion)
    return CommandResult("ok", {
        "expansion": expansion,
        "fpdim": verp.fpdim(obj),
        "qdim": encode(verp.qdim(obj)),
    })


def cmd_sln_fuse(args) -> CommandResult:
    pr = versln.SLnParams(args.p, args.n)
    lam = versln.AlcoveWeight(pr, parse_partition(args.lam))
    mu = versln.AlcoveWeight(pr, parse_partition(args.mu))
    out = versln.fuse_sln(lam, mu)
    return CommandResult("ok", {str(k): v for k, v in sorted(out.items(), key=lambda kv: kv[0].parts)})


def cmd_decompose(args) -> CommandResult:
    shape = parse_shape(args.p, args.shape)
    lam0, mu = glx.padic_decompose(parse_weight(shape, args.weight))
    return CommandResult("ok", {"base": str(lam0), "mu": str(mu)})


def cmd_factorize(args) -> CommandResult:
    shape = parse_shape(args.p, args.shape)
    idx = glx.SimpleIndex(parse_weight(shape, args.weight), parse_vtuple(shape, args.V))
    f = glx.steinberg_factorize(idx)
    out = {"base": str(f.base.lam), "twists": [str(t) for t in f.twists]}
    if any(lab for comp in idx.V for lab in comp):
        out["V"] = [[_partition_str(lab) for lab in comp] for comp in idx.V]
    return CommandResult("ok", out)


def cmd_kernel_dim(args) -> CommandResult:
    shape = parse_shape(args.p, args.shape)
    e, dims = glx.kernel_coord_dims(shape, args.r)
    return CommandResult("ok", {"p": args.p, "even_exponent": e, "sym_dims": dims})


def _pairs(primes, ns):
    return [(p, n) for p, n in product(primes, ns) if 2 <= n < p]


def _run_suite(name: str, args) -> suites.SuiteResult:
    primes = args.p or None
    ns = args.n or None
    seed = args.seed
    if name in ("verp-oracle", "qdim-hom", "dictionary"):
        return suites.SUITES[name](primes) if primes else suites.SUITES[name]()
    if name in ("sln-ring", "sln-count", "stacking"):
        if primes or ns:
            pairs = _pairs(primes or [5, 7], ns or [2, 3, 4])
            if name != "sln-ring":
                return suites.SUITES[name](pairs)
            small = [(p, n) for p, n in pairs if comb(p - 1, n - 1) <= 20]
            big = [(p, n) for p, n in pairs if comb(p - 1, n - 1) > 20]
            return suites.sln_ring(small, big, samples=args.samples or 500, seed=seed)
        if name == "sln-ring":
            return suites.sln_ring(samples=args.samples or 500, seed=seed)
        return suites.SUITES[name]()
    if name in ("padic", "factorize"):
        return suites.SUITES[name](samples=args.samples or 10_000, seed=seed)
    if name in ("sl2-steinberg", "factor-chars"):
        res = None
        for p in primes or [5]:
            res = suites.SUITES[name](p)
            if not res.ok:
                break
        return res
    if name == "kernel-dims":
        return suites.kernel_dims(primes=primes or (5, 7))
    raise InputError(f"unknown suite {name!r}")


def cmd_verify(args) -> CommandResult:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in suites.SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {sorted(suites.SUITES)} or all")
    results = []
    for name in names:
        res = _run_suite(name, args)
        results.append(res.as_dict())
        if not res.ok:
            print(f"{name}: counterexample {json.dumps(res.counterexample)}", file=sys.stderr)
            break
    status = "ok" if all(r["status"] == "ok" for r in results) else "property-violation"
    payload = results[0] if len(results) == 1 else {"suite": "all", "status": status, "results": results}
    return CommandResult(status, payload)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="verpfusion", description=__doc__.splitlines()[0])
    ap.add_argument("--cache", help="JSON memo store for Ver_p(SL(n)) fusion products")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("fuse", help="L_m (x) L_n in Ver_p")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--json", action="store_true", help="full document with qdim and fpdim")
    s.set_defaults(func=cmd_fuse)

    s = sub.add_parser("sln-fuse", help="fusion of two alcove weights in Ver_p(SL(n))")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-n", type=int, required=True)
    s.add_argument("lam")
    s.add_argument("mu")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sln_fuse)

    s = sub.add_parser("decompose", help="canonical p-adic decomposition lam = lam0 + p*mu")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("--shape", required=True)
    s.add_argument("weight")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("factorize", help="Steinberg factorization of a simple GL(X)-module label")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("--shape", required=True)
    s.add_argument("weight")
    s.add_argument("--V", help="plus-part labels as JSON, one list of partitions per block")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_factorize)

    s = sub.add_parser("kernel-dim", help="factored dimension of O(G_(r))")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("--shape", required=True)
    s.add_argument("-r", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_kernel_dim)

    s = sub.add_parser("verify", help="run a property suite")
    s.add_argument("suite", help=f"one of {', '.join(suites.SUITES)}, all")
    s.add_argument("-p", type=parse_int_list, default=None, help="comma-separated primes")
    s.add_argument("-n", type=parse_int_list, default=None, help="comma-separated ranks")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=None)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return ap


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        return CommandResult("input-error", {"error": str(exc)})
    if args.cache:
        versln.CACHE.load(args.cache)
    try:
        result = args.func(args)
    except (InputError, ValueError, NotImplementedError) as exc:
        return CommandResult("input-error", {"error": str(exc)})
    if args.cache:
        versln.CACHE.save(args.cache)
    return result


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    if result.status == "input-error":
        print(f"error: {result.payload['error']}", file=sys.stderr)
    print(json.dumps(result.payload, sort_keys=False))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
