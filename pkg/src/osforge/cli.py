"""``os-forge`` command line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad input,
3 the generic initial ideal could not be pinned down (try another seed or a
larger field).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import homology as hom
from . import poly
from .classify import (classify_linear_resolution, predicted_betti, predicted_invariants,
                       rank3_profile)
from .exterior import ExteriorElement, MonomialOrder, parse_element, render
from .field import FieldContext
from .groebner import GinError, gin, initial_ideal
from .matroid import (Matroid, MatroidError, beta_invariant, characteristic_polynomial,
                      classify_elements, components, nbc_masks, parse_matroid)
from .osalg import hilbert_nbc, os_ideal
from .verify import SUITES, run_suite

SCHEMA = 1
EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_GENERICITY = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    field: FieldContext
    imax: int = 4
    seed: int = 0
    trials: int = 8
    order: MonomialOrder = MonomialOrder.STD_REVLEX
    format: str = "json"

    @classmethod
    def from_args(cls, args) -> RunConfig:
        try:
            fld = FieldContext.parse(args.field)
            order = MonomialOrder.parse(args.order)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if args.imax < 0 or args.trials < 0:
            raise InputError("--imax and --trials must be nonnegative")
        return cls(fld, args.imax, args.seed, args.trials, order, args.format)


# ---------------------------------------------------------------- input

def load_matroid(text: str) -> Matroid:
    return parse_matroid(text)


def load_ideal(text: str, field: FieldContext) -> tuple[int, list[ExteriorElement], str]:
    """An ideal from a matroid expression/file (its OS ideal) or an ideal JSON.

    Ideal JSON: ``{"n": 4, "generators": [[1, 2], "e[1,3] - e[2,3]"]}``;
    index lists are monomials and strings use the element text format.
    """
    data = None
    path = Path(text)
    if text.lstrip().startswith("{"):
        data = json.loads(text)
    elif path.suffix == ".json" and path.exists():
        data = json.loads(path.read_text())
    if data is None or "circuits" in data:
        m = parse_matroid(text) if data is None else Matroid.from_json(data)
        return m.n, list(os_ideal(m, field).generators), "os"
    if "n" not in data:
        raise InputError("ideal JSON needs an 'n' field")
    n = int(data["n"])
    gens = []
    for g in data.get("generators", []):
        if isinstance(g, str):
            gens.append(parse_element(g, n, field))
        else:
            if any(not 1 <= int(i) <= n for i in g):
                raise InputError(f"generator {g} has an index outside 1..{n}")
            gens.append(ExteriorElement.monomial(n, [int(i) for i in g], 1, field))
    for g in gens:
        if not g.is_zero and not g.is_homogeneous:
            raise InputError(f"generator {g} is not homogeneous")
    return n, gens, "ideal"


# ---------------------------------------------------------------- output

def emit(payload: dict, cfg: RunConfig, table: str | None = None):
    if cfg.format == "table" and table is not None:
        print(table)
    else:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))


def _config_dict(cfg: RunConfig) -> dict:
    return {"field": cfg.field.name, "imax": cfg.imax, "seed": cfg.seed, "trials": cfg.trials}


# ---------------------------------------------------------------- commands

def cmd_matroid_info(args, cfg: RunConfig) -> int:
    m = load_matroid(args.matroid)
    ec = classify_elements(m)
    p = characteristic_polynomial(m)
    payload = {
        "n": m.n, "rank": m.rank, "circuits": [list(c) for c in m.circuits],
        "components": [list(c) for c in components(m)],
        "loops": list(ec.loops), "coloops": list(ec.coloops),
        "parallel_classes": [list(c) for c in ec.parallel_classes], "simple": ec.is_simple,
        "flats": len(m.lattice), "characteristic_polynomial": p,
        "beta": beta_invariant(m), "nbc_count": len(nbc_masks(m)),
    }
    table = "\n".join([
        f"n = {m.n}, rank = {m.rank}",
        f"components: {payload['components']}",
        f"loops {payload['loops']}, coloops {payload['coloops']}, parallel {payload['parallel_classes']}",
        f"flats: {payload['flats']}",
        f"p(t) = {poly.render(p)}",
        f"beta = {payload['beta']}",
        f"nbc sets: {payload['nbc_count']}",
    ])
    emit(payload, cfg, table)
    return EXIT_OK


def cmd_os(args, cfg: RunConfig) -> int:
    m = load_matroid(args.matroid)
    gens = list(os_ideal(m, cfg.field).generators)
    sub = args.os_command
    base = {"matroid": m.to_json(), **_config_dict(cfg)}
    if sub == "ideal":
        payload = {**base, "generators": [render(g) for g in gens]}
        emit(payload, cfg, "\n".join(render(g) for g in gens) or "(zero ideal)")
    elif sub == "hilbert":
        h = hilbert_nbc(m)
        fac = hom.hilbert_factor(h) if h else None
        payload = {**base, "hilbert": h,
                   "factor": None if fac is None else {"s": fac.s, "q": fac.q}}
        emit(payload, cfg, f"H(E/J,t) = {poly.render(h)}")
    elif sub == "betti":
        target = args.module
        module = (hom.module_from_ideal(gens, m.n, cfg.field) if target == "ideal"
                  else hom.module_from_quotient(gens, m.n, cfg.field))
        b = hom.betti_table(module, cfg.imax)
        payload = {**base, "module": target, "betti": b.as_list(), "totals": b.totals()}
        emit(payload, cfg, b.render())
    elif sub == "bass":
        b = hom.bass_table(gens, m.n, cfg.field, cfg.imax)
        payload = {**base, "bass": b.as_list(), "totals": b.totals()}
        emit(payload, cfg, b.render())
    elif sub == "invariants":
        inv = hom.invariants(gens, m.n, cfg.field, imax=min(cfg.imax, 3), seed=cfg.seed,
                             trials=cfg.trials)
        payload = {**base, **inv.as_dict()}
        table = ("E/J = 0 (the matroid has a loop)" if inv.zero else
                 f"depth {inv.depth}, cx {inv.cx}, reg {inv.reg}, d {inv.d}, "
                 f"H = {poly.render(inv.hilbert)} [{inv.method}]")
        emit(payload, cfg, table)
    elif sub == "check-linear":
        proj = (hom.has_linear_projective(gens, m.n, cfg.field, cfg.imax, cfg.seed)
                if not hom.module_from_ideal(gens, m.n, cfg.field).is_zero else None)
        inj = (hom.has_linear_injective(gens, m.n, cfg.field, cfg.imax)
               if not hom.module_from_quotient(gens, m.n, cfg.field).is_zero else None)
        payload = {**base,
                   "projective": None if proj is None else {"linear": proj.linear, "d": proj.d,
                                                             "gin_certificate": proj.certificate},
                   "injective": None if inj is None else {"linear": inj.linear, "d": inj.d}}

        def word(r):
            if r is None:
                return "n/a (zero module)"
            return f"linear (d={r.d})" if r.linear else "not linear"

        emit(payload, cfg, f"projective: {word(proj)}\ninjective: {word(inj)}")
    return EXIT_OK


def cmd_ideal(args, cfg: RunConfig) -> int:
    n, gens, _ = load_ideal(args.ideal, cfg.field)
    if args.ideal_command == "ini":
        res = initial_ideal(gens, n, cfg.field, cfg.order)
        payload = {"n": n, "order": cfg.order.value, "field": cfg.field.name,
                   "generators": res.to_json()["generators"]}
    else:
        res = gin(gens, n, cfg.field, attempts=args.attempts, seed=cfg.seed)
        payload = {"n": n, "field": cfg.field.name, "seed": cfg.seed, "attempts": args.attempts,
                   "generators": res.to_json()["generators"]}
    emit(payload, cfg, str(res))
    return EXIT_OK


def cmd_module_depth(args, cfg: RunConfig) -> int:
    n, gens, _ = load_ideal(args.input, cfg.field)
    if args.kind == "quotient":
        module = hom.module_from_quotient(gens, n, cfg.field)
    elif args.kind == "ideal":
        module = hom.module_from_ideal(gens, n, cfg.field)
    else:
        module = hom.module_from_ideal(hom.annihilator_terms(gens, n, cfg.field), n, cfg.field)
    if module.is_zero:
        raise InputError("depth of the zero module is undefined")
    upper = None
    if args.kind in ("quotient", "annihilator"):
        try:
            G = gin(gens, n, cfg.field, seed=cfg.seed)
            upper = n - (0 if G.is_zero else max(u.bit_length() for u in G.gens))
        except GinError:
            upper = None
    res = hom.depth(module, trials=cfg.trials, seed=cfg.seed, upper=upper)
    payload = {"n": n, "kind": args.kind, **_config_dict(cfg), "depth": res.value,
               "upper": res.upper, "sequence": res.sequence, "method": res.method}
    emit(payload, cfg, f"depth {res.value} [{res.method}]")
    return EXIT_OK


def cmd_classify(args, cfg: RunConfig) -> int:
    m = load_matroid(args.matroid)
    cls = classify_linear_resolution(m)
    loopless = not classify_elements(m).loops
    pred = predicted_invariants(m) if loopless else None
    payload = {
        "matroid": m.to_json(), "class": cls.variant, "parameters": cls.parameters(),
        "predicted_betti": [predicted_betti(m, i) for i in range(cfg.imax + 1)],
        "predicted_invariants": None if pred is None else
        {"depth": pred.depth, "cx": pred.cx, "reg": pred.reg, "d": pred.d},
        "rank3_profile": rank3_profile(m).value,
    }
    emit(payload, cfg, f"{cls.variant} {cls.parameters()}")
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    report = run_suite(args.suite, cfg.field, cfg.imax, cfg.seed, cfg.trials, cases=args.cases)
    payload = report.as_dict(include_passing=args.verbose)
    lines = [f"{tag}: {v['passed']}/{v['total']}  {v['statement']}"
             for tag, v in payload["summary"].items()]
    lines += [f"FAIL {f['tag']} {f['instance']}: expected {f['expected']}, got {f['got']}"
              for f in payload["failures"]]
    lines.append("PASS" if report.passed else "FAIL")
    emit(payload, cfg, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_CHECK


# ---------------------------------------------------------------- parser

def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # options may appear before or after the subcommand; only the top level sets defaults
    common = argparse.ArgumentParser(add_help=False)

    def d(value):
        return argparse.SUPPRESS if suppress else value

    common.add_argument("--field", default=d("p:32003"), help="q (rationals) or p:<prime>")
    common.add_argument("--imax", type=int, default=d(4), help="largest homological degree")
    common.add_argument("--seed", type=int, default=d(0))
    common.add_argument("--trials", type=int, default=d(8), help="random forms tried per depth step")
    common.add_argument("--order", default=d("std"), help="monomial order: std or rev")
    common.add_argument("--format", choices=("json", "table"), default=d("json"))
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options(suppress=True)
    parser = argparse.ArgumentParser(prog="os-forge", parents=[_common_options(suppress=False)],
                                     description="Exterior algebra and Orlik-Solomon computations.")
    top = parser.add_subparsers(dest="command", required=True)

    mat = top.add_parser("matroid", parents=[common], help="matroid invariants")
    mat_sub = mat.add_subparsers(dest="matroid_command", required=True)
    info = mat_sub.add_parser("info", parents=[common])
    info.add_argument("matroid", help="JSON file, JSON text or expression like U(2,3)+U(1,1)")

    os_p = top.add_parser("os", parents=[common], help="Orlik-Solomon algebra of a matroid")
    os_sub = os_p.add_subparsers(dest="os_command", required=True)
    for name in ("ideal", "hilbert", "betti", "bass", "invariants", "check-linear"):
        sp = os_sub.add_parser(name, parents=[common])
        sp.add_argument("matroid")
        if name == "betti":
            sp.add_argument("--module", choices=("ideal", "quotient"), default="ideal",
                            help="resolve J itself or E/J")

    ideal = top.add_parser("ideal", parents=[common], help="initial and generic initial ideals")
    ideal_sub = ideal.add_subparsers(dest="ideal_command", required=True)
    ini = ideal_sub.add_parser("ini", parents=[common])
    ini.add_argument("ideal", help="ideal JSON or a matroid (its OS ideal)")
    g = ideal_sub.add_parser("gin", parents=[common])
    g.add_argument("ideal")
    g.add_argument("--attempts", type=int, default=3)

    mod = top.add_parser("module", parents=[common], help="module invariants")
    mod_sub = mod.add_subparsers(dest="module_command", required=True)
    dep = mod_sub.add_parser("depth", parents=[common])
    dep.add_argument("input", help="ideal JSON or a matroid")
    dep.add_argument("--kind", choices=("quotient", "ideal", "annihilator"), default="quotient")

    cl = top.add_parser("classify", parents=[common], help="linear resolution class of J(M)")
    cl.add_argument("matroid")

    ver = top.add_parser("verify", parents=[common], help="run theorem batteries on the corpus")
    ver.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES])
    ver.add_argument("--cases", type=int, default=1000, help="random cases per property battery")
    ver.add_argument("--verbose", action="store_true", help="list passing checks too")
    return parser


COMMANDS = {
    "matroid": cmd_matroid_info,
    "os": cmd_os,
    "ideal": cmd_ideal,
    "module": cmd_module_depth,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[args.command](args, cfg)
    except GinError as exc:
        print(f"genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except MatroidError as exc:
        witness = f" (witness: {exc.witness})" if getattr(exc, "witness", None) is not None else ""
        print(f"invalid matroid: {exc}{witness}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
