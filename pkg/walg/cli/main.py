#  * Copyright (c) 2022-2023. Authors: see NOTICE file.
#  *
#  * Licensed under the Apache License, Version 2.0 (the "License");
#  * you may not use this file except in compliance with the License.
#  * You may obtain a copy of the License at
#  *
#  *      http://www.apache.org/licenses/LICENSE-2.0
#  *
#  * Unless required by applicable law or agreed to in writing, software
#  * distributed under the License is distributed on an "AS IS" BASIS,
#  * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  * See the License for the specific language governing permissions and
#  * limitations under the License.
"""
walg command line.

Every subcommand builds an `Artifact` which is rendered as text, JSON or
LaTeX. Exit status is 0 on success, 1 on a domain error and 2 on a usage
error; problems are written to stderr as JSON.
"""
import argparse
import logging
import sys
from functools import partial
from typing import Callable, List, Optional, Sequence

import orjson
import sympy

from walg import __version__
from walg.arith import HalfInt, format_rational, parse_rational
from walg.cli.models import JobConfig, OutputFormat, TableKind
from walg.cli.registry import resolve_registry
from walg.cli.render import (
    Artifact, combination_latex, combination_payload, emit, expansion_latex, expansion_payload,
    scalar_latex
)
from walg.cli.specs import parse_mode
from walg.cli.sweeps import bracket_table, n_coeff_table, vanishing_table
from walg.config import Settings, get_settings
from walg.exceptions import ProblemException, UnsupportedBracketProblem
from walg.freefield import (
    make_shift_current, make_w_current, match_B_constants, solve_alpha, wick_ope
)
from walg.freefield.solver import describe_b_table
from walg.logger import configure_logging
from walg.ope import (
    PoleRule, build_g_ope, build_soft_ope, build_wtilde_ope, canonicalize, describe_template,
    gg_realization_ope, known_b_constants, mode_extract
)
from walg.structure import (
    CouplingRegistry, Family, GeneratorMode, ModeCombination, Representation, cyclic_jacobi,
    kappa_conditions, make_mode, n_coeff, n_poly, soft_bracket, wtilde_bracket
)
from walg.structure.coefficients import describe_vanishing, format_polynomial_coefficients
from walg.supertwist import (
    BRST_LABEL, brst, brst_variation, contour_modes, g_pairing_zero, gg_anticommutator,
    rescale_limit, vhat_bracket, vhat_expression
)

log = logging.getLogger("walg.cli")

SUPER_FAMILIES = (Family.GPLUS, Family.GMINUS, Family.GHAT, Family.VHAT, Family.W)


def rational(value: str):
    parsed = parse_rational(value, raise_exc=False)
    if parsed is None:
        raise argparse.ArgumentTypeError(f"{value!r} is not an exact rational")
    return parsed


def half_integer(value: str) -> HalfInt:
    parsed = rational(value)
    if parsed.denominator not in (1, 2):
        raise argparse.ArgumentTypeError(f"{value!r} is not a half-integer")
    return HalfInt.of(parsed)


def combination_artifact(kind: str, c: ModeCombination, **extra) -> Artifact:
    notes = [f"dropped: {d}" for d in c.dropped]
    return Artifact(kind, {**extra, **combination_payload(c)}, str(c), combination_latex(c), notes)


# Brackets

def fermionic_bracket(a: GeneratorMode, b: GeneratorMode, reg: CouplingRegistry,
                      pole_rule: PoleRule = PoleRule.PRINTED) -> ModeCombination:
    pair = {a.family, b.family}
    if pair != {Family.GMINUS, Family.GPLUS}:
        return g_pairing_zero(a, b)
    minus, plus = (a, b) if a.family is Family.GMINUS else (b, a)
    B, Btilde = known_b_constants(minus.q, plus.q)
    return gg_anticommutator(minus, plus, reg, B, Btilde, pole_rule)


def bracket_modes(a: GeneratorMode, b: GeneratorMode, reg: CouplingRegistry,
                  truncate_p: Optional[int] = None) -> ModeCombination:
    families = (a.family, b.family)
    if families == (Family.WTILDE, Family.WTILDE):
        return wtilde_bracket(a, b, reg, truncate_p)
    if families == (Family.H, Family.H):
        return soft_bracket(a, b, reg, truncate_p)
    if families == (Family.VHAT, Family.VHAT):
        return vhat_bracket(a.q, a.m, b.q, b.m)
    if a.family.is_fermionic and b.family.is_fermionic and Family.GHAT not in families:
        return fermionic_bracket(a, b, reg)
    if set(families) <= {Family.W, Family.GHAT}:
        return rescale_limit().bracket(a, b)
    raise UnsupportedBracketProblem(a, b)


def cmd_bracket(args, settings: Settings) -> Artifact:
    a, b = parse_mode(args.a), parse_mode(args.b)
    reg = resolve_registry(args.registry, settings)
    return combination_artifact("bracket", bracket_modes(a, b, reg, args.truncate_p),
                                left=str(a), right=str(b))


def cmd_jacobi(args, settings: Settings) -> Artifact:
    a, b, c = (parse_mode(x) for x in (args.a, args.b, args.c))
    reg = resolve_registry(args.registry, settings)
    bracket = partial(bracket_modes, reg=reg, truncate_p=args.truncate_p)
    residual = cyclic_jacobi(a, b, c, bracket)
    artifact = combination_artifact("jacobi", residual, modes=[str(a), str(b), str(c)])
    artifact.notes.insert(0, "identity holds" if residual.is_empty else "identity fails")
    return artifact


# Coefficients and couplings

def cmd_n_coeff(args, settings: Settings) -> Artifact:
    rep = Representation(args.rep)
    if args.symbolic:
        poly = n_poly(args.q1, args.q2, args.p, rep)
        rows = format_polynomial_coefficients(poly)
        data = {"q1": str(args.q1), "q2": str(args.q2), "p": args.p,
                "polynomial": str(poly), "monomials": dict(rows)}
        return Artifact("n-coeff", data, str(poly), sympy.latex(poly.expr))

    if args.m is None or args.n is None:
        raise ValueError("--m and --n are required unless --symbolic is given")
    value = n_coeff(args.q1, args.q2, args.m, args.n, args.p, rep)
    data = {"q1": str(args.q1), "q2": str(args.q2), "m": str(args.m), "n": str(args.n),
            "p": args.p, "rep": rep.value, "value": format_rational(value)}
    return Artifact("n-coeff", data, format_rational(value), scalar_latex(value))


def cmd_kappa_check(args, settings: Settings) -> Artifact:
    reg = resolve_registry(args.registry, settings)
    violations = kappa_conditions(reg)
    data = {
        "satisfied": not violations,
        "violations": [
            {"constraint": v.constraint.name, "kind": v.kind.value,
             "lhs": None if v.lhs is None else format_rational(v.lhs),
             "rhs": None if v.rhs is None else format_rational(v.rhs),
             "key": None if v.key is None else str(v.key)}
            for v in violations
        ],
    }
    text = "all constraints hold" if not violations else "\n".join(str(v) for v in violations)
    artifact = Artifact("kappa-check", data, text)
    artifact.status = 1 if violations else 0
    return artifact


# OPEs

def _wtilde_template(args, settings: Settings):
    reg = resolve_registry(args.registry, settings)
    return build_wtilde_ope(args.q1, args.s1, args.q2, args.s2, reg, args.truncate_p)


def cmd_ope(args, settings: Settings) -> Artifact:
    if args.soft:
        reg = resolve_registry(args.registry, settings)
        alpha_max = settings.alpha_max if args.alpha_max is None else args.alpha_max
        expansion = build_soft_ope(args.q1, args.s1, args.q2, args.s2, reg, alpha_max, args.truncate_p)
        return Artifact("ope", expansion_payload(expansion), str(expansion), expansion_latex(expansion),
                        [f"dropped {d}" for d in expansion.dropped])

    template = _wtilde_template(args, settings)
    notes = [f"dropped {d}" for d in template.dropped]
    if args.raw:
        data = {
            "pole_rule": template.pole_rule.value,
            "terms": [
                {"coeff": format_rational(t.coeff), "zbar_order": t.zbar_order,
                 "wbar_order": t.wbar_order, "pole": t.pole, "target": str(t.target),
                 "origin": list(t.origin) if t.origin else None}
                for t in template
            ],
        }
        return Artifact("ope-template", data, describe_template(template), notes=notes)
    expansion = canonicalize(template)
    return Artifact("ope", expansion_payload(expansion), str(expansion), expansion_latex(expansion), notes)


def cmd_mode_extract(args, settings: Settings) -> Artifact:
    a = make_mode(Family.WTILDE, args.q1, args.m, args.s1)
    b = make_mode(Family.WTILDE, args.q2, args.n, args.s2)
    reg = resolve_registry(args.registry, settings)
    template = build_wtilde_ope(args.q1, args.s1, args.q2, args.s2, reg, args.truncate_p)
    result = mode_extract(canonicalize(template), args.m, args.n, args.q1, args.q2)
    artifact = combination_artifact("mode-extract", result, left=str(a), right=str(b))
    agrees = result == wtilde_bracket(a, b, reg, args.truncate_p)
    artifact.notes.insert(0, f"agrees with the mode bracket: {agrees}")
    return artifact


# Free fields

def _currents(args):
    if args.shift:
        return make_shift_current(args.q1), make_shift_current(args.q2)
    return make_w_current(args.q1, args.kappa), make_w_current(args.q2, args.kappa)


def cmd_wick(args, settings: Settings) -> Artifact:
    left, right = _currents(args)
    expansion = wick_ope(left, right, args.order)
    notes = [f"unrecognized at pole {r.pole}: {r}" for r in expansion.residuals]
    return Artifact("wick", expansion_payload(expansion), str(expansion), expansion_latex(expansion), notes)


def cmd_solve_alpha(args, settings: Settings) -> Artifact:
    left, right = _currents(args)
    reg = CouplingRegistry.uniform(args.kappa)
    target = canonicalize(build_wtilde_ope(args.q1, args.s1, args.q2, args.s2, reg, args.truncate_p))
    solution = solve_alpha(args.order_max, target, left, right, args.k_degree)
    data = {
        "consistent": solution.consistent,
        "alpha": {f"{q},{a},{b}": str(expr) for (q, a, b), expr in sorted(solution.table.items())},
        "free": [str(s) for s in solution.free],
        "failing": None if solution.failing is None else solution.failing.to_dict(),
    }
    if solution.consistent:
        text = "\n".join(f"alpha[q={q}]_({a},{b})(k) = {expr}"
                         for (q, a, b), expr in sorted(solution.table.items()))
    else:
        text = f"inconsistent at {solution.failing.slot}: {solution.failing.lhs} = {solution.failing.rhs}"
    artifact = Artifact("solve-alpha", data, text)
    artifact.status = 0 if solution.consistent else 1
    return artifact


def cmd_match_b(args, settings: Settings) -> Artifact:
    q1 = sympy.Symbol("q1") if args.q1 is None else args.q1
    q2 = sympy.Symbol("q2") if args.q2 is None else args.q2
    template = build_g_ope(q1, q2, pole_rule=PoleRule(args.pole_rule))
    result = match_B_constants(gg_realization_ope(q1, q2), template)
    data = {
        "consistent": result.consistent,
        "B": describe_b_table(result.B),
        "Btilde": describe_b_table(result.Btilde),
        "free": list(result.free),
        "failing": None if result.failing is None else result.failing.to_dict(),
    }
    lines = [f"B^{k} = {v}" for k, v in data["B"].items()]
    lines += [f"Btilde^{k} = {v}" for k, v in data["Btilde"].items()]
    if not result.consistent:
        lines = [f"inconsistent at {result.failing.slot}"]
    artifact = Artifact("match-b", data, "\n".join(lines))
    artifact.status = 0 if result.consistent else 1
    return artifact


# Super sector

def cmd_twist_brst(args, settings: Settings) -> Artifact:
    q = brst()
    selected = contour_modes(BRST_LABEL.q)
    data = {"operator": str(q), "contour_selects": [str(r) for r in selected]}
    return Artifact("brst", data, f"Q = {q}", notes=[f"contour selects r = {', '.join(map(str, selected))}"])


def cmd_twist_vhat(args, settings: Settings) -> Artifact:
    reg = resolve_registry(args.registry, settings)
    B, Btilde = known_b_constants(BRST_LABEL.q, args.q)
    result = vhat_expression(args.q, B, Btilde, reg, coupling_offset=settings.g_coupling_offset)
    data = expansion_payload(result.expansion)
    data["q"] = str(result.q)
    data["origins"] = [
        {"dbar_order": d, "target": str(target), "origins": [list(o) for o in origins]}
        for (d, target), origins in result.origins
    ]
    variation = brst_variation(args.q, args.m) if args.m is not None else None
    notes = [] if variation is None else [f"[Q, Vhat^{args.q}_{args.m}] = {variation}"]
    return Artifact("vhat", data, str(result.expansion), expansion_latex(result.expansion), notes)


def cmd_twist_bracket(args, settings: Settings) -> Artifact:
    a, b = parse_mode(args.a), parse_mode(args.b)
    if a.family not in SUPER_FAMILIES or b.family not in SUPER_FAMILIES:
        raise UnsupportedBracketProblem(a, b)
    reg = resolve_registry(args.registry, settings)
    return combination_artifact("twist-bracket", bracket_modes(a, b, reg), left=str(a), right=str(b))


def cmd_twist_rescale(args, settings: Settings) -> Artifact:
    algebra = rescale_limit(p_keep=args.p_keep)
    rows = algebra.table(args.q_max)
    data = {
        "p": algebra.p,
        "brackets": [
            {"pair": name, "q1": q1, "q2": q2, "target_q": q3, "coeff": str(coeff)}
            for name, q1, q2, q3, coeff in rows
        ],
    }
    text = "\n".join(f"[{name}] q1={q1} q2={q2} -> q={q3}: {coeff}" for name, q1, q2, q3, coeff in rows)
    return Artifact("rescale", data, text)


# Tables

def cmd_table(args, settings: Settings) -> Artifact:
    job = JobConfig(
        command=args.kind, q_range=args.q_range, q_step=args.step, p_max=args.p_max,
        truncate_p=args.truncate_p, s=args.s, registry=args.registry,
        max_workers=args.workers or settings.max_workers
    )
    if job.command is TableKind.N_COEFF:
        header = ("q1", "q2", "m", "n", "p", "N")
        rows = n_coeff_table(job.q_range, job.p_max, job.q_step, job.max_workers)
    elif job.command is TableKind.BRACKET:
        reg = resolve_registry(job.registry, settings)
        header = ("left", "right", "bracket")
        rows = bracket_table(job.q_range, job.s, reg, job.truncate_p, job.q_step, job.max_workers)
    else:
        header = ("q1", "q2", "p", "N")
        rows = vanishing_table(job.q_range, job.s, job.q_step, job.max_workers)

    data = {"table": job.command.value, "columns": list(header), "rows": [list(r) for r in rows]}
    text = "\n".join("\t".join(r) for r in [header] + rows)
    if job.command is TableKind.VANISHING:
        by_pair = {}
        for q1, q2, p, state in rows:
            by_pair.setdefault((q1, q2), []).append((int(p), state == "vanishes"))
        latex = "\n".join(f"({q1},{q2}): {describe_vanishing(r)}" for (q1, q2), r in by_pair.items())
        return Artifact("table", data, text, latex)
    return Artifact("table", data, text)


# Parser

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                        help="Output format (default from WALG_OUTPUT_FORMAT)")
    common.add_argument("--output", default=None, help="Write the result to this file")
    common.add_argument("--debug", action="store_true", default=None, help="Debug logging")
    return common


def _add(subparsers, name: str, handler: Callable, common, help_: str) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, parents=[common], help=help_, description=help_)
    parser.set_defaults(handler=handler)
    return parser


def _weights(parser, spins: bool = True):
    parser.add_argument("--q1", type=half_integer, required=True)
    parser.add_argument("--q2", type=half_integer, required=True)
    if spins:
        parser.add_argument("--s1", type=half_integer, default=HalfInt.of(2))
        parser.add_argument("--s2", type=half_integer, default=HalfInt.of(2))


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="walg", description="Exact structure constants of W-tilde_{1+infinity}")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = _add(sub, "n-coeff", cmd_n_coeff, common, "Bracket coefficient N(q1, q2, m, n, p)")
    _weights(p, spins=False)
    p.add_argument("--m", type=half_integer)
    p.add_argument("--n", type=half_integer)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--rep", choices=[r.value for r in Representation], default=Representation.DEF.value)
    p.add_argument("--symbolic", action="store_true", help="Polynomial in m and n")

    p = _add(sub, "bracket", cmd_bracket, common, "Bracket of two modes")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--registry")
    p.add_argument("--truncate-p", type=int, default=None)

    p = _add(sub, "ope", cmd_ope, common, "OPE of two currents")
    _weights(p)
    p.add_argument("--registry")
    p.add_argument("--truncate-p", type=int, default=None)
    p.add_argument("--soft", action="store_true", help="Soft currents; --q1, --q2 are dimensions k")
    p.add_argument("--alpha-max", type=int, default=None)
    p.add_argument("--raw", action="store_true", help="Template before canonicalization")

    p = _add(sub, "mode-extract", cmd_mode_extract, common, "Bracket read off the OPE")
    _weights(p)
    p.add_argument("--m", type=half_integer, required=True)
    p.add_argument("--n", type=half_integer, required=True)
    p.add_argument("--registry")
    p.add_argument("--truncate-p", type=int, default=None)

    p = _add(sub, "jacobi", cmd_jacobi, common, "Cyclic Jacobi combination of three modes")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("--registry")
    p.add_argument("--truncate-p", type=int, default=None)

    p = _add(sub, "kappa-check", cmd_kappa_check, common, "Check the coupling constraints")
    p.add_argument("--registry", required=True)

    for name, handler, help_ in (
        ("wick", cmd_wick, "Wick OPE of two bilinear currents"),
        ("solve-alpha", cmd_solve_alpha, "Solve realization coefficients"),
    ):
        p = _add(sub, name, handler, common, help_)
        _weights(p, spins=name == "solve-alpha")
        p.add_argument("--kappa", type=rational, default=parse_rational("1"))
        p.add_argument("--shift", action="store_true", help="Use shift currents")
        if name == "wick":
            p.add_argument("--order", type=int, default=1)
        else:
            p.add_argument("--order-max", type=int, default=1)
            p.add_argument("--k-degree", type=int, default=2)
            p.add_argument("--truncate-p", type=int, default=None)

    p = _add(sub, "match-b", cmd_match_b, common, "Solve the fermionic structure constants")
    p.add_argument("--q1", type=half_integer, default=None)
    p.add_argument("--q2", type=half_integer, default=None)
    p.add_argument("--pole-rule", choices=[r.value for r in PoleRule], default=PoleRule.PRINTED.value)

    twist = sub.add_parser("twist", help="BRST and topological sector")
    tsub = twist.add_subparsers(dest="twist_command", required=True)
    _add(tsub, "brst", cmd_twist_brst, common, "The BRST operator")
    p = _add(tsub, "vhat", cmd_twist_vhat, common, "Topological generator V-hat^q")
    p.add_argument("--q", type=half_integer, required=True)
    p.add_argument("--m", type=half_integer, default=None, help="Also check [Q, V-hat^q_m]")
    p.add_argument("--registry")
    p = _add(tsub, "bracket", cmd_twist_bracket, common, "Bracket in the super sector")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--registry")
    p = _add(tsub, "rescale", cmd_twist_rescale, common, "Reduced brackets of the rescaled limit")
    p.add_argument("--q-max", type=half_integer, required=True)
    p.add_argument("--p-keep", type=int, default=1)

    p = _add(sub, "table", cmd_table, common, "Exhaustive tables over a weight range")
    p.add_argument("kind", choices=[k.value for k in TableKind])
    p.add_argument("--q-range", required=True, help="Inclusive range LOW:HIGH")
    p.add_argument("--step", default="1/2", choices=["1/2", "1"])
    p.add_argument("--p-max", type=int, default=8)
    p.add_argument("--truncate-p", type=int, default=None)
    p.add_argument("--s", default="2")
    p.add_argument("--registry")
    p.add_argument("--workers", type=int, default=None)
    return parser


def _problem(status: int, content: dict) -> int:
    sys.stderr.write(orjson.dumps({"status": status, **content}).decode() + "\n")
    return status


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(debug=args.debug)
    settings = get_settings()
    fmt = OutputFormat(args.format or settings.output_format)
    try:
        artifact = args.handler(args, settings)
        emit(artifact, fmt, args.output)
    except ProblemException as e:
        return _problem(e.status, e.content())
    except ValueError as e:
        return _problem(2, {"title": "Invalid value", "detail": str(e)})
    return artifact.status


def main(argv: Optional[List[str]] = None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
