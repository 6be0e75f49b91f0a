"""Command-line front end: ``hamilton [global flags] <command> [args]``."""
from __future__ import annotations

import json
import re
import shlex
import sys
from dataclasses import dataclass, field as dc_field

import click

from .automorphisms import basic_aut_catalog, decompose_automorphism, factor_unit
from .conjugacy import conjugacy_invariant
from .core import (annihilator, gram_matrix, inner, invert, is_quadratic, is_unit, is_zero_divisor, minimal_quadratic,
                   norm, star, trace)
from .errors import HamiltonError
from .field import Field
from .params import AlgebraParams
from .parser import GRAMMAR, ParseError, parse_element, parse_poly, parse_word
from .retracing import DEFAULT_BUDGET, refined_retrace, retrace
from .specialization import laffey_idempotents, maximal_ideals_above, radical_report, specialize, split_witness
from .words import omega_to_word, word_mul, word_to_omega


@dataclass
class CliConfig:
    field: str = "q"
    p: str = "t^2-t"
    q: str = "t^2-t"
    format: str = "text"
    budget: int = DEFAULT_BUDGET
    bound: int = 4
    lets: dict = dc_field(default_factory=dict)

    def params(self) -> AlgebraParams:
        return AlgebraParams.parse(_field(self.field), self.p, self.q)

    def global_args(self) -> list[str]:
        return ["--field", self.field, "--p", self.p, "--q", self.q, "--format", self.format,
                "--budget", str(self.budget), "--bound", str(self.bound)]


class UsageFailure(Exception):
    """Bad arguments or unparsable input (exit status 2)."""


def _field(spec: str) -> Field:
    try:
        return Field.parse(spec)
    except HamiltonError as exc:
        raise UsageFailure(str(exc)) from None


def _emit(cfg: CliConfig, text: str, payload: dict) -> None:
    if cfg.format == "json":
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(text)


_LET_REF = re.compile(r"\$([A-Za-z_][A-Za-z0-9_]*)")


def _expand(cfg: CliConfig, text: str) -> str:
    def sub(m):
        name = m.group(1)
        if name not in cfg.lets:
            raise UsageFailure(f"undefined name ${name}")
        return f"({cfg.lets[name]})"

    return _LET_REF.sub(sub, text)


def _element(cfg: CliConfig, params, text: str):
    try:
        return parse_element(_expand(cfg, text), params)
    except ParseError as exc:
        raise UsageFailure(f"cannot parse {text!r}: {exc}") from None


def _poly(cfg: CliConfig, field: Field, text: str):
    try:
        return parse_poly(text, field)
    except ParseError as exc:
        raise UsageFailure(f"cannot parse polynomial {text!r}: {exc}") from None


def _poly_json(r) -> dict:
    return {"text": r.render("t"), "coeffs": [r.field.render(c) for c in r.coeffs]}


def _el_json(x) -> dict:
    return {"text": x.render(compact=True), "coords": x.to_json()}


pass_cfg = click.make_pass_decorator(CliConfig)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--field", "field_spec", default="q", show_default=True, help="q (rationals) or fp:<prime>")
@click.option("--p", "p_text", default="t^2-t", show_default=True, help="minimal polynomial of a")
@click.option("--q", "q_text", default="t^2-t", show_default=True, help="minimal polynomial of b")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True, help="retracing step budget")
@click.option("--bound", type=int, default=4, show_default=True, help="search bound for split witnesses")
@click.pass_context
def cli(ctx, field_spec, p_text, q_text, fmt, budget, bound):
    """Exact computations in the free algebra generated by a, b with p(a) = 0 and q(b) = 0."""
    ctx.obj = CliConfig(field_spec, p_text, q_text, fmt, budget, bound, dict(ctx.obj or {}) if isinstance(ctx.obj, dict) else {})


# -- element commands -----------------------------------------------------------

@cli.command("eval")
@click.argument("expr")
@pass_cfg
def eval_cmd(cfg, expr):
    """Evaluate an expression in the deployed basis (1, a, b, ab)."""
    x = _element(cfg, cfg.params(), expr)
    _emit(cfg, x.render(), _el_json(x))


def _poly_command(name, fn, doc):
    @cli.command(name, help=doc)
    @click.argument("expr")
    @pass_cfg
    def cmd(cfg, expr):
        r = fn(_element(cfg, cfg.params(), expr))
        _emit(cfg, r.render("t"), _poly_json(r))

    return cmd


_poly_command("norm", norm, "Norm N(x) = x x* as a polynomial in t = w.")
_poly_command("trace", trace, "Trace tr(x) = x + x* as a polynomial in t = w.")


@cli.command("star")
@click.argument("expr")
@pass_cfg
def star_cmd(cfg, expr):
    """Adjoint x*."""
    x = star(_element(cfg, cfg.params(), expr))
    _emit(cfg, x.render(), _el_json(x))


@cli.command("inner")
@click.argument("x")
@click.argument("y")
@pass_cfg
def inner_cmd(cfg, x, y):
    """Inner product <x, y> = x y* + y x*."""
    P = cfg.params()
    r = inner(_element(cfg, P, x), _element(cfg, P, y))
    _emit(cfg, r.render("t"), _poly_json(r))


@cli.command("is-unit")
@click.argument("expr")
@pass_cfg
def is_unit_cmd(cfg, expr):
    x = _element(cfg, cfg.params(), expr)
    v = is_unit(x)
    _emit(cfg, str(v).lower(), {"is_unit": v, "norm": _poly_json(norm(x))})


@cli.command("invert")
@click.argument("expr")
@pass_cfg
def invert_cmd(cfg, expr):
    x = invert(_element(cfg, cfg.params(), expr))
    _emit(cfg, x.render(), _el_json(x))


@cli.command("is-zerodivisor")
@click.argument("expr")
@pass_cfg
def is_zd_cmd(cfg, expr):
    x = _element(cfg, cfg.params(), expr)
    v = is_zero_divisor(x)
    payload = {"is_zero_divisor": v}
    text = str(v).lower()
    if v:
        ann = annihilator(x)
        payload["annihilator"] = _el_json(ann)
        text += f"\nannihilator: {ann.render(compact=True)}"
    _emit(cfg, text, payload)


@cli.command("is-quadratic")
@click.argument("expr")
@pass_cfg
def is_quadratic_cmd(cfg, expr):
    x = _element(cfg, cfg.params(), expr)
    v = is_quadratic(x)
    payload = {"is_quadratic": v}
    text = str(v).lower()
    if v and not x.is_scalar():
        m = minimal_quadratic(x)
        payload["minimal_poly"] = _poly_json(m)
        text += f"\nminimal polynomial: {m.render()}"
    _emit(cfg, text, payload)


@cli.command("lambda")
@pass_cfg
def lambda_cmd(cfg):
    """The fundamental polynomial of (p, q)."""
    r = cfg.params().fundamental_polynomial
    _emit(cfg, r.render("t"), _poly_json(r))


@cli.command("gram")
@click.argument("exprs", nargs=-1)
@pass_cfg
def gram_cmd(cfg, exprs):
    """Gram matrix and determinant of the given elements (default 1 a b ab)."""
    P = cfg.params()
    exprs = exprs or ("1", "a", "b", "ab")
    G = gram_matrix([_element(cfg, P, e) for e in exprs])
    d = G.det()
    rows = [[e.render("t") for e in row] for row in G.rows]
    width = max(len(s) for row in rows for s in row)
    text = "\n".join("  ".join(s.rjust(width) for s in row) for row in rows) + f"\ndet: {d.render('t')}"
    _emit(cfg, text, {"matrix": rows, "det": _poly_json(d)})


# -- structure algorithms -------------------------------------------------------

def _factor_text(f) -> str:
    return f.render() if hasattr(f, "kind") else f"[{f}]"


def _outcome_text(out) -> str:
    facs = ", ".join(_factor_text(c) for c in out.conjugators) or "none"
    if out.ok:
        return f"success: {out.basic_result.render(compact=True)}\nconjugators: {facs}"
    lead = getattr(out, "zero_divisor_leading", None) or getattr(out, "witness", None)
    return f"failure at {out.at.render(compact=True)} (zero divisor {lead})\nconjugators: {facs}"


@cli.command("retrace")
@click.argument("expr")
@pass_cfg
def retrace_cmd(cfg, expr):
    """Conjugate a quadratic element by basic units towards a basic vector."""
    out = retrace(_element(cfg, cfg.params(), expr), cfg.budget)
    _emit(cfg, _outcome_text(out), out.to_json())


@cli.command("refined-retrace")
@click.argument("expr")
@pass_cfg
def refined_retrace_cmd(cfg, expr):
    """Conjugate by basic and semi-basic units towards a basic vector."""
    out = refined_retrace(_element(cfg, cfg.params(), expr), cfg.budget)
    _emit(cfg, _outcome_text(out), out.to_json())


@cli.command("factor-unit")
@click.argument("expr")
@pass_cfg
def factor_unit_cmd(cfg, expr):
    """Reduced decomposition of a unit into basic and semi-basic factors."""
    d = factor_unit(_element(cfg, cfg.params(), expr), cfg.budget)
    _emit(cfg, d.render(), d.to_json())


@cli.command("decompose-aut")
@click.argument("image_a")
@click.argument("image_b")
@pass_cfg
def decompose_aut_cmd(cfg, image_a, image_b):
    """Split the endomorphism a -> IMAGE_A, b -> IMAGE_B as inner(gamma) o basic."""
    P = cfg.params()
    dec = decompose_automorphism(_element(cfg, P, image_a), _element(cfg, P, image_b), cfg.budget)
    fac = factor_unit(dec.conjugator, cfg.budget)
    text = (f"basic: {dec.basic.render()}\nconjugator: {dec.conjugator.render(compact=True)}\n"
            f"factored: {fac.render()}")
    payload = dec.to_json()
    payload["factored"] = fac.to_json()
    _emit(cfg, text, payload)


@cli.command("conj-invariant")
@click.argument("expr")
@pass_cfg
def conj_invariant_cmd(cfg, expr):
    """Complete conjugacy invariant of a nonscalar quadratic element."""
    inv = conjugacy_invariant(_element(cfg, cfg.params(), expr), cfg.budget)
    _emit(cfg, inv.render(), inv.to_json())


@cli.command("basic-auts")
@pass_cfg
def basic_auts_cmd(cfg):
    """Catalogue of basic automorphisms."""
    cat = basic_aut_catalog(cfg.params())
    head = f"order {cat.order}" if cat.finite else "infinite (families with parameters c1, c2 in F^x)"
    _emit(cfg, "\n".join([head] + [e.render() for e in cat.entries]), cat.to_json())


# -- specializations ------------------------------------------------------------

@cli.command("specialize")
@click.argument("r")
@pass_cfg
def specialize_cmd(cfg, r):
    P = cfg.params()
    s = specialize(P, _poly(cfg, P.field, r))
    d = s.describe()
    text = f"r = {d['r']}: " + ("divides the fundamental polynomial" if d["divides_lambda"]
                                 else "quaternion algebra over the residue field")
    _emit(cfg, text, d)


@cli.command("radical")
@click.argument("r")
@pass_cfg
def radical_cmd(cfg, r):
    P = cfg.params()
    rep = radical_report(specialize(P, _poly(cfg, P.field, r)))
    text = f"dim_R = {rep.dim_R}\ndim_frakR = {rep.dim_frakR}\n" + "\n".join(
        f"  {e.render()}" for e in rep.radical_basis)
    _emit(cfg, text, rep.to_json())


@cli.command("max-ideals")
@click.argument("r")
@pass_cfg
def max_ideals_cmd(cfg, r):
    P = cfg.params()
    rep = maximal_ideals_above(P, _poly(cfg, P.field, r))
    lines = [f"count = {rep.count}"]
    for i, I in enumerate(rep.ideals):
        lines.append(f"ideal {i + 1}: " + "; ".join(e.render() for e in I))
    _emit(cfg, "\n".join(lines), rep.to_json())


@cli.command("split-witness")
@click.argument("r")
@pass_cfg
def split_witness_cmd(cfg, r):
    P = cfg.params()
    res = split_witness(specialize(P, _poly(cfg, P.field, r)), cfg.bound)
    if res.witness is not None:
        text = f"isotropic: {res.witness.render()}"
    else:
        text = "unknown: no witness up to the bound" if res.unknown else "none: the specialization does not split"
    _emit(cfg, text, res.to_json())


@cli.command("laffey")
@pass_cfg
def laffey_cmd(cfg):
    """Two idempotent 2x2 matrices generating all 2x2 matrices over the field."""
    res = laffey_idempotents(_field(cfg.field))
    if res.possible:
        text = f"delta = {res.delta}\nP = {_mat_text(res.P)}\nQ = {_mat_text(res.Q)}\nspan dimension {res.span_dimension}"
    else:
        text = f"impossible: {res.reason}"
    _emit(cfg, text, res.to_json())


def _mat_text(m) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in m) + "]"


# -- words ----------------------------------------------------------------------

def _word(cfg, params, text):
    try:
        return parse_word(_expand(cfg, text), params)
    except ParseError as exc:
        raise UsageFailure(f"cannot parse {text!r}: {exc}") from None


@cli.command("word-mul")
@click.argument("x")
@click.argument("y")
@click.option("--sorted", "sort", is_flag=True, help="list words lexicographically")
@pass_cfg
def word_mul_cmd(cfg, x, y, sort):
    """Product of two word expressions, rewritten to alternating words."""
    P = cfg.params()
    r = word_mul(_word(cfg, P, x), _word(cfg, P, y))
    _emit(cfg, r.render(sort=sort), {"text": r.render(sort=sort), "terms": {w or "()": P.field.render(c)
                                                                             for w, c in r.items()}})


@cli.command("convert")
@click.argument("expr")
@click.option("--to", "target", type=click.Choice(["omega", "word"]), required=True)
@pass_cfg
def convert_cmd(cfg, expr, target):
    """Convert between alternating words and the deployed basis over F[w]."""
    P = cfg.params()
    if target == "omega":
        x = word_to_omega(_word(cfg, P, expr))
        _emit(cfg, x.render(), _el_json(x))
    else:
        w = omega_to_word(_element(cfg, P, expr))
        _emit(cfg, w.render(), {"text": w.render()})


# -- batch ----------------------------------------------------------------------

@cli.command("batch")
@click.argument("path", type=click.File("r"))
@pass_cfg
def batch_cmd(cfg, path):
    """Run one command per line; '#' starts a comment, 'let NAME = EXPR' defines $NAME."""
    failures = 0
    lets: dict = {}
    for lineno, raw in enumerate(path, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"let\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)", line)
        if m:
            lets[m.group(1)] = _expand(CliConfig(lets=lets), m.group(2))
            continue
        argv = cfg.global_args() + shlex.split(line)
        status = run(argv, lets=lets)
        if status != 0:
            failures += 1
            click.echo(f"line {lineno}: exit status {status}", err=True)
    if failures:
        raise HamiltonError(f"{failures} batch line(s) failed")


# -- entry points ---------------------------------------------------------------

def run(argv: list[str], lets: dict | None = None) -> int:
    """Run the CLI on ``argv`` and return the exit status (0 ok, 1 domain error, 2 usage error)."""
    try:
        cli.main(args=list(argv), prog_name="hamilton", standalone_mode=False, obj=dict(lets or {}))
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except (click.UsageError, UsageFailure) as exc:
        msg = exc.format_message() if isinstance(exc, click.UsageError) else str(exc)
        click.echo(f"usage error: {msg}\n\nexpression grammar:\n{GRAMMAR}", err=True)
        return 2
    except ParseError as exc:
        click.echo(f"usage error: {exc}\n\nexpression grammar:\n{GRAMMAR}", err=True)
        return 2
    except click.Abort:
        return 1
    except HamiltonError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except ZeroDivisionError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
