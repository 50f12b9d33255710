"""Command-line front end.

Exit codes: 0 success, 1 identity violated, 2 parse error, 3 domain error,
4 precision or tolerance not achievable.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import comb, harmonic, ncalg, verify, zeta
from .ncalg import NCPolynomial
from .parsing import ParseError, parse_expression, parse_word_literal
from .rings import PrecisionContext, PrecisionError
from .taylor import TaylorSeries
from .words import X, Y, AlphabetError, DomainError

EXIT_OK, EXIT_VIOLATED, EXIT_PARSE, EXIT_DOMAIN, EXIT_PRECISION = 0, 1, 2, 3, 4


@dataclass
class Output:
    text: str
    record: dict
    header: tuple[str, ...] = ()
    rows: list = field(default_factory=list)
    code: int = EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.record, sort_keys=False)
        if fmt == "csv":
            if not self.header:
                raise DomainError("this command has no tabular output; use --format text or json")
            lines = [",".join(self.header)] + [",".join(str(c) for c in row) for row in self.rows]
            return "\n".join(lines)
        return self.text


def _poly_output(op: str, inputs: dict, P: NCPolynomial) -> Output:
    text = str(P)
    rows = [(str(w), c) for w, c in P.items()]
    return Output(text, {"operation": op, "inputs": inputs, "value": text}, ("word", "coefficient"), rows)


def _taylor_output(op: str, inputs: dict, T: TaylorSeries) -> Output:
    coeffs = [str(c) for c in T.coeffs]
    return Output(str(T), {"operation": op, "inputs": inputs, "value": coeffs}, ("order", "coefficient"), list(enumerate(coeffs)))


def _numeric_output(op: str, inputs: dict, v: zeta.CharacterValue, ctx: PrecisionContext) -> Output:
    mp = ctx.mp
    text = f"{mp.nstr(v.value, ctx.digits)}  (error <= {v.error:.3e})"
    rec = v.to_record(op, inputs)
    return Output(text, rec, ("re", "im", "error_bound"), [(rec["value"]["re"], rec["value"]["im"], rec["error_bound"])])


def _ctx(args) -> PrecisionContext:
    return PrecisionContext(args.prec)


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ParseError(f"cannot read {text!r} as a complex number", 0, text) from None


# --------------------------------------------------------------------------
# commands


def cmd_product(args) -> Output:
    alphabet = X if re.search(r"x\d", args.left + args.right) else Y
    P = parse_expression(args.left, alphabet)
    Q = parse_expression(args.right, alphabet)
    op = {"shuffle": ncalg.shuffle, "stuffle": ncalg.stuffle, "conc": ncalg.conc}[args.op]
    R = op(P, Q)
    if args.trunc is not None:
        R = NCPolynomial([(w, c) for w, c in R.items() if w.weight <= args.trunc], R.alphabet, R.ring)
    return _poly_output("product", {"op": args.op, "left": args.left, "right": args.right}, R)


def cmd_hsum(args) -> Output:
    P = parse_expression(args.expr, Y)
    if args.format == "csv":
        values = harmonic.hsum_values(P, args.upper)
        rows = [(n, v) for n, v in enumerate(values)]
        return Output("", {}, ("N", "value"), rows)
    v = harmonic.hsum(P, args.upper)
    return Output(str(v), {"operation": "hsum", "inputs": {"expr": args.expr, "N": args.upper}, "value": str(v)})


def cmd_li(args) -> Output:
    P = parse_expression(args.expr, X)
    T = harmonic.li_over_1mz_coeffs(P, args.order) if args.over_1mz else harmonic.li_coeffs(P, args.order)
    return _taylor_output("li", {"expr": args.expr, "order": args.order, "over_1mz": args.over_1mz}, T)


def cmd_star(args) -> Output:
    P = parse_expression(args.expr)
    return _poly_output("star", {"expr": args.expr, "trunc": args.trunc}, ncalg.conc_star(P, args.trunc))


def cmd_exp(args) -> Output:
    P = parse_expression(args.expr, Y)
    S = ncalg.stuffle_log(P, args.trunc) if args.log else ncalg.stuffle_exp(P, args.trunc)
    return _poly_output("log" if args.log else "exp", {"expr": args.expr, "trunc": args.trunc}, S)


def cmd_regularize(args) -> Output:
    P = parse_expression(args.expr, Y)
    reg = zeta.stuffle_regularize(P)
    rows = [(k, str(w), c) for k in sorted(reg.parts) for w, c in reg.parts[k].items()]
    return Output(str(reg), {"operation": "regularize", "inputs": {"expr": args.expr}, "value": str(reg)}, ("g_power", "word", "coefficient"), rows)


def cmd_gamma(args) -> Output:
    ctx = _ctx(args)
    P = parse_expression(args.expr, Y)
    v = zeta.gamma_char(P, ctx, args.tol)
    _check_tol(v, args.tol)
    return _numeric_output("gamma_char", {"expr": args.expr}, v, ctx)


def cmd_zeta(args) -> Output:
    ctx = _ctx(args)
    return _numeric_output("zeta", {"n": args.n}, zeta.zeta_int(args.n, ctx), ctx)


def cmd_mzv(args) -> Output:
    ctx = _ctx(args)
    w = parse_word_literal(args.word, Y)
    v = zeta.mzv(w, ctx, args.tol)
    _check_tol(v, args.tol)
    return _numeric_output("mzv", {"word": args.word, "tol": args.tol}, v, ctx)


def cmd_ell(args) -> Output:
    ctx = _ctx(args)
    z = _complex(args.z)
    return _numeric_output("ell", {"k": args.k, "z": args.z}, zeta.ell(args.k, z, ctx), ctx)


def cmd_inv_gamma(args) -> Output:
    ctx = _ctx(args)
    z = _complex(args.z)
    v = zeta.inv_gamma_yk(args.k, z, ctx, args.mode)
    return _numeric_output("inv_gamma_yk", {"k": args.k, "z": args.z, "mode": args.mode}, v, ctx)


def cmd_zeros(args) -> Output:
    ctx = _ctx(args)
    pts = zeta.predicted_zeros(args.r, args.bound, ctx)
    mp = ctx.mp
    rows = [(mp.nstr(p.real, 20), mp.nstr(p.imag, 20)) for p in pts]
    text = "\n".join(f"{re} {'+' if not im.startswith('-') else '-'} {im.lstrip('-')}i" for re, im in rows)
    rec = {"operation": "predicted_zeros", "inputs": {"r": args.r, "bound": args.bound}, "value": [{"re": re, "im": im} for re, im in rows]}
    return Output(text, rec, ("re", "im"), rows)


def cmd_reflection(args) -> Output:
    ctx = _ctx(args)
    res = zeta.reflection_check(args.r, _complex(args.z), ctx)
    mp = ctx.mp
    inputs = {"r": args.r, "z": args.z}
    if res.pole:
        return Output(f"pole: {res.pole}", {"operation": "reflection", "inputs": inputs, "pole": res.pole}, code=EXIT_DOMAIN)
    ok = res.difference < args.tol
    text = f"lhs = {mp.nstr(res.lhs, 25)}\nrhs = {mp.nstr(res.rhs, 25)}\n|lhs - rhs| = {res.difference:.3e}"
    rec = {
        "operation": "reflection",
        "inputs": inputs,
        "lhs": {"re": str(res.lhs.real), "im": str(res.lhs.imag)},
        "rhs": {"re": str(res.rhs.real), "im": str(res.rhs.imag)},
        "difference": res.difference,
        "precision_digits": ctx.digits,
    }
    return Output(text, rec, code=EXIT_OK if ok else EXIT_VIOLATED)


def cmd_preimage(args) -> Output:
    try:
        coeffs = [Fraction(c.strip()) for c in args.coeffs.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected comma-separated rationals, got {args.coeffs!r}", 0, args.coeffs) from None
    T = TaylorSeries.from_list(coeffs)
    S = harmonic.preimage_from_taylor(T, args.trunc)
    return _poly_output("preimage", {"coeffs": args.coeffs, "trunc": args.trunc}, S)


def cmd_stirling(args) -> Output:
    v = comb.stirling2(args.n, args.m)
    return Output(str(v), {"operation": "stirling2", "inputs": {"n": args.n, "m": args.m}, "value": str(v)})


def cmd_verify(args) -> Output:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    opts = verify.Options(prec=args.prec, kmax=args.kmax, tol=args.tol_override)
    results = [verify.run_suite(n, opts) for n in names]
    text = []
    for r in results:
        text.append(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.seconds:.2f}s)")
        text += ["  " + line for line in r.lines]
    ok = all(r.passed for r in results)
    rows = [(r.name, "pass" if r.passed else "fail", f"{r.seconds:.3f}") for r in results]
    rec = {"operation": "verify", "passed": ok, "suites": [r.to_record() for r in results]}
    return Output("\n".join(text), rec, ("suite", "result", "seconds"), rows, EXIT_OK if ok else EXIT_VIOLATED)


def _check_tol(v: zeta.CharacterValue, tol: float):
    if v.error > tol:
        raise PrecisionError(f"error bound {v.error:.3e} exceeds requested tolerance {tol:.3e}")


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--prec", type=int, default=50, help="working precision in decimal digits (>= 15)")

    p = argparse.ArgumentParser(prog="polydomain", description="Words, harmonic sums, polyzetas and eulerian functions.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("product", cmd_product, "shuffle, stuffle or concatenation of two expressions")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--op", choices=("shuffle", "stuffle", "conc"), default="stuffle")
    sp.add_argument("--trunc", type=int, default=None)

    sp = add("hsum", cmd_hsum, "harmonic sum H_w(N)")
    sp.add_argument("expr")
    sp.add_argument("--upper", type=int, required=True, help="N")

    sp = add("li", cmd_li, "Taylor coefficients of Li_P at 0")
    sp.add_argument("expr")
    sp.add_argument("--order", type=int, default=10)
    sp.add_argument("--over-1mz", action="store_true", help="coefficients of Li_P/(1-z) instead")

    sp = add("star", cmd_star, "Kleene star of a proper expression")
    sp.add_argument("expr")
    sp.add_argument("--trunc", type=int, default=6)

    sp = add("exp", cmd_exp, "stuffle exponential (or --log)")
    sp.add_argument("expr")
    sp.add_argument("--trunc", type=int, default=6)
    sp.add_argument("--log", action="store_true")

    sp = add("regularize", cmd_regularize, "stuffle regularization (y1 -> g)")
    sp.add_argument("expr")

    sp = add("gamma", cmd_gamma, "the regularized character gamma_P")
    sp.add_argument("expr")
    sp.add_argument("--tol", type=float, default=1e-8)

    sp = add("zeta", cmd_zeta, "zeta(n) for integer n >= 2")
    sp.add_argument("n", type=int)

    sp = add("mzv", cmd_mzv, "multiple zeta value of a convergent word")
    sp.add_argument("word")
    sp.add_argument("--tol", type=float, default=1e-8)

    sp = add("ell", cmd_ell, "exponent ell_k(z), |z| < 1")
    sp.add_argument("k", type=int)
    sp.add_argument("z")

    sp = add("inv-gamma", cmd_inv_gamma, "1/Gamma_{y_k}(1+z)")
    sp.add_argument("k", type=int)
    sp.add_argument("z")
    sp.add_argument("--mode", choices=("product", "series"), default="product")

    sp = add("zeros", cmd_zeros, "predicted zeros of 1/Gamma_{y_r}(1+z)")
    sp.add_argument("r", type=int)
    sp.add_argument("--bound", type=float, default=3.0)

    sp = add("reflection", cmd_reflection, "generalized reflection formula at one point")
    sp.add_argument("r", type=int)
    sp.add_argument("z")
    sp.add_argument("--tol", type=float, default=1e-15)

    sp = add("preimage", cmd_preimage, "series S over x1 with Li_S = given Taylor polynomial")
    sp.add_argument("coeffs", help="comma-separated rationals a0,a1,...")
    sp.add_argument("--trunc", type=int, default=8)

    sp = add("stirling", cmd_stirling, "Stirling number of the second kind")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)

    sp = add("verify", cmd_verify, "run a named identity-verification suite")
    sp.add_argument("suite", choices=("all", *verify.SUITES), metavar="suite", help="suite name or 'all'")
    sp.add_argument("--kmax", type=int, default=6)
    sp.add_argument("--tol", dest="tol_override", type=float, default=None)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:  # argparse usage errors
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        out = args.func(args)
        print(out.render(args.format), file=stdout)
        return out.code
    except ParseError as e:
        print(f"parse error: {e}", file=stderr)
        return EXIT_PARSE
    except PrecisionError as e:
        print(f"precision error: {e}", file=stderr)
        return EXIT_PRECISION
    except (DomainError, AlphabetError, ZeroDivisionError) as e:
        print(f"domain error: {e}", file=stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
