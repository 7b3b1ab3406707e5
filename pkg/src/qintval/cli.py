"""Command-line front end: ``qintval <subcommand> ...``.

Expansions are given as a bare index ``k`` (the basis element), as
``"k:coeff; k:coeff"``, or as the JSON object printed by ``--json``.
Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import combinat as cb
from . import evalmaps as ev
from . import frobenius as fr
from . import qnum as qn
from . import rq_core as rq
from .errors import QIntValError
from .exactalg import reduce_mod_cyclotomic
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _expansion(text: str, basis: str) -> rq.QBinExpansion:
    try:
        return rq.parse_expansion(text, basis)
    except (ValueError, SyntaxError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse expansion {text!r}: {exc}") from None


def _int_map(text: str) -> dict[int, int]:
    """``k`` or ``k:c; k:c`` with integer coefficients."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return {int(k): int(v) for k, v in data.get("coeffs", {}).items()}
    if text.isdigit():
        return {int(text): 1}
    out: dict[int, int] = {}
    for chunk in filter(str.strip, text.split(";")):
        k, sep, c = chunk.partition(":")
        if not sep:
            raise UsageError(f"expected 'k: coefficient', got {chunk!r}")
        out[int(k)] = out.get(int(k), 0) + int(c)
    return out


def _lines_for(coeffs: dict) -> list[str]:
    if not coeffs:
        return ["0"]
    return [f"k={k}: {c}" for k, c in sorted(coeffs.items())]


def _emit(args, text_lines: list[str], payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _emit_expansion(args, E: rq.QBinExpansion) -> None:
    _emit(args, _lines_for(E.coeffs), E.to_json())


# -- subcommands ----------------------------------------------------------------------


def cmd_expand(args) -> int:
    try:
        P = rq.parse_xpoly(args.poly)
    except (ValueError, SyntaxError, TypeError) as exc:
        raise UsageError(f"cannot parse polynomial {args.poly!r}: {exc}") from None
    E = rq.expand_bar(P) if args.basis == "bar" else rq.expand(P)
    _emit_expansion(args, E)
    return 0


def cmd_mult(args) -> int:
    E = rq.multiply(_expansion(args.a, args.basis), _expansion(args.b, args.basis))
    _emit_expansion(args, E)
    return 0


def cmd_shift(args) -> int:
    _emit_expansion(args, rq.shift(_expansion(args.expansion, args.basis), args.m))
    return 0


def cmd_bar(args) -> int:
    _emit_expansion(args, rq.bar(_expansion(args.expansion, args.basis)))
    return 0


def cmd_convert(args) -> int:
    _emit_expansion(args, rq.convert_basis(_expansion(args.expansion, args.basis)))
    return 0


def cmd_dilate(args) -> int:
    if args.m < 1:
        raise UsageError("dilation factor must be at least 1")
    _emit_expansion(args, rq.dilate(args.m, _expansion(args.expansion, "standard")))
    return 0


def cmd_frob(args) -> int:
    E = fr.ClassicalExpansionModP(args.p, _int_map(args.expansion))
    out = fr.frob_p_inverse(E) if args.inverse else fr.frob_p(E)
    _emit(args, _lines_for(out.coeffs), out.to_json())
    return 0


def cmd_qfrob(args) -> int:
    if args.d < 1:
        raise UsageError("d must be positive")
    if args.inverse:
        text = args.expansion.strip()
        if text.startswith("{"):
            src = fr.ExpansionModPhiD.from_json(text)
        else:
            src = fr.ExpansionModPhiD(args.d, _expansion(text, "standard").laurent_coeffs())
        out = fr.qfrob_d_inverse(src)
    else:
        out = fr.qfrob_d(_int_map(args.expansion), args.d)
    _emit(args, _lines_for(out.coeffs), out.to_json())
    return 0


def cmd_qlucas(args) -> int:
    if min(args.n, args.m) < 0 or args.d < 1:
        raise UsageError("need n, m >= 0 and d >= 1")
    dec, value = qn.q_lucas(args.n, args.m, args.d)
    direct = reduce_mod_cyclotomic(qn.q_binomial(args.n, args.m), args.d)
    agree = direct == value
    lines = [
        f"n = {dec.n_prime}*{dec.d} + {dec.n0}, m = {dec.m_prime}*{dec.d} + {dec.m0}",
        f"binom({dec.n_prime},{dec.m_prime}) * [{dec.n0} choose {dec.m0}]_q mod Phi_{dec.d} = {value}",
        f"[{args.n} choose {args.m}]_q mod Phi_{dec.d} = {direct}",
        f"agree: {'yes' if agree else 'no'}",
    ]
    payload = {
        "n_prime": dec.n_prime, "n0": dec.n0, "m_prime": dec.m_prime, "m0": dec.m0, "d": dec.d,
        "lucas": str(value), "direct": str(direct), "agree": agree,
    }
    _emit(args, lines, payload)
    return 0 if agree else 1


def cmd_bijection(args) -> int:
    try:
        lam, mu = cb.Partition.parse(args.lam), cb.Partition.parse(args.mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    i, j = args.i, args.j
    if i < j:
        print(f"note: swapping i={i}, j={j} (and lambda, mu) so that i >= j", file=sys.stderr)
        i, j, lam, mu = j, i, mu, lam
    w = cb.qbinommult_bijection(args.n, i, j, lam, mu)
    back = cb.qbinommult_inverse(args.n, i, j, w)
    ok = back == (lam, mu)
    lines = cb.bijection_trace(args.n, i, j, lam, mu)
    lines.append(f"weight: {lam.size}+{mu.size} = {(w.k - i) * (w.k - j)}+{w.alpha.size}+{w.beta.size}+{w.gamma.size}")
    lines.append(f"inverse: {'ok' if ok else 'FAILED'}")
    payload = {
        "n": args.n, "i": i, "j": j, "k": w.k,
        "alpha": str(w.alpha), "beta": str(w.beta), "gamma": str(w.gamma), "c": list(w.c), "inverse_ok": ok,
    }
    _emit(args, lines, payload)
    return 0 if ok else 1


def cmd_eval(args) -> int:
    E = _expansion(args.expansion, args.basis)
    if args.hom is not None:
        if args.at is not None or args.kappa is not None:
            raise UsageError("--hom cannot be combined with --at/--kappa")
        text = args.hom
        if text.startswith("@"):
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        h = ev.build_hom(ev.HomSpec.from_json(text))
        value = ev.apply_hom(h, E)
        _emit(args, [str(value)], {"value": value.to_json(), "field": h.field.to_json()})
        return 0
    if args.at is None:
        raise UsageError("eval needs --at N (optionally with --kappa) or --hom SPEC")
    if args.kappa is None:
        value = rq.eval_at_qint(E, args.at)
        _emit(args, [str(value)], {"value": str(value)})
        return 0
    field = ev.FieldSpec.prime(args.p) if args.p else ev.FieldSpec.rationals()
    value = ev.std_eval(args.at, field(args.kappa), E)
    _emit(args, [str(value)], {"value": value.to_json(), "field": field.to_json()})
    return 0


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    rows = run_suite(args.suite)
    failed = [r for r in rows if not r[2]]
    lines = [f"{'PASS' if ok else 'FAIL'} {suite}: {label}{' (' + err + ')' if err else ''}" for suite, label, ok, err in rows]
    lines.append(f"{len(rows) - len(failed)} passed, {len(failed)} failed")
    payload = {
        "passed": len(rows) - len(failed),
        "failed": len(failed),
        "checks": [{"suite": s, "check": label, "ok": ok, "error": err} for s, label, ok, err in rows],
    }
    _emit(args, lines, payload)
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    basis = argparse.ArgumentParser(add_help=False)
    basis.add_argument("--basis", choices=["standard", "bar"], default="standard", help="basis for bare or k:c input")

    parser = argparse.ArgumentParser(prog="qintval", description="Exact computations in the ring of quantum integer-valued polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common, basis], help="expand a polynomial in x, q in the q-binomial basis")
    p.add_argument("poly", help="e.g. 'x^2' or 'x*(x-1)/(q*(1+q))'")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("mult", parents=[common, basis], help="multiply two expansions")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("shift", parents=[common, basis], help="apply S^m, S(x) = qx + 1")
    p.add_argument("expansion")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("bar", parents=[common, basis], help="apply the bar involution")
    p.add_argument("expansion")
    p.set_defaults(func=cmd_bar)

    p = sub.add_parser("convert", parents=[common, basis], help="rewrite in the other basis")
    p.add_argument("expansion")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("dilate", parents=[common], help="apply the dilation D_m")
    p.add_argument("m", type=int)
    p.add_argument("expansion")
    p.set_defaults(func=cmd_dilate)

    p = sub.add_parser("frob", parents=[common], help="classical Frobenius binom(x,k) -> binom(x,pk) mod p")
    p.add_argument("p", type=int)
    p.add_argument("expansion", help="integer coefficients, e.g. '1:1; 2:2'")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_frob)

    p = sub.add_parser("qfrob", parents=[common], help="quantum Frobenius binom(x,k) -> qbinom(x,dk) mod Phi_d")
    p.add_argument("d", type=int)
    p.add_argument("expansion")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_qfrob)

    p = sub.add_parser("qlucas", parents=[common], help="q-Lucas decomposition of [n choose m]_q mod Phi_d")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_qlucas)

    p = sub.add_parser("bijection", parents=[common], help="trace the Young-diagram bijection for a product of q-binomials")
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("lam", help="partition, e.g. '(7,6,5)'")
    p.add_argument("mu")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("eval", parents=[common, basis], help="evaluate an expansion")
    p.add_argument("expansion")
    p.add_argument("--at", type=int, help="x := [N]_q")
    p.add_argument("--kappa", help="then q := KAPPA (a rational)")
    p.add_argument("--p", type=int, default=0, help="evaluate in F_p instead of Q")
    p.add_argument("--hom", help="HomSpec JSON (or @file)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument("suite", help="all, " + ", ".join(SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, QIntValError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"qintval {args.command}: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
