"""Command line front end: operator actions, coefficients, complexes, sweeps."""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import correspondence as co
from . import fock, quiver, schur, symgroup
from .fock import FockVector
from .partitions import (
    ChargedSequence,
    added_box,
    as_partition,
    content,
    res_set,
)
from .ratmat import format_fraction
from .schur import SchurVector, schur_basis
from .suites import SUITES, run_suite

USAGE_ERROR = 2


class CliError(ValueError):
    pass


def parse_partition(text: str):
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise CliError(f"cannot parse partition {text!r}; expected e.g. \"(2,1)\" or \"()\"")
    inner = body[1:-1].strip().rstrip(",")
    if not inner:
        return ()
    try:
        return as_partition(int(x) for x in inner.split(","))
    except ValueError as exc:
        raise CliError(f"bad partition {text!r}: {exc}") from exc


def parse_sequence(text: str) -> ChargedSequence:
    body = text.strip()
    if body.startswith("vac:"):
        try:
            return ChargedSequence.vacuum(int(body[4:]))
        except ValueError as exc:
            raise CliError(f"bad vacuum charge in {text!r}") from exc
    if body.startswith("seq:"):
        parts = body.split(":")
        if len(parts) != 3:
            raise CliError(f"expected seq:<charge>:<entries> in {text!r}")
        try:
            charge = int(parts[1])
            entries = [int(x) for x in parts[2].split(",")] if parts[2] else []
            return ChargedSequence.of(charge, entries)
        except ValueError as exc:
            raise CliError(f"bad sequence {text!r}: {exc}") from exc
    raise CliError(f"cannot parse sequence {text!r}; expected vac:<k> or seq:<k>:<entries>")


def partition_text(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def schur_text(v: SchurVector) -> str:
    if v.is_zero():
        return "0"
    pieces = []
    for key, coeff in sorted(v.items(), key=lambda kv: kv[0], reverse=True):
        body = partition_text(key)
        mag = abs(coeff)
        term = body if mag == 1 else f"{format_fraction(mag)}*{body}"
        pieces.append(("-" if coeff < 0 else "+", term))
    head_sign, head = pieces[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, term in pieces[1:]:
        out += f" {sign} {term}"
    return out


def fock_text(v: FockVector) -> str:
    if v.is_zero():
        return "0"
    pieces = []
    for key, coeff in sorted(v.items(), key=lambda kv: (kv[0].charge, kv[0].head)):
        body = key.display()
        mag = abs(coeff)
        term = body if mag == 1 else f"{format_fraction(mag)}*{body}"
        pieces.append(("-" if coeff < 0 else "+", term))
    head_sign, head = pieces[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, term in pieces[1:]:
        out += f" {sign} {term}"
    return out


_FOCK_OP = re.compile(r"^(t|psi\*|psi|sbar|sn|gq|gp|tau)\s*(-?\d+)$")
_SCHUR_OP = re.compile(r"^(p_row|p_col|q_row|q_col)[ :]?(\d+)$")


def run_act(args) -> int:
    op = args.op.strip()
    if op in ("q", "p"):
        v = schur_basis(parse_partition(args.on))
        out = schur.apply_q(v) if op == "q" else schur.apply_p(v)
        print(json.dumps({"op": op, "vector": out.to_json()}) if args.json else schur_text(out))
        return 0
    m = _SCHUR_OP.match(op)
    if m:
        name, size = m.group(1), int(m.group(2))
        v = schur_basis(parse_partition(args.on))
        fn = {
            "p_row": schur.apply_p_row,
            "p_col": schur.apply_p_col,
            "q_row": schur.apply_q_row,
            "q_col": schur.apply_q_col,
        }[name]
        out = fn(size, v)
        print(json.dumps({"op": op, "vector": out.to_json()}) if args.json else schur_text(out))
        return 0
    m = _FOCK_OP.match(op)
    if m:
        name, idx = m.group(1), int(m.group(2))
        v = FockVector.basis(parse_sequence(args.on))
        if name == "t":
            out = fock.apply_t(idx, v)
        elif name == "psi":
            out = fock.apply_psi(idx, v)
        elif name == "psi*":
            out = fock.apply_psi_star(idx, v)
        elif name == "sbar":
            out = fock.s_bar_n(idx, v)
        elif name == "sn":
            out = fock.s_n_op(idx, v)
        elif name == "gq":
            out = fock.g_q_trunc(idx, v)
        elif name == "gp":
            out = fock.g_p_trunc(idx, v)
        else:
            out = fock.tau(v, idx)
        print(json.dumps({"op": op, "vector": out.to_json()}) if args.json else fock_text(out))
        return 0
    raise CliError(f"unknown operator {args.op!r}")


def run_coeff(args) -> int:
    lam1 = parse_partition(args.lam1)
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    if lam1 not in res_set(lam) or lam not in res_set(mu):
        raise CliError(f"{lam1} -> {lam} -> {mu} is not a removal path")
    b1, b2 = added_box(lam1, lam), added_box(lam, mu)
    two_dim = b1[0] != b2[0] and b1[1] != b2[1]
    d = content(b2) - content(b1)
    rows = []
    branches = [symgroup.LAM_BRANCH] + ([symgroup.NU_BRANCH] if two_dim else [])
    for branch in branches:
        rows.append(
            {
                "branch": branch,
                "a": format_fraction(symgroup.a_coeff(lam1, lam, mu, branch)),
                "a_oracle": format_fraction(symgroup.a_oracle(lam1, lam, mu, branch)),
                "a_tilde": format_fraction(co.tilde_a(lam1, lam, mu, branch)),
            }
        )
    payload = {
        "lam1": list(lam1),
        "lam": list(lam),
        "mu": list(mu),
        "d": d,
        "h_lam_mu": format_fraction(symgroup.h_coeff(lam, mu)),
        "h_lam1_lam": format_fraction(symgroup.h_coeff(lam1, lam)),
        "branches": rows,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"path {partition_text(lam1)} -> {partition_text(lam)} -> {partition_text(mu)}")
        print(f"d = {d}   h[lam->mu] = {payload['h_lam_mu']}   h[lam1->lam] = {payload['h_lam1_lam']}")
        for row in rows:
            print(
                f"branch {row['branch']:>3}:  a = {row['a']:>8}  oracle = {row['a_oracle']:>8}"
                f"  solved = {row['a_tilde']:>8}"
            )
    return 0


def run_complex(args) -> int:
    lam = parse_partition(args.lam)
    w = co.wtq_tensor(lam)
    if args.json:
        print(json.dumps(w.to_json()))
        return 0
    base = fock_text(FockVector.basis(co.to_sequence(lam)))
    print(f"removal complex against P({base}):")
    if w.k == 0:
        print("  zero complex")
        return 0
    for component in w.components:
        i, kind, label, _ = component
        seq = fock_text(FockVector.basis(co.to_sequence(label)))
        coeffs = w.arrows_for(component)
        arrows = " + ".join(
            f"{format_fraction(c)}*R({row})" for row, c in enumerate(coeffs, start=1) if c
        )
        print(f"  [i={i}] {kind:<6} P({seq})  ->  {arrows if arrows else '0'}")
    print(f"  degree 1: R(1..{w.k}), each a copy of P({base})")
    quotients = ", ".join(partition_text(q) for q in w.quotient_labels())
    print(f"  quotient labels: {quotients if quotients else 'none'}")
    return 0


def run_resolve(args) -> int:
    lam = parse_partition(args.lam)
    n = args.n
    if args.kind == "q":
        res = quiver.resolution_q(lam, n)
        suffix = f" -> Q{partition_text(lam)}"
    elif args.kind == "dfp":
        res = quiver.resolution_df_p(lam, n)
        suffix = ""
    else:
        res = quiver.resolution_simple(lam, n)
        suffix = f" -> L{partition_text(lam)}"
    if args.json:
        print(json.dumps({"kind": args.kind, "lam": list(lam), "n": n, "terms": res.to_json()}))
    else:
        print(res.arrow_text() + suffix)
    return 0


def run_det(args) -> int:
    lam = parse_partition(args.lam)
    k = args.k if args.k is not None else (lam[0] if lam else 1)
    c = co.matrix_c(lam, k)
    direct = c.det()
    closed = co.det_a_closed(lam, k)
    payload = {
        "lam": list(lam),
        "k": k,
        "c_matrix": c.to_strings(),
        "det_direct": format_fraction(direct),
        "det_closed": format_fraction(closed),
        "equal": direct == closed,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"C for lam={partition_text(lam)}, k={k}:")
        for row in c.to_strings():
            print("  [" + ", ".join(row) + "]")
        print(f"det (direct) = {payload['det_direct']}")
        print(f"det (closed) = {payload['det_closed']}")
        print("equal" if payload["equal"] else "MISMATCH")
    return 0 if payload["equal"] else 1


def run_verify(args) -> int:
    result = run_suite(args.suite, args.max_size)
    if args.json:
        print(json.dumps(result.to_json()))
    else:
        print(f"suite {result.name}: {result.cases} cases")
        for key in sorted(result.failures):
            print(f"  FAIL {key}")
        print("PASS" if result.passed else "FAIL")
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bosonfermion",
        description="Exact Fock space operators and coefficient verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    act = sub.add_parser("act", help="apply an operator to a basis vector")
    act.add_argument(
        "--op",
        required=True,
        help="t<i>, psi<j>, psi*<j>, q, p, p_row<m>, sbar<n>, sn<n>, gq<N>, gp<N>, tau<s>",
    )
    act.add_argument("--on", required=True, help='"(2,1)" or vac:<k> or seq:<k>:<entries>')
    act.add_argument("--json", action="store_true")
    act.set_defaults(fn=run_act)

    coeff = sub.add_parser("coeff", help="coefficients along a two-step removal path")
    coeff.add_argument("--lam1", required=True)
    coeff.add_argument("--lam", required=True)
    coeff.add_argument("--mu", required=True)
    coeff.add_argument("--json", action="store_true")
    coeff.set_defaults(fn=run_coeff)

    cpx = sub.add_parser("complex", help="the collapsed removal complex against one projective")
    cpx.add_argument("--lam", required=True)
    cpx.add_argument("--json", action="store_true")
    cpx.set_defaults(fn=run_complex)

    resolve = sub.add_parser("resolve", help="projective resolutions in the truncated algebras")
    resolve.add_argument("--kind", required=True, choices=["q", "dfp", "simple"])
    resolve.add_argument("--lam", required=True)
    resolve.add_argument("--n", required=True, type=int)
    resolve.add_argument("--json", action="store_true")
    resolve.set_defaults(fn=run_resolve)

    det = sub.add_parser("det", help="factorial matrix and its determinant, both routes")
    det.add_argument("--lam", required=True)
    det.add_argument("--k", type=int, default=None)
    det.add_argument("--json", action="store_true")
    det.set_defaults(fn=run_det)

    verify = sub.add_parser("verify", help="run a named verification sweep")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify.add_argument("--max-size", type=int, default=None)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(fn=run_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
