"""Command line: construct, describe, wenum, mindist, verify, table.

Exit codes: 0 success, 2 invalid configuration, 3 budget exceeded,
4 a theorem check failed.
"""
from __future__ import annotations

import argparse
import sys

from . import tables
from .analysis import enumerate_weights, min_distance
from .analysis.distance import DEFAULT_INFOSET_BUDGET
from .analysis.enumeration import DEFAULT_BUDGET
from .errors import BudgetExceededError, ContractError, DomainError, NotQRSettingError, UnsupportedError
from .jobs import FORMATS, STRATEGIES, JobConfig, code_descriptor, dumps
from .qr_construct import extension_constant, qr_family
from .verify import verify_hermitian_family, verify_qr_theorems

EXIT_OK, EXIT_CONFIG, EXIT_BUDGET, EXIT_THEOREM = 0, 2, 3, 4


def _add_code_args(ap: argparse.ArgumentParser, weight=True, strategy=False):
    ap.add_argument("-p", type=int, required=True, help="prime of the base field")
    ap.add_argument("-q", type=int, required=True, help="odd prime code length")
    ap.add_argument("--code", default="q1", help="q1, q2, q1p or q2p (default q1)")
    ap.add_argument("--extend", action="store_true", help="add the extra coordinate")
    ap.add_argument("--augment", choices=["v", "1v"], help="add <v h> or <(1+v) h> (p=2, q = 1 mod 8)")
    ap.add_argument("--gray", action="store_true", help="work with the Gray image over F_p")
    if weight:
        ap.add_argument("--weight", default="lee", choices=["hamming", "lee", "bachoc"])
    if strategy:
        ap.add_argument("--strategy", default="auto", choices=STRATEGIES)
        ap.add_argument("--infoset-budget", type=int, default=DEFAULT_INFOSET_BUDGET,
                        help="message budget of the information-set search")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest code to enumerate")
    ap.add_argument("--workers", type=int, default=None)


def _add_output_args(ap: argparse.ArgumentParser, default="json"):
    ap.add_argument("--format", default=default, choices=FORMATS)
    ap.add_argument("--out", help="write here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qrfpv", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="idempotent and generator matrix of a code")
    _add_code_args(c, weight=False)
    _add_output_args(c)

    d = sub.add_parser("describe", help="summary of the QR family for (p, q)")
    d.add_argument("-p", type=int, required=True)
    d.add_argument("-q", type=int, required=True)
    _add_output_args(d)

    w = sub.add_parser("wenum", help="exact weight enumerator")
    _add_code_args(w)
    _add_output_args(w, default="text")

    m = sub.add_parser("mindist", help="minimum distance with certification status")
    _add_code_args(m, strategy=True)
    _add_output_args(m)

    v = sub.add_parser("verify", help="check the QR structure theorems on (p, q)")
    v.add_argument("-p", type=int, default=2)
    v.add_argument("-q", type=int, required=True)
    v.add_argument("--hermitian", action="store_true", help="check the Hermitian family instead (p=2)")
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_args(v, default="text")

    t = sub.add_parser("table", help="recompute a reference table")
    t.add_argument("--which", type=int, choices=[1, 2], required=True)
    t.add_argument("--tier", choices=list(tables.TIERS), default="fast")
    t.add_argument("--workers", type=int, default=None)
    _add_output_args(t, default="text")
    return ap


def _config(args, **extra) -> JobConfig:
    return JobConfig(
        p=args.p,
        q=args.q,
        code=args.code,
        extend=args.extend,
        augment=args.augment,
        gray=args.gray,
        weight=getattr(args, "weight", "lee"),
        strategy=getattr(args, "strategy", "auto"),
        budget=args.budget,
        infoset_budget=getattr(args, "infoset_budget", DEFAULT_INFOSET_BUDGET),
        workers=args.workers,
        format=args.format,
        **extra,
    ).validate()


def cmd_construct(args) -> tuple[str, int]:
    cfg = _config(args)
    C = cfg.build()
    desc = code_descriptor(cfg, C)
    if cfg.format == "json":
        return dumps(desc), EXIT_OK
    lines = [f"{desc['label']}  p={cfg.p} q={cfg.q}  length {desc['length']}  size {desc['cardinality']}",
             f"idempotent: {desc['idempotent']}"]
    if "extension_constant" in desc:
        lines.append(f"extension constant: {desc['extension_constant']}")
    lines.append("generator:")
    lines += ["  " + " ".join(str(x) for x in row) for row in desc["generator"]]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_describe(args) -> tuple[str, int]:
    F = qr_family(args.p, args.q)
    desc = F.describe()
    desc["q_mod4"] = args.q % 4
    desc["extension_constants"] = {w: extension_constant(F, w) for w in ("Q1", "Q2")}
    if args.format == "json":
        return dumps(desc), EXIT_OK
    lines = [f"p={F.p} q={F.q} (q = {F.q % 4} mod 4)", f"residues: {desc['qset']}"]
    for w, idem in desc["idempotents"].items():
        lines.append(f"{w:<4} size {desc['cardinalities'][w]:<8} idempotent {idem}")
    lines.append(f"extension constants: {desc['extension_constants']}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_wenum(args) -> tuple[str, int]:
    cfg = _config(args)
    C = cfg.build()
    enum = enumerate_weights(C, cfg.measured_kind(), budget=cfg.budget, workers=cfg.workers)
    if cfg.format == "csv":
        return enum.to_csv(), EXIT_OK
    if cfg.format == "json":
        return dumps({"code": cfg.label, "p": cfg.p, "q": cfg.q, "kind": enum.kind.value,
                      "total": enum.total, "counts": {str(k): v for k, v in sorted(enum.counts.items())},
                      "polynomial": enum.to_poly_string()}), EXIT_OK
    return enum.to_poly_string() + "\n", EXIT_OK


def cmd_mindist(args) -> tuple[str, int]:
    cfg = _config(args)
    C = cfg.build()
    rep = min_distance(C, cfg.measured_kind(), strategy=cfg.strategy, budget=cfg.budget,
                       infoset_budget=cfg.infoset_budget, workers=cfg.workers)
    if cfg.format == "json":
        out = {"code": cfg.label, "p": cfg.p, "q": cfg.q, "kind": cfg.measured_kind().value, **rep.to_dict()}
        return dumps(out), EXIT_OK
    if cfg.format == "csv":
        return f"code,kind,d,certified,lower_bound\n{cfg.label},{cfg.measured_kind().value},{rep.d},{rep.certified},{rep.lower_bound}\n", EXIT_OK
    return f"{cfg.label}: {rep}\n", EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.hermitian:
        if args.p != 2:
            raise DomainError("the Hermitian family needs p=2")
        rep = verify_hermitian_family(args.q, budget=args.budget)
    else:
        rep = verify_qr_theorems(args.p, args.q)
    text = rep.to_json() + "\n" if args.format == "json" else rep.to_text() + "\n"
    return text, EXIT_OK if rep.passed else EXIT_THEOREM


def cmd_table(args) -> tuple[str, int]:
    rows = tables.compute_table(args.which, args.tier, args.workers)
    return tables.render(rows, args.format), EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "describe": cmd_describe,
    "wenum": cmd_wenum,
    "mindist": cmd_mindist,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotQRSettingError, DomainError, UnsupportedError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
