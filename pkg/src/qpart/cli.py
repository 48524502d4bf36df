"""Command-line front end: ``qpart <subcommand> ...``.

Every subcommand prints one JSON document (``"schema": "qpart/1"``) or a CSV
table.  Exit status is 0 on success, 1 when ``selftest`` finds a failing
check, 2 on usage or input errors and 3 when an enumeration budget is hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence, TextIO

from . import codes, ferrers, kraw, preservers
from .budget import enumeration_budget, get_budget
from .codes import DEFAULT_SEED, MatrixCode
from .errors import BudgetExceeded, QpartError
from .gf import field_of_order
from .laurent import LaurentPolyZ
from .matgf import PivotList, Subspace

SCHEMA = "qpart/1"


# --- label encoding ---------------------------------------------------------------

def encode_label(label):
    """JSON value for a block label: an int, a list of basis rows, or a list of columns."""
    if isinstance(label, int):
        return label
    if isinstance(label, Subspace):
        return [list(r) for r in label.basis]
    if isinstance(label, PivotList):
        return list(label.idx)
    raise TypeError(f"not a block label: {label!r}")


def decode_label(value, kind: str, q: int, m: int):
    """Inverse of :func:`encode_label` for a partition ``kind`` of matrices with ``m`` columns."""
    if kind == "rank":
        return int(value)
    if kind == "rowspace":
        return Subspace.span(field_of_order(q), m, [tuple(r) for r in value])
    if kind in ("pivot", "rpivot"):
        return PivotList(m, tuple(value))
    raise ValueError(f"unknown partition kind {kind!r}")


def _cell(value) -> str:
    return value if isinstance(value, str) else json.dumps(value, separators=(",", ":"))


def encode_dist(dist: dict) -> list:
    return [[encode_label(l), c] for l, c in sorted(dist.items(), key=lambda t: kraw.label_key(t[0]))]


def encode_poly(p: LaurentPolyZ) -> dict:
    return {"coefficients": p.to_json(), "text": str(p)}


# --- config -------------------------------------------------------------------------

@dataclass
class CliConfig:
    subcommand: str
    params: dict = field(default_factory=dict)
    fmt: str = "json"
    budget: Optional[int] = None
    seed: int = DEFAULT_SEED


class UsageError(Exception):
    pass


def _field(q: int):
    try:
        return field_of_order(q)
    except QpartError as exc:
        raise UsageError(f"--q {q}: {exc}") from None


def _positive(name: str, v: int) -> int:
    if v < 1:
        raise UsageError(f"--{name} must be at least 1, got {v}")
    return v


def _board(text: str):
    try:
        return ferrers.parse_board(text)
    except (QpartError, ValueError) as exc:
        raise UsageError(f"--board {text!r}: {exc}") from None


def _pivots(text: str, m: int) -> PivotList:
    try:
        idx = tuple(int(t) for t in text.split(",") if t.strip())
        return PivotList(m, idx)
    except ValueError as exc:
        raise UsageError(f"--pivots {text!r}: {exc}") from None


def _read_code(path: str) -> MatrixCode:
    try:
        with open(path, encoding="utf-8") as fh:
            return MatrixCode.from_text(fh.read())
    except OSError as exc:
        raise UsageError(f"--file {path}: {exc.strerror}") from None
    except (QpartError, ValueError) as exc:
        raise UsageError(f"--file {path}: {exc}") from None


# --- subcommands ----------------------------------------------------------------------

def cmd_kraw(a):
    ctx = _field(a.q)
    n, m = _positive("n", a.n), _positive("m", a.m)
    rows, cols, table = kraw.kraw_table(a.partition, ctx, n, m)
    doc = {"partition": a.partition, "dual": kraw.DUAL_KIND[a.partition], "q": a.q, "n": n, "m": m,
           "rows": [encode_label(l) for l in rows], "cols": [encode_label(l) for l in cols],
           "table": [list(r) for r in table]}
    csv_rows = [["row"] + [_cell(encode_label(c)) for c in cols]]
    csv_rows += [[_cell(encode_label(l))] + list(r) for l, r in zip(rows, table)]
    return doc, csv_rows


def cmd_dualpartition(a):
    ctx = _field(a.q)
    n, m = _positive("n", a.n), _positive("m", a.m)
    primal = kraw.partition_blocks(a.partition, ctx, n, m)
    dual = kraw.dual_partition(a.partition, ctx, n, m)
    double = kraw.dual_of_blocks(dual, ctx, n, m)
    doc = {"partition": a.partition, "q": a.q, "n": n, "m": m, "blocks": len(primal),
           "dual_blocks": len(dual), "dual_is": kraw.identify_partition(dual, ctx, n, m),
           "reflexive": double == primal, "self_dual": dual == primal}
    return doc, [[k, _cell(v)] for k, v in doc.items()]


def cmd_macwilliams(a):
    C = _read_code(a.file)
    ctx, n, m = C.ctx, C.n, C.m
    out_kind = kraw.DUAL_KIND[a.partition]
    dist = codes.distribution(C, a.partition)
    predicted = kraw.macwilliams_transform(dist, C.size, a.partition, ctx, n, m)
    direct = codes.distribution(codes.dual_code(C), out_kind)
    doc = {"partition": a.partition, "dual_partition": out_kind, "k": C.k,
           "distribution": encode_dist(dist), "transformed": encode_dist(predicted),
           "dual_enumerated": encode_dist(direct), "agrees": predicted == direct}
    csv_rows = [["label", "transformed", "dual_enumerated"]]
    for lab in sorted(set(predicted) | set(direct), key=kraw.label_key):
        csv_rows.append([_cell(encode_label(lab)), predicted.get(lab, 0), direct.get(lab, 0)])
    return doc, csv_rows


def _poly_table(polys: list[tuple[int, LaurentPolyZ]]):
    csv_rows = [["r", "exponent", "coefficient"]]
    for r, p in polys:
        for e, c in p.to_json().items():
            csv_rows.append([r, e, c])
    return csv_rows


def _rs(a, top: int) -> list[int]:
    if a.r is None:
        return list(range(top + 1))
    if a.r < 0:
        raise UsageError(f"--r must be non-negative, got {a.r}")
    return [a.r]


def cmd_ferrers(a):
    if a.action == "stirling":
        m = _positive("m", a.m)
        polys = [(r, ferrers.q_stirling(m, r)) for r in _rs(a, m)]
        doc = {"m": m}
    else:
        F = _board(a.board)
        fn = ferrers.rank_dist if a.action == "rankdist" else ferrers.rook_poly_closed
        polys = [(r, fn(F, r)) for r in _rs(a, F.m)]
        doc = {"board": list(F.cols)}
    doc["kind"] = a.action
    doc["polynomials"] = [{"r": r, **encode_poly(p)} for r, p in polys]
    text = "\n".join(str(p) if len(polys) == 1 else f"r={r}: {p}" for r, p in polys) + "\n"
    return doc, _poly_table(polys), text


def _subspace_arg(text: str, ctx, m: int) -> Subspace:
    try:
        rows = [tuple(int(t) for t in row.split(",")) for row in text.split(";") if row.strip()]
    except ValueError:
        raise UsageError(f"--subspace {text!r}: expected rows like 1,0,0;0,1,0") from None
    if any(len(r) != m or any(not 0 <= x < ctx.q for x in r) for r in rows):
        raise UsageError(f"--subspace {text!r}: rows must have {m} entries in [0, {ctx.q})")
    return Subspace.span(ctx, m, rows)


def cmd_code(a):
    C = _read_code(a.file)
    if a.action == "dual":
        D = codes.dual_code(C)
        doc = {"k": D.k, "n": D.n, "m": D.m, "q": D.ctx.q, "code": D.to_text()}
        return doc, [["field", "value"]] + [[k, _cell(v)] for k, v in doc.items()], D.to_text()
    if a.action == "analyze":
        dist = codes.distribution(C, a.dist)
        doc = {"k": C.k, "size": C.size, "partition": a.dist, "distribution": encode_dist(dist),
               "min_distance": codes.min_rank_distance(C) if C.k else None,
               "mrd": codes.is_mrd(C)}
        return doc, [["label", "count"]] + [[_cell(l), c] for l, c in doc["distribution"]]
    # extremal
    if (a.subspace is None) == (a.pivots is None):
        raise UsageError("code extremal needs exactly one of --subspace or --pivots")
    if a.subspace is not None:
        U = _subspace_arg(a.subspace, C.ctx, C.m)
        doc = {"subspace": encode_label(U), "shortened_dim": codes.shorten(C, U).k,
               "extremal": codes.is_u_extremal(C, U)}
    else:
        lam = _pivots(a.pivots, C.m)
        doc = {"pivots": list(lam.idx), "side": a.side,
               "extremal": codes.is_piv_extremal(C, lam, a.side)}
    return doc, [["field", "value"]] + [[k, _cell(v)] for k, v in doc.items()]


def cmd_preservers(a):
    if a.action == "classify":
        ctx = _field(a.q)
        n, m = _positive("n", a.n), _positive("m", a.m)
        found = preservers.classify_preservers(ctx, n, m, a.kind)
        family = preservers.structured_family(ctx, n, m, a.kind)
        doc = {"kind": a.kind, "q": a.q, "n": n, "m": m, "preservers": len(found),
               "structured": len(family), "equal": found == family}
        return doc, [["field", "value"]] + [[k, _cell(v)] for k, v in doc.items()]
    ctx = field_of_order(2)
    if a.example == "notext1":
        C, f, kind = *preservers.notext1_example(ctx), "rank"
    else:
        C, f, kind = *preservers.notext2_example(ctx), "pivot"
    found = preservers.extension_search(C, f, kind)
    doc = {"example": a.example, "kind": kind, "code_dim": C.k,
           "preserving_on_code": preservers.is_preserving(f, kind, C),
           "candidates": preservers.structured_count(ctx, C.n, C.m, kind),
           "extension": None if found is None else {
               "U": [list(r) for r in found.U.rows()], "V": [list(r) for r in found.V.rows()],
               "transposed": found.transposed}}
    return doc, [["field", "value"]] + [[k, _cell(v)] for k, v in doc.items()]


def selftest_checks(seed: int) -> list[tuple[str, bool]]:
    """Oracle-equivalence checks at small sizes, in a fixed order."""
    out = []
    F2, F3 = field_of_order(2), field_of_order(3)
    for ctx, n, m in ((F2, 2, 2), (F3, 2, 2), (F2, 3, 2)):
        for kind in kraw.KINDS:
            rows, cols, table = kraw.kraw_table(kind, ctx, n, m)
            _, _, sums = kraw.char_sum_table(kind, ctx, n, m)
            ok = all(s == t for sr, tr in zip(sums, table) for s, t in zip(sr, tr))
            out.append((f"kraw {kind} q={ctx.q} n={n} m={m}", ok))
    for kind in kraw.KINDS:
        dual = kraw.dual_partition(kind, F2, 2, 2)
        out.append((f"dual {kind}", kraw.identify_partition(dual, F2, 2, 2) == [kraw.DUAL_KIND[kind]]))
    ok = True
    for C in codes.random_codes(F2, 3, 2, 20, seed):
        D = codes.dual_code(C)
        for kind in ("rank", "rowspace", "pivot"):
            pred = kraw.macwilliams_transform(codes.distribution(C, kind), C.size, kind, F2, 3, 2)
            ok &= pred == codes.distribution(D, kraw.DUAL_KIND[kind])
    out.append((f"macwilliams random codes seed={seed}", ok))
    ok = True
    for F in ferrers.boards(3, 3):
        for r in range(F.m + 1):
            ok &= ferrers.rank_dist(F, r) == ferrers.rank_dist_recursive(F, r)
            ok &= ferrers.rook_poly_enum(F, r) == ferrers.rook_poly_closed(F, r)
        if F.size <= 6:
            ok &= ferrers.brute_rank_counts(F, F2) == [ferrers.rank_dist(F, r)(2) for r in range(F.m + 1)]
    out.append(("ferrers boards m<=3", ok))
    ok = all(ferrers.q_stirling(m + 1, m + 1 - r) == ferrers.rook_poly_closed(ferrers.board_new(range(1, m + 1)), r)
             for m in range(1, 5) for r in range(m + 1))
    out.append(("q-stirling bridge", ok))
    for kind, expected in (("pivot", 12), ("rowspace", 6)):
        found = preservers.classify_preservers(F2, 2, 2, kind)
        out.append((f"preservers {kind}", len(found) == expected and found == preservers.structured_family(F2, 2, 2, kind)))
    return out


def cmd_selftest(a):
    checks = selftest_checks(a.seed)
    doc = {"seed": a.seed, "checks": [{"name": n, "pass": ok} for n, ok in checks],
           "passed": all(ok for _, ok in checks)}
    return doc, [["check", "pass"]] + [[n, ok] for n, ok in checks]


# --- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json",
                        help="output format (text applies to polynomials and code files)")
    common.add_argument("--budget", type=int, default=None,
                        help="largest exhaustive enumeration allowed (default %d)" % get_budget())
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for random corpora (default %(default)s)")

    p = argparse.ArgumentParser(prog="qpart", description="Partition distributions of matrix codes over GF(q).")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def size_args(sp):
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)

    sp = sub.add_parser("kraw", parents=[common], help="closed-form Krawtchouk table")
    sp.add_argument("--partition", choices=kraw.KINDS, required=True)
    size_args(sp)
    sp.set_defaults(func=cmd_kraw)

    sp = sub.add_parser("dualpartition", parents=[common], help="brute-force dual partition")
    sp.add_argument("--partition", choices=kraw.KINDS, required=True)
    size_args(sp)
    sp.set_defaults(func=cmd_dualpartition)

    sp = sub.add_parser("macwilliams", parents=[common], help="transform a code distribution")
    sp.add_argument("--file", required=True, help="code file")
    sp.add_argument("--partition", choices=("rank", "rowspace", "pivot", "rpivot"), default="rank")
    sp.set_defaults(func=cmd_macwilliams)

    fp = sub.add_parser("ferrers", help="Ferrers-board polynomials")
    fsub = fp.add_subparsers(dest="action", required=True)
    for name, hlp in (("rankdist", "rank distribution P_r(F)"), ("rook", "q-rook polynomial R_r(F)")):
        sp = fsub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("--board", required=True, help="column heights, e.g. 1,2,4")
        sp.add_argument("--r", type=int, default=None, help="rank / rook count (default: all)")
        sp.set_defaults(func=cmd_ferrers)
    sp = fsub.add_parser("stirling", parents=[common], help="q-Stirling number S_{m, r}")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--r", type=int, default=None)
    sp.set_defaults(func=cmd_ferrers)

    cp = sub.add_parser("code", help="analyze a code file")
    csub = cp.add_subparsers(dest="action", required=True)
    sp = csub.add_parser("analyze", parents=[common])
    sp.add_argument("--file", required=True)
    sp.add_argument("--dist", choices=kraw.KINDS, default="rank")
    sp.set_defaults(func=cmd_code)
    sp = csub.add_parser("dual", parents=[common])
    sp.add_argument("--file", required=True)
    sp.set_defaults(func=cmd_code)
    sp = csub.add_parser("extremal", parents=[common])
    sp.add_argument("--file", required=True)
    sp.add_argument("--subspace", help="rows of U, e.g. 1,0,0;0,0,1")
    sp.add_argument("--pivots", help="pivot list, e.g. 2,3")
    sp.add_argument("--side", choices=("piv", "rpiv"), default="piv")
    sp.set_defaults(func=cmd_code)

    pp = sub.add_parser("preservers", help="linear preservers")
    psub = pp.add_subparsers(dest="action", required=True)
    sp = psub.add_parser("classify", parents=[common], help="exhaustive classification (q=2, nm <= 4)")
    sp.add_argument("--kind", choices=tuple(preservers.PRESERVED), required=True)
    size_args(sp)
    sp.set_defaults(func=cmd_preservers)
    sp = psub.add_parser("extend", parents=[common], help="search for a structured extension")
    sp.add_argument("--example", choices=("notext1", "notext2"), required=True)
    sp.set_defaults(func=cmd_preservers)

    sp = sub.add_parser("selftest", parents=[common], help="oracle-equivalence checks at small sizes")
    sp.set_defaults(func=cmd_selftest)
    return p


def _render(result, fmt: str) -> str:
    doc, csv_rows, *text = result
    if fmt == "text" and text:
        return text[0]
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        return buf.getvalue()
    return json.dumps({"schema": SCHEMA, **doc}, indent=2) + "\n"


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    skip = {"func", "fmt", "budget", "seed", "subcommand"}
    config = CliConfig(a.subcommand, {k: v for k, v in vars(a).items() if k not in skip},
                       a.fmt, a.budget, a.seed)
    try:
        if config.budget is not None and config.budget < 1:
            raise UsageError(f"--budget must be positive, got {config.budget}")
        with enumeration_budget(config.budget if config.budget is not None else get_budget()):
            result = a.func(a)
    except BudgetExceeded as exc:
        print(f"qpart: budget exceeded: {exc}", file=err)
        return 3
    except (UsageError, QpartError, ValueError) as exc:
        print(f"qpart {a.subcommand}: {exc}", file=err)
        return 2
    out.write(_render(result, config.fmt))
    if config.subcommand == "selftest" and not result[0]["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
