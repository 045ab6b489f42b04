"""Command-line front end.

Exit status: 0 on success or a passing check, 1 when a check is carried out
and fails (or ``wp`` decides NOT EQUAL), 2 on usage and input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .drinfeld_kohno import dk_basis, dk_check, stragglers, witt_ranks
from .errors import BoundExceededError, ShirshovError
from .gsb import check_gsb, complete, irr_enumerate, reduce
from .kukin import DEFAULT_BOUND, KukinContext, lie_word_equal, verify_s1
from .presentation import Resolved, parse_lie_expression, parse_presentation, resolve
from .semigroup import knuth_bendix, orient, rewrite, sgp_equal
from .words import format_tree, standard_bracketing

BOUND_ENV = "SHIRSHOV_BOUND"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    verdict: str
    lines: list[str] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)
    code: int = EXIT_OK
    header: bool = True


@dataclass
class Inputs:
    path: Path
    raw: bytes
    resolved: Resolved
    extra: list[bytes] = field(default_factory=list)

    def digest(self, command: str, args: list[str]) -> str:
        h = hashlib.sha256()
        for chunk in [command.encode(), self.raw, *self.extra, *(a.encode() for a in args)]:
            h.update(len(chunk).to_bytes(8, "big"))
            h.update(chunk)
        return h.hexdigest()


def _load(path: str) -> Inputs:
    p = Path(path)
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not UTF-8 text") from None
    pf = parse_presentation(text)
    extra = []
    if pf.kind == "kukin" and "source" in pf.options:
        src = p.parent / pf.options["source"]
        try:
            extra.append(src.read_bytes())
        except OSError as exc:
            raise UsageError(f"cannot read {src}: {exc.strerror or exc}") from None
    return Inputs(p, raw, resolve(pf, p.parent), extra)


def default_bound() -> int:
    value = os.environ.get(BOUND_ENV)
    if value is None:
        return DEFAULT_BOUND
    if not value.isdigit() or int(value) < 1:
        raise UsageError(f"{BOUND_ENV} must be a positive integer, got {value!r}")
    return int(value)


def _bound(args, inputs: Inputs) -> int:
    if getattr(args, "bound", None) is not None:
        return args.bound
    return inputs.resolved.file.options.get("bound") or default_bound()


def _degree(args, inputs: Inputs) -> int:
    return args.degree if args.degree is not None else _bound(args, inputs)


def _require(inputs: Inputs, command: str, *kinds: str) -> None:
    kind = inputs.resolved.file.kind
    if kind not in kinds:
        raise UsageError(f"{command} does not apply to {kind} presentations (needs {' or '.join(kinds)})")


def _completed(inputs: Inputs, max_len: int = 20, max_iter: int = 50):
    return knuth_bendix(orient(inputs.resolved.semigroup), max_len=max_len, max_iter=max_iter)


def _kukin(inputs: Inputs, bound: int) -> KukinContext:
    rs = _completed(inputs)
    if not rs.complete:
        raise UsageError("Knuth-Bendix completion did not finish; the Kukin construction needs a complete system")
    return KukinContext(rs, bound)


def _gsb_lines(report, extra: list[str]) -> list[str]:
    lines = [f"compositions: {len(report)}", f"nonzero remainders: {len(report.failures)}", *extra]
    bad = [r for r in report.records if r.status != "pass" or r.family == "unclassified"]
    by_key = {id(r): line for r, line in zip(report.records, report.lines())}
    lines += [by_key[id(r)] + (f"\t{r.family}" if r.family else "") for r in bad]
    return lines


def cmd_check(args, inputs: Inputs) -> Outcome:
    res = inputs.resolved
    kind = res.file.kind
    if kind == "semigroup":
        rs = orient(res.semigroup)
        fmt = res.alphabet.format
        records = [{"left": fmt(a), "right": fmt(b)} for a, b in rs.pending]
        verdict = "pass" if rs.complete else "fail"
        lines = [f"rules: {len(rs.rules)}", f"unresolved critical pairs: {len(rs.pending)}"]
        lines += [f"{r['left']}\t{r['right']}" for r in records]
        return Outcome(verdict, lines, records, EXIT_OK if rs.complete else EXIT_FAIL)
    if kind == "dk":
        report = dk_check(res.dk.n, parallel=args.parallel, relations=res.relations)
        loose = stragglers(report)
        ok = report.passed and not loose
        lines = _gsb_lines(report, [f"unclassified: {len(loose)}"])
        lines.insert(0, f"relations: {len(res.relations)}")
    elif kind == "kukin":
        ctx = _kukin(inputs, _bound(args, inputs))
        report = verify_s1(ctx, parallel=args.parallel)
        loose = [r for r in report.records if r.family == "unclassified"]
        ok = report.passed and not loose
        lines = _gsb_lines(report, [f"censored: {len(report.censored)}", f"unclassified: {len(loose)}"])
        lines[:0] = [f"bound: {ctx.bound}", f"relations: {len(ctx.s1())}"]
    else:
        report = check_gsb(res.relations, parallel=args.parallel)
        ok = report.passed
        lines = [f"relations: {len(res.relations)}", *_gsb_lines(report, [])]
    verdict = "pass" if ok else "fail"
    return Outcome(verdict, lines, report.to_records(), EXIT_OK if ok else EXIT_FAIL)


class _Unverified(Exception):
    pass


def _verified(inputs: Inputs) -> None:
    # dk relation sets are verified by construction; arbitrary ones are checked first
    if inputs.resolved.file.kind == "lie" and not check_gsb(inputs.resolved.relations).passed:
        raise _Unverified()


def cmd_nf(args, inputs: Inputs) -> Outcome:
    res = inputs.resolved
    if res.file.kind == "semigroup":
        rs = _completed(inputs)
        if not rs.complete:
            return Outcome("fail", ["rewriting system is not complete; no canonical normal form"], code=EXIT_FAIL)
        nf = res.alphabet.format(rewrite(res.alphabet.word(args.expr), rs.rules))
        return Outcome("pass", [nf], [{"expression": args.expr, "normal_form": nf}], header=False)
    if res.file.kind == "kukin":
        bound = _bound(args, inputs)
        ctx = _kukin(inputs, bound)
        f = parse_lie_expression(args.expr, ctx.alphabet)
        top = max(f.degrees(), default=1)
        if top - 1 > bound:
            raise BoundExceededError(f"expression degree {top} exceeds bound + 1 = {bound + 1}")
        # relations with leading words above the expression's degree never apply
        S = KukinContext(ctx.rs, max(1, top - 1)).s1()
        alphabet = ctx.alphabet
    else:
        try:
            _verified(inputs)
        except _Unverified:
            return Outcome("fail", ["relations are not a Groebner-Shirshov basis; normal forms are not canonical"], code=EXIT_FAIL)
        S, alphabet = res.relations, res.alphabet
        f = parse_lie_expression(args.expr, alphabet)
    nf = reduce(f, S).format(alphabet)
    return Outcome("pass", [nf], [{"expression": args.expr, "normal_form": nf}], header=False)


def _basis_words(args, inputs: Inputs):
    _require(inputs, args.command, "lie", "dk")
    degree = _degree(args, inputs)
    if degree < 1:
        raise UsageError("degree must be positive")
    res = inputs.resolved
    if res.file.kind == "dk":
        return dk_basis(res.dk.n, degree), degree
    _verified(inputs)
    return irr_enumerate(res.relations, degree), degree


def cmd_basis(args, inputs: Inputs) -> Outcome:
    try:
        words, _ = _basis_words(args, inputs)
    except _Unverified:
        return Outcome("fail", ["relations are not a Groebner-Shirshov basis; Irr is not a basis"], code=EXIT_FAIL)
    alphabet = inputs.resolved.alphabet
    records = [
        {"degree": len(w), "word": alphabet.format(w), "nlsw": format_tree(standard_bracketing(w), alphabet)}
        for w in words
    ]
    lines = [f"{r['degree']}\t{r['word']}\t{r['nlsw']}" for r in records]
    return Outcome("pass", lines, records)


def cmd_ranks(args, inputs: Inputs) -> Outcome:
    try:
        words, degree = _basis_words(args, inputs)
    except _Unverified:
        return Outcome("fail", ["relations are not a Groebner-Shirshov basis; Irr is not a basis"], code=EXIT_FAIL)
    counts = [0] * degree
    for w in words:
        counts[len(w) - 1] += 1
    res = inputs.resolved
    oracle = witt_ranks(res.dk.n, degree) if res.file.kind == "dk" else None
    records, lines = [], []
    for d, rank in enumerate(counts, start=1):
        rec = {"degree": d, "rank": rank}
        line = f"{d}\t{rank}"
        if oracle is not None:
            rec["oracle"] = oracle[d - 1]
            line += f"\t{oracle[d - 1]}"
        records.append(rec)
        lines.append(line)
    ok = oracle is None or oracle == counts
    return Outcome("pass" if ok else "fail", lines, records, EXIT_OK if ok else EXIT_FAIL)


def cmd_wp(args, inputs: Inputs) -> Outcome:
    _require(inputs, "wp", "semigroup", "kukin")
    bound = _bound(args, inputs)
    alphabet = inputs.resolved.alphabet
    u, v = alphabet.word(args.u), alphabet.word(args.v)
    if not u or not v:
        raise UsageError("words must be nonempty")
    if max(len(u), len(v)) > bound:
        raise BoundExceededError(f"word length {max(len(u), len(v))} exceeds the bound {bound}")
    # (3)' instances longer than both words never take part in the reduction
    ctx = _kukin(inputs, max(len(u), len(v)))
    lie = lie_word_equal(u, v, ctx)
    sgp = sgp_equal(u, v, ctx.rs)
    record = {"u": alphabet.format(u), "v": alphabet.format(v), "lie_equal": lie, "semigroup_equal": sgp}
    if lie != sgp:
        return Outcome("inconsistent", ["INCONSISTENT"], [record], EXIT_FAIL, header=False)
    if lie:
        return Outcome("equal", ["EQUAL"], [record], EXIT_OK, header=False)
    return Outcome("not-equal", ["NOT EQUAL"], [record], EXIT_FAIL, header=False)


def cmd_complete(args, inputs: Inputs) -> Outcome:
    res = inputs.resolved
    if res.file.kind in ("semigroup", "kukin"):
        rs = _completed(inputs, args.max_len, args.max_iter)
        fmt = res.alphabet.format
        records = [{"lhs": fmt(l), "rhs": fmt(r)} for l, r in rs.rules]
        lines = [f"{r['lhs']} -> {r['rhs']}" for r in records]
        if not rs.complete:
            lines.append(f"incomplete: {len(rs.pending)} unresolved critical pairs")
        return Outcome("pass" if rs.complete else "fail", lines, records, EXIT_OK if rs.complete else EXIT_FAIL)
    degree = _degree(args, inputs)
    S, report = complete(res.relations, degree, args.max_iter)
    records = [{"id": r.id, "relation": r.poly.format(res.alphabet)} for r in S]
    lines = [f"{r['id']}\t{r['relation']}" for r in records]
    if not report.passed:
        lines.append(f"incomplete: {len(report.failures)} nonzero remainders")
    return Outcome(report.verdict, lines, records, EXIT_OK if report.passed else EXIT_FAIL)


COMMANDS = {
    "check": cmd_check,
    "nf": cmd_nf,
    "basis": cmd_basis,
    "ranks": cmd_ranks,
    "wp": cmd_wp,
    "complete": cmd_complete,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shirshov", description="Check relation sets of Lie algebras and compute normal forms.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="presentation file")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        return p

    p = add("check", "verify that all compositions reduce to zero")
    p.add_argument("--parallel", action="store_true", help="check composition pairs in worker processes")
    p.add_argument("--bound", type=int, help="Kukin degree bound")
    p = add("nf", "normal form of a Lie expression or semigroup word")
    p.add_argument("expr")
    p.add_argument("--bound", type=int, help="Kukin degree bound")
    for name, text in (("basis", "Irr words up to a degree"), ("ranks", "basis size in each degree")):
        p = add(name, text)
        p.add_argument("--degree", type=int, help=f"maximal degree (default: ${BOUND_ENV} or {DEFAULT_BOUND})")
    p = add("wp", "decide u = v through the Kukin algebra")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--bound", type=int, help="maximal word length")
    p = add("complete", "Knuth-Bendix completion, or bounded Lie completion")
    p.add_argument("--max-len", type=int, default=20)
    p.add_argument("--max-iter", type=int, default=50)
    p.add_argument("--degree", type=int, help="degree cap for new Lie relations")
    return parser


def _positional(args) -> list[str]:
    return [str(getattr(args, k)) for k in ("expr", "u", "v", "degree", "bound", "max_len", "max_iter") if getattr(args, k, None) is not None]


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run one command; returns ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return code, "", ""
    try:
        inputs = _load(args.file)
        outcome = COMMANDS[args.command](args, inputs)
    except (UsageError, ShirshovError, ValueError) as exc:
        return EXIT_USAGE, "", f"shirshov {args.command}: error: {exc}\n"
    except RecursionError:
        return EXIT_USAGE, "", f"shirshov {args.command}: error: input nested too deeply\n"
    except Exception as exc:  # noqa: BLE001 - never crash on malformed input
        return EXIT_USAGE, "", f"shirshov {args.command}: internal error: {type(exc).__name__}: {exc}\n"
    if args.json:
        doc = {
            "command": args.command,
            "input-digest": inputs.digest(args.command, _positional(args)),
            "verdict": outcome.verdict,
            "records": outcome.records,
        }
        out = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        head = [f"{args.command}: {outcome.verdict.upper()}"] if outcome.header else []
        out = "".join(line + "\n" for line in head + outcome.lines)
    return outcome.code, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
