"""Command-line front end: build an instance file, run checks, report.

Commands: ring-info, idempotents, lcp {scan|verify|residue},
checkable {ideal|census}, verify-all. Reports render as TSV (columns
check_id, law, status, witness, micros) or aligned text, and are
byte-identical across runs unless --timing adds measured times.

Exit codes: 0 all checks pass, 1 a check failed or an identity was
falsified, 2 usage or instance-file errors, 3 an operation exceeded
its scale bound.
"""

from __future__ import annotations

import argparse
import sys
import time

from .chk import code_checkable_census, is_checkable
from .errors import (ConstructionError, FalsificationError, ParseError,
                     ScaleError)
from .finring import frobenius, structure
from .galg import residue_map
from .idem import decompose_one, idempotent_census
from .instance import BuiltInstance, build_instance, load_instance
from .lcp import (hat_equivalence, is_lcp, lcp_certificate,
                  lcp_residue_correspondence, lcp_scan, refine_certificate)
from .verify import FAIL, INFO, PASS, CheckLine, Report, verify_all


# ---------------------------------------------------------------------------
# command bodies: each returns a Report

def _info(check_id: str, law: str, witness) -> CheckLine:
    return CheckLine(check_id, law, INFO, str(witness))


def _verdict(check_id: str, law: str, ok: bool, witness: str) -> CheckLine:
    return CheckLine(check_id, law, PASS if ok else FAIL, witness)


def cmd_ring_info(built: BuiltInstance) -> Report:
    ring = built.algebra.ring
    st = structure(ring)
    fr = frobenius(ring)
    law = "ring-info"
    lines = [
        _info("ring.label", law, ring.label),
        _info("ring.card", law, ring.card),
        _info("ring.commutative", law, str(ring.is_commutative).lower()),
        _info("ring.units", law, len(st.units)),
        _info("ring.radical-size", law, len(st.radical)),
        _info("ring.nilpotency-index", law, st.nilpotency_index),
        _info("ring.local", law, str(st.is_local).lower()),
        _info("ring.frobenius", law, fr.status),
        _info("ring.generating-character", law,
              "(" + ", ".join(str(k) for k in fr.character) + ")"
              if fr.character is not None else "-"),
    ]
    return Report("ring-info", built.digest, built.algebra.label, lines)


def cmd_idempotents(built: BuiltInstance) -> Report:
    alg = built.algebra
    census = idempotent_census(alg)
    law = "idempotent-census"
    central = [i.element for i in census if i.central]
    primitive = [i.element for i in census if i.primitive]
    parts = decompose_one(alg)
    total = 0
    for p in parts:
        total = alg.add(total, p)
    named = "; ".join(f"{p} = {alg.text(p)}" for p in parts) or "-"
    lines = [
        _info("idempotents.count", law, len(census)),
        _info("idempotents.central", law, central),
        _info("idempotents.primitive", law, primitive),
        _info("idempotents.decompose-one", law, named),
        _verdict("idempotents.partition-of-one", law, total == alg.one,
                 f"{len(parts)} primitive parts sum to 1"
                 if total == alg.one else
                 f"parts sum to {total}, not 1"),
    ]
    return Report("idempotents", built.digest, alg.label, lines)


def cmd_lcp_scan(built: BuiltInstance) -> Report:
    alg = built.algebra
    pairs = lcp_scan(alg, "right", bound=built.census_bound)
    law = "lcp-split"
    lines = [CheckLine(f"lcp-scan.pair-{k:03d}", law, PASS,
                       f"certificate {p.certificate}; |C| = {p.c.cardinality}, "
                       f"|D| = {p.d.cardinality}")
             for k, p in enumerate(pairs)]
    lines.append(_verdict("lcp-scan.count", law, True,
                          f"{len(pairs)} complementary pairs"))
    return Report("lcp scan", built.digest, alg.label, lines)


def _named_ideal(built: BuiltInstance, name: str):
    try:
        return built.ideals[name]
    except KeyError:
        known = ", ".join(sorted(built.ideals)) or "none defined"
        raise ParseError(f"no ideal named {name!r} in the instance "
                         f"(known: {known})") from None


def cmd_lcp_verify(built: BuiltInstance, pair: tuple[str, str]) -> Report:
    alg = built.algebra
    c, d = _named_ideal(built, pair[0]), _named_ideal(built, pair[1])
    law = "lcp-split"
    lines: list[CheckLine] = []
    complementary = is_lcp(c, d)
    lines.append(_verdict(
        "lcp-verify.complementary", law, complementary,
        f"|C| = {c.cardinality}, |D| = {d.cardinality}, "
        f"|RG| = {alg.card}" if complementary else
        f"not complementary: |C| = {c.cardinality}, |D| = {d.cardinality}, "
        f"|RG| = {alg.card}"))
    if complementary:
        e = lcp_certificate(c, d)
        lines.append(_info("lcp-verify.certificate", law,
                           f"e = {e} = {alg.text(e)}"))
        pc, pd = refine_certificate(c, d)
        lines.append(_info("lcp-verify.refinement", law,
                           f"C parts {pc}; D parts {pd}"))
        he = hat_equivalence(c, d)
        lines.append(_verdict("lcp-verify.hat-sizes", "hat-transfer",
                              he.sizes_match,
                              f"|C| = {c.cardinality} vs |dual(D)|"))
        if he.central:
            lines.append(_verdict("lcp-verify.hat-image", "hat-transfer",
                                  bool(he.hat_image_matches),
                                  "central certificate; inversion image "
                                  "of C equals dual(D)"))
        else:
            lines.append(_info("lcp-verify.hat-image", "hat-transfer",
                               "certificate not central; no image claim"))
    return Report("lcp verify", built.digest, alg.label, lines)


def cmd_lcp_residue(built: BuiltInstance, pair: tuple[str, str]) -> Report:
    alg = built.algebra
    c, d = _named_ideal(built, pair[0]), _named_ideal(built, pair[1])
    rm = residue_map(alg)
    rt = lcp_residue_correspondence(c, d, rm)
    law = "residue-lcp"
    lines = [
        _info("lcp-residue.base", law, str(rt.lcp_base).lower()),
        _info("lcp-residue.residue", law, str(rt.lcp_residue).lower()),
        _verdict("lcp-residue.biconditional", law, rt.biconditional,
                 "base and residue complementarity agree"
                 if rt.biconditional else
                 "residue pair complementary but base pair is not"),
        _info("lcp-residue.residue-certificate", law,
              rt.residue_certificate if rt.residue_certificate is not None
              else "-"),
        _info("lcp-residue.lifted-certificate", law,
              f"{rt.lifted_certificate} = {alg.text(rt.lifted_certificate)}"
              if rt.lifted_certificate is not None else "-"),
    ]
    return Report("lcp residue", built.digest, alg.label, lines)


def cmd_checkable_ideal(built: BuiltInstance, name: str) -> Report:
    alg = built.algebra
    c = _named_ideal(built, name)
    v = is_checkable(c, bound=built.bound)
    law = "checkable-routes"
    lines = [
        _info("checkable-ideal.checkable", law, str(v.checkable).lower()),
        _info("checkable-ideal.check-element", law,
              f"{v.check_element} = {alg.text(v.check_element)}"
              if v.check_element is not None else "-"),
        _info("checkable-ideal.ann-generator", law,
              v.ann_generator if v.ann_generator is not None else "-"),
        _info("checkable-ideal.dual-principal", law,
              f"generator {v.dual_generator}"
              if v.dual_generator is not None else
              ("dual is not a right ideal" if not v.dual_is_right_ideal
               else "not principal")),
        _verdict("checkable-ideal.consistency", law, v.consistency,
                 "all three detection routes agree" if v.consistency else
                 "detection routes disagree"),
    ]
    return Report("checkable ideal", built.digest, alg.label, lines)


def cmd_checkable_census(built: BuiltInstance) -> Report:
    alg = built.algebra
    cen = code_checkable_census(alg, bound=built.census_bound)
    law = "checkable-routes"
    lines = [_info(f"checkable-census.ideal-{i:03d}", law,
                   f"size {c.cardinality}; checkable "
                   f"{str(v.checkable).lower()}; u "
                   f"{v.check_element if v.check_element is not None else '-'}")
             for i, (c, v) in enumerate(cen.verdicts)]
    lines.append(_info("checkable-census.code-checkable", law,
                       str(cen.all_checkable).lower()))
    consistent = all(v.consistency for _, v in cen.verdicts)
    bad = sum(not v.consistency for _, v in cen.verdicts)
    lines.append(_verdict("checkable-census.consistency", law, consistent,
                          f"all {len(cen.verdicts)} ideals consistent"
                          if consistent else
                          f"{bad}/{len(cen.verdicts)} ideals have "
                          f"disagreeing routes"))
    return Report("checkable census", built.digest, alg.label, lines)


# ---------------------------------------------------------------------------
# rendering

def render_tsv(report: Report) -> str:
    out = [f"# command: {report.command}",
           f"# instance: {report.digest}",
           f"# algebra: {report.algebra_label}",
           "check_id\tlaw\tstatus\twitness\tmicros"]
    for l in report.lines:
        micros = str(l.micros) if l.micros is not None else "-"
        out.append(f"{l.check_id}\t{l.law}\t{l.status}\t{l.witness}\t{micros}")
    return "\n".join(out) + "\n"


def render_text(report: Report) -> str:
    out = [f"command {report.command} | algebra {report.algebra_label} | "
           f"instance {report.digest[:16]}"]
    width = max((len(l.check_id) for l in report.lines), default=0)
    for l in report.lines:
        timing = f"  [{l.micros} us]" if l.micros is not None else ""
        out.append(f"  {l.status:<4}  {l.check_id:<{width}}  "
                   f"{l.witness}{timing}")
    tally = {}
    for l in report.lines:
        tally[l.status] = tally.get(l.status, 0) + 1
    out.append("summary: " + ", ".join(
        f"{tally[s]} {s}" for s in ("pass", "fail", "skip", "info")
        if s in tally))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# argument parsing and dispatch

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glab",
        description="exact checks for one-sided group codes over finite rings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="instance file path")
        p.add_argument("--bound", type=int, default=None,
                       help="override the elementwise scan bound")
        p.add_argument("--census-bound", type=int, default=None,
                       help="override the ideal-census bound")
        p.add_argument("--format", choices=("tsv", "text"), default="text")
        p.add_argument("--timing", action="store_true",
                       help="measure and print per-check times")

    common(sub.add_parser("ring-info", help="coefficient ring facts"))
    common(sub.add_parser("idempotents", help="idempotent census"))

    lcp = sub.add_parser("lcp", help="complementary-pair checks")
    lcp.add_argument("mode", choices=("scan", "verify", "residue"))
    common(lcp)
    lcp.add_argument("--pair", nargs=2, metavar=("C", "D"),
                     help="two ideal names from the instance file")

    chk = sub.add_parser("checkable", help="checkability checks")
    chk.add_argument("mode", choices=("ideal", "census"))
    common(chk)
    chk.add_argument("--ideal", metavar="C",
                     help="ideal name from the instance file")

    common(sub.add_parser("verify-all", help="run the whole law matrix"))
    return parser


def _run(args) -> Report:
    built = build_instance(load_instance(args.file),
                           bound=args.bound, census_bound=args.census_bound)
    if args.command == "ring-info":
        return cmd_ring_info(built)
    if args.command == "idempotents":
        return cmd_idempotents(built)
    if args.command == "lcp":
        if args.mode == "scan":
            return cmd_lcp_scan(built)
        if args.pair is None:
            raise ParseError(f"lcp {args.mode} needs --pair C D")
        if args.mode == "verify":
            return cmd_lcp_verify(built, tuple(args.pair))
        return cmd_lcp_residue(built, tuple(args.pair))
    if args.command == "checkable":
        if args.mode == "census":
            return cmd_checkable_census(built)
        if args.ideal is None:
            raise ParseError("checkable ideal needs --ideal C")
        return cmd_checkable_ideal(built, args.ideal)
    return verify_all(built, timing=args.timing)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter_ns()
    try:
        report = _run(args)
    except (ParseError, ConstructionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScaleError as exc:
        print(f"scale error: {exc}", file=sys.stderr)
        return 3
    except FalsificationError as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        return 1
    if args.timing and args.command != "verify-all":
        total = (time.perf_counter_ns() - started) // 1000
        report.lines.append(CheckLine("timing.total", "timing", INFO,
                                      "whole command", total))
    text = render_tsv(report) if args.format == "tsv" else render_text(report)
    sys.stdout.write(text)
    return 1 if report.failed else 0
