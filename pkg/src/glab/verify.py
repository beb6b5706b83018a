"""The law matrix: every identity the package stands on, as checks.

Each law is verified exhaustively over one built instance and
reported as a line (check id, law, status, witness) instead of an
exception, so that genuinely failing laws show up as counted
counterexamples rather than aborting the run. Statuses: "pass",
"fail" (counterexample found, witness says where), "skip" (the law's
hypothesis is not met by this instance, witness says why), "info"
(a reported fact, not a pass/fail claim).

Laws whose hypotheses hold on desk instances but that still fail do
fail here, on purpose: the report is the record of what is actually
true.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from .chk import ann_intersection_check, code_checkable_census
from .errors import ConstructionError, FalsificationError
from .finring import frobenius, structure
from .galg import GroupAlgebra, residue_map
from .ideals import (CodeSet, _sumset, ann_left, ann_left_of_element,
                     ann_right, ann_right_of_element, dual_code,
                     enumerate_ideals, ideal_intersect, ideal_sum, span)
from .idem import (decompose_one, enumerate_idempotents, is_idempotent,
                   lift_idempotent)
from .instance import BuiltInstance
from .lcp import (is_lcp, lcp_certificate, lcp_residue_correspondence,
                  lcp_scan, project_code, refine_certificate)

PASS, FAIL, SKIP, INFO = "pass", "fail", "skip", "info"


@dataclass(frozen=True)
class CheckLine:
    check_id: str
    law: str
    status: str
    witness: str = "-"
    micros: int | None = None


@dataclass
class Report:
    command: str
    digest: str
    algebra_label: str
    lines: list[CheckLine]

    @property
    def failed(self) -> bool:
        return any(line.status == FAIL for line in self.lines)


# ---------------------------------------------------------------------------
# shared per-instance workspace

class Workspace:
    """Caches the censuses and scans that several laws share."""

    def __init__(self, built: BuiltInstance):
        self.built = built
        self.alg: GroupAlgebra = built.algebra

    @cached_property
    def frobenius_status(self) -> str:
        return frobenius(self.alg.ring).status

    @cached_property
    def right_ideals(self) -> list[CodeSet]:
        return enumerate_ideals(self.alg, "right", bound=self.built.census_bound)

    @cached_property
    def left_ideals(self) -> list[CodeSet]:
        return enumerate_ideals(self.alg, "left", bound=self.built.census_bound)

    @cached_property
    def idempotents(self) -> list[int]:
        return enumerate_idempotents(self.alg, bound=self.built.bound)

    @cached_property
    def pairs(self):
        return lcp_scan(self.alg, "right", bound=self.built.census_bound)

    @cached_property
    def hat_all(self) -> np.ndarray:
        return self.alg.hat_all()

    @cached_property
    def _duals(self) -> dict:
        return {}

    def dual(self, code: CodeSet) -> CodeSet:
        key = code.key()
        got = self._duals.get(key)
        if got is None:
            got = self._duals[key] = dual_code(code)
        return got

    def hat_image(self, code: CodeSet) -> np.ndarray:
        mask = np.zeros(self.alg.card, dtype=bool)
        mask[self.hat_all[code.elements()]] = True
        return mask

    @cached_property
    def ring_structure(self):
        return structure(self.alg.ring)

    @cached_property
    def residue(self):
        return residue_map(self.alg)

    @cached_property
    def residue_rows(self):
        """(i, j, transfer) over all right-ideal pairs, or the error."""
        try:
            rm = self.residue
            rows = []
            for i, a in enumerate(self.right_ideals):
                for j, b in enumerate(self.right_ideals):
                    rows.append((i, j, lcp_residue_correspondence(a, b, rm)))
            return ("ok", rows)
        except FalsificationError as exc:
            return ("err", exc)


# ---------------------------------------------------------------------------
# gating and tallying

def _needs_frobenius(ws: Workspace) -> tuple[str, str] | None:
    if ws.frobenius_status != "frobenius":
        return (SKIP, f"needs a generating character; ring reports "
                      f"{ws.frobenius_status!r}")
    return None


def _needs_local_radical(ws: Workspace) -> tuple[str, str] | None:
    st = ws.ring_structure
    if not st.is_local:
        return (SKIP, "needs a local coefficient ring")
    if len(st.radical) <= 1:
        return (SKIP, "coefficient ring has a trivial radical")
    return None


def _tally(bad: int, total: int, unit: str, first: str | None) -> tuple[str, str]:
    if bad:
        return (FAIL, f"{bad}/{total} {unit} fail; first at {first}")
    return (PASS, f"checked {total} {unit}")


# ---------------------------------------------------------------------------
# the laws

def _dual_sum_meet(ws: Workspace):
    R = ws.right_ideals
    bad, first = 0, None
    for i, a in enumerate(R):
        da = ws.dual(a).mask
        for j, b in enumerate(R):
            lhs = ws.dual(ideal_sum(a, b)).mask
            if not np.array_equal(lhs, da & ws.dual(b).mask):
                bad += 1
                first = first or f"pair ({i}, {j})"
    return _tally(bad, len(R) ** 2, "ideal pairs", first)


def _dual_meet_join(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    R = ws.right_ideals
    bad, first = 0, None
    for i, a in enumerate(R):
        da = ws.dual(a)
        for j, b in enumerate(R):
            joined = _sumset(ws.alg, da.mask, ws.dual(b).mask)
            rhs = ws.dual(ideal_intersect(a, b)).mask
            if not np.array_equal(joined, rhs):
                bad += 1
                first = first or f"pair ({i}, {j})"
    return _tally(bad, len(R) ** 2, "ideal pairs", first)


def _dual_size_product(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    bad, first = 0, None
    for i, c in enumerate(ws.right_ideals):
        if c.cardinality * ws.dual(c).cardinality != ws.alg.card:
            bad += 1
            first = first or f"ideal {i} (size {c.cardinality})"
    return _tally(bad, len(ws.right_ideals), "ideals", first)


def _lcp_biconditional(ws: Workspace):
    alg = ws.alg
    R = ws.right_ideals
    bad, first = 0, None
    for i, a in enumerate(R):
        for j, b in enumerate(R):
            flag = is_lcp(a, b)
            try:
                e = lcp_certificate(a, b)
                got = True
            except ConstructionError:
                got = False
            ok = flag == got
            if got and ok:
                ok = (is_idempotent(alg, e)
                      and span(alg, [e], "right").same_set(a)
                      and span(alg, [alg.one_minus(e)], "right").same_set(b))
            if not ok:
                bad += 1
                first = first or f"pair ({i}, {j})"
    return _tally(bad, len(R) ** 2, "ideal pairs", first)


def _lcp_pair_count(ws: Workspace):
    pairs, idems = len(ws.pairs), len(ws.idempotents)
    if pairs != idems:
        return (FAIL, f"{pairs} complementary pairs != {idems} idempotents")
    return (PASS, f"{pairs} complementary pairs = {idems} idempotents")


def _refine_partition(ws: Workspace):
    alg = ws.alg
    parts_total = 0
    for pair in ws.pairs:
        pc, pd = refine_certificate(pair.c, pair.d)
        total = 0
        for p in pc + pd:
            total = alg.add(total, p)
        if total != alg.one:
            return (FAIL, f"refined parts of certificate {pair.certificate} "
                          f"do not sum to 1")
        parts_total += len(pc) + len(pd)
    return (PASS, f"refined {len(ws.pairs)} certificates into "
                  f"{parts_total} primitive parts")


def _refine_dual_of_sum(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    alg = ws.alg
    bad, first = 0, None
    for k, pair in enumerate(ws.pairs):
        _, pd = refine_certificate(pair.c, pair.d)
        rhs = np.zeros(alg.card, dtype=bool)
        rhs[0] = True
        for p in pd:
            rhs = _sumset(alg, rhs, span(alg, [alg.hat(p)], "right").mask)
        if not np.array_equal(ws.dual(pair.c).mask, rhs):
            bad += 1
            first = first or f"pair {k} (certificate {pair.certificate})"
    return _tally(bad, len(ws.pairs), "complementary pairs", first)


def _idem_dual_formula(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    alg = ws.alg
    bad, first = 0, None
    for e in ws.idempotents:
        actual = ws.dual(span(alg, [e], "right"))
        claimed = span(alg, [alg.one_minus(alg.hat(e))], "right")
        if not claimed.same_set(actual):
            bad += 1
            first = first or f"idempotent {e}"
    return _tally(bad, len(ws.idempotents), "idempotents", first)


def _hat_central_image(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    alg = ws.alg
    central = [p for p in ws.pairs if alg.is_central(p.certificate)]
    bad, first = 0, None
    for p in central:
        if not np.array_equal(ws.hat_image(p.c), ws.dual(p.d).mask):
            bad += 1
            first = first or f"certificate {p.certificate}"
    status, witness = _tally(bad, len(central), "central certificates", first)
    if status == PASS:
        witness += f" of {len(ws.pairs)} pairs"
    return (status, witness)


def _hat_size(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    bad, first = 0, None
    for p in ws.pairs:
        if p.c.cardinality != ws.dual(p.d).cardinality:
            bad += 1
            first = first or f"certificate {p.certificate}"
    return _tally(bad, len(ws.pairs), "complementary pairs", first)


def _residue_rows_or_raise(ws: Workspace):
    status, payload = ws.residue_rows
    if status == "err":
        raise payload
    return payload


def _residue_forward(ws: Workspace):
    gate = _needs_local_radical(ws)
    if gate:
        return gate
    rows = _residue_rows_or_raise(ws)
    bad, first = 0, None
    for i, j, rt in rows:
        if rt.lcp_base and not rt.lcp_residue:
            bad += 1
            first = first or f"pair ({i}, {j})"
    return _tally(bad, len(rows), "ideal pairs", first)


def _residue_biconditional(ws: Workspace):
    gate = _needs_local_radical(ws)
    if gate:
        return gate
    rows = _residue_rows_or_raise(ws)
    bad, first = 0, None
    for i, j, rt in rows:
        if not rt.biconditional:
            bad += 1
            first = first or f"pair ({i}, {j})"
    return _tally(bad, len(rows), "ideal pairs", first)


def _residue_restricted(ws: Workspace):
    gate = _needs_local_radical(ws)
    if gate:
        return gate
    rows = _residue_rows_or_raise(ws)
    covered = 0
    bad, first = 0, None
    for i, j, rt in rows:
        if rt.members_idempotent_generated:
            covered += 1
            if not rt.biconditional:
                bad += 1
                first = first or f"pair ({i}, {j})"
    status, witness = _tally(bad, covered, "idempotent-generated pairs", first)
    if status == PASS:
        witness += f" of {len(rows)}"
    return (status, witness)


def _radical_lift(ws: Workspace):
    gate = _needs_local_radical(ws)
    if gate:
        return gate
    alg = ws.alg
    rm = ws.residue
    residue_idems = enumerate_idempotents(rm.residue, bound=ws.built.bound)
    for ebar in residue_idems:
        lifted = lift_idempotent(alg, rm, ebar)
        if not is_idempotent(alg, lifted) or rm.reduce(lifted) != ebar:
            return (FAIL, f"residue idempotent {ebar} lifted badly")
    f = ws.ring_structure.nilpotency_index
    return (PASS, f"lifted {len(residue_idems)} residue idempotents in "
                  f"<= {max(f - 1, 1)} iterations")


def _checkable_ann_principal(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    cen = code_checkable_census(ws.alg, bound=ws.built.census_bound)
    bad, first = 0, None
    for i, (c, v) in enumerate(cen.verdicts):
        if (v.check_element is None) != (v.ann_generator is None):
            bad += 1
            first = first or f"ideal {i} (size {c.cardinality})"
    status, witness = _tally(bad, len(cen.verdicts), "right ideals", first)
    if status == PASS:
        n = sum(v.checkable for _, v in cen.verdicts)
        witness += f"; {n} checkable"
    return (status, witness)


def _checkable_dual_principal(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    cen = code_checkable_census(ws.alg, bound=ws.built.census_bound)
    bad, first = 0, None
    for i, (c, v) in enumerate(cen.verdicts):
        if not v.dual_principal_matches:
            bad += 1
            first = first or f"ideal {i} (size {c.cardinality})"
    return _tally(bad, len(cen.verdicts), "right ideals", first)


def _dual_hat_ann(ws: Workspace):
    bad, first = 0, None
    for i, c in enumerate(ws.right_ideals):
        if not np.array_equal(ws.dual(c).mask, ws.hat_image(ann_left(c))):
            bad += 1
            first = first or f"ideal {i} (size {c.cardinality})"
    return _tally(bad, len(ws.right_ideals), "right ideals", first)


def _block_intersection(ws: Workspace):
    alg = ws.alg
    parts = decompose_one(alg)
    if not all(alg.is_central(p) for p in parts):
        return (SKIP, "the canonical refinement of 1 is not central")
    blocks = 0
    for c in ws.right_ideals:
        r = ann_intersection_check(c, parts=parts)
        if r.status == "ok":
            blocks += 1
    return (PASS, f"{blocks} block sums of {len(ws.right_ideals)} "
                  f"right ideals verified")


def _ann_right_of_element(ws: Workspace):
    alg = ws.alg
    bad, first = 0, None
    for u in alg.elements:
        if not ann_right_of_element(alg, u).same_set(
                ann_right(span(alg, [u], "left"))):
            bad += 1
            first = first or f"element {u}"
    return _tally(bad, alg.card, "elements", first)


def _ann_left_of_element(ws: Workspace):
    alg = ws.alg
    bad, first = 0, None
    for u in alg.elements:
        if not ann_left_of_element(alg, u).same_set(
                ann_left(span(alg, [u], "right"))):
            bad += 1
            first = first or f"element {u}"
    return _tally(bad, alg.card, "elements", first)


def _ann_double_left(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    bad, first = 0, None
    for i, c in enumerate(ws.left_ideals):
        if not ann_left(ann_right(c)).same_set(c):
            bad += 1
            first = first or f"ideal {i} (size {c.cardinality})"
    return _tally(bad, len(ws.left_ideals), "left ideals", first)


def _ann_double_right(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    bad, first = 0, None
    for i, c in enumerate(ws.right_ideals):
        if not ann_right(ann_left(c)).same_set(c):
            bad += 1
            first = first or f"ideal {i} (size {c.cardinality})"
    return _tally(bad, len(ws.right_ideals), "right ideals", first)


def _ann_size_left(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    bad, first = 0, None
    for i, c in enumerate(ws.left_ideals):
        if c.cardinality * ann_right(c).cardinality != ws.alg.card:
            bad += 1
            first = first or f"ideal {i} (size {c.cardinality})"
    return _tally(bad, len(ws.left_ideals), "left ideals", first)


def _ann_size_right(ws: Workspace):
    gate = _needs_frobenius(ws)
    if gate:
        return gate
    bad, first = 0, None
    for i, c in enumerate(ws.right_ideals):
        if c.cardinality * ann_left(c).cardinality != ws.alg.card:
            bad += 1
            first = first or f"ideal {i} (size {c.cardinality})"
    return _tally(bad, len(ws.right_ideals), "right ideals", first)


# check_id, law, function — order is the report order
LAW_TABLE: list[tuple[str, str, Callable]] = [
    ("dual-lattice.sum-meet", "dual-lattice", _dual_sum_meet),
    ("dual-lattice.meet-join", "dual-lattice", _dual_meet_join),
    ("dual-lattice.size-product", "dual-lattice", _dual_size_product),
    ("lcp-split.biconditional", "lcp-split", _lcp_biconditional),
    ("lcp-split.pair-idempotent-count", "lcp-split", _lcp_pair_count),
    ("split-refine.partition", "split-refine", _refine_partition),
    ("split-refine.dual-of-sum", "split-refine", _refine_dual_of_sum),
    ("idem-dual.formula", "idem-dual", _idem_dual_formula),
    ("hat-transfer.central-image", "hat-transfer", _hat_central_image),
    ("hat-transfer.size", "hat-transfer", _hat_size),
    ("residue-lcp.forward", "residue-lcp", _residue_forward),
    ("residue-lcp.biconditional", "residue-lcp", _residue_biconditional),
    ("residue-lcp.idempotent-restricted", "residue-lcp", _residue_restricted),
    ("radical-lift.iteration", "radical-lift", _radical_lift),
    ("checkable-routes.ann-principal", "checkable-routes",
     _checkable_ann_principal),
    ("checkable-routes.dual-principal", "checkable-routes",
     _checkable_dual_principal),
    ("checkable-routes.dual-hat-ann", "checkable-routes", _dual_hat_ann),
    ("checkable-routes.block-intersection", "checkable-routes",
     _block_intersection),
    ("ann-identities.right-of-element", "ann-identities",
     _ann_right_of_element),
    ("ann-identities.left-of-element", "ann-identities",
     _ann_left_of_element),
    ("ann-identities.double-left", "ann-identities", _ann_double_left),
    ("ann-identities.double-right", "ann-identities", _ann_double_right),
    ("ann-identities.size-left", "ann-identities", _ann_size_left),
    ("ann-identities.size-right", "ann-identities", _ann_size_right),
]


def verify_all(built: BuiltInstance, timing: bool = False) -> Report:
    """Run the whole law matrix over one instance.

    FalsificationError and ConstructionError inside a law become fail
    lines carrying the message; ScaleError propagates (the caller
    chose bounds that the instance exceeds).
    """
    ws = Workspace(built)
    lines: list[CheckLine] = []
    for check_id, law, fn in LAW_TABLE:
        started = time.perf_counter_ns()
        try:
            status, witness = fn(ws)
        except (FalsificationError, ConstructionError) as exc:
            status, witness = FAIL, str(exc)
        micros = (time.perf_counter_ns() - started) // 1000 if timing else None
        lines.append(CheckLine(check_id, law, status, witness, micros))
    return Report(command="verify-all", digest=built.digest,
                  algebra_label=built.algebra.label, lines=lines)
