"""Complementary pairs: detection, certificates, refinement, transfer."""

import numpy as np
import pytest

from glab.errors import ConstructionError, FalsificationError
from glab.finring import MatrixRing, Zmod, build_ring
from glab.galg import GroupAlgebra, residue_map
from glab.grp import CyclicGroup, SymmetricGroup, build_group
from glab.idem import enumerate_idempotents
from glab.ideals import CodeSet, dual_code, enumerate_ideals, span
from glab.lcp import (complement_pair, hat_equivalence, is_lcp,
                      lcp_certificate, lcp_residue_correspondence, lcp_scan,
                      project_code, refine_certificate)


def _alg(ring_spec, group_spec):
    return GroupAlgebra(build_ring(ring_spec), build_group(group_spec))


@pytest.fixture(scope="module")
def f3c2():
    return _alg(Zmod(3), CyclicGroup(2))


@pytest.fixture(scope="module")
def f2c3():
    return _alg(Zmod(2), CyclicGroup(3))


@pytest.fixture(scope="module")
def z4c3():
    return _alg(Zmod(4), CyclicGroup(3))


@pytest.fixture(scope="module")
def f2s3():
    return _alg(Zmod(2), SymmetricGroup(3))


@pytest.fixture(scope="module")
def m2c2():
    return _alg(MatrixRing(2, Zmod(2)), CyclicGroup(2))


# ---------------------------------------------------------------------------
# detection and certificates

def test_is_lcp_frozen_f2c3(f2c3):
    a = span(f2c3, [6], "right")
    b = span(f2c3, [7], "right")
    assert a.cardinality == 4 and b.cardinality == 2
    assert is_lcp(a, b) and is_lcp(b, a)
    assert not is_lcp(a, a)
    assert not is_lcp(a, span(f2c3, [1], "right"))


def test_certificate_frozen_f2c3(f2c3):
    a = span(f2c3, [6], "right")
    b = span(f2c3, [7], "right")
    assert lcp_certificate(a, b) == 6
    assert lcp_certificate(b, a) == 7


def test_certificate_requires_lcp(f2c3):
    a = span(f2c3, [6], "right")
    with pytest.raises(ConstructionError):
        lcp_certificate(a, a)


def test_pair_needs_matching_sides(f3c2):
    r = span(f3c2, [8], "right")
    l = span(f3c2, [5], "left")
    with pytest.raises(ConstructionError):
        is_lcp(r, l)
    bare = CodeSet(f3c2, r.mask)
    with pytest.raises(ConstructionError):
        is_lcp(bare, bare)


def test_complement_pair_roundtrip(f3c2, m2c2):
    for alg in (f3c2, m2c2):
        for e in enumerate_idempotents(alg):
            c, d = complement_pair(alg, e)
            assert lcp_certificate(c, d) == e


def test_complement_pair_rejects_non_idempotent(f3c2):
    with pytest.raises(ConstructionError):
        complement_pair(f3c2, 2)


def test_noncommutative_pair(m2c2):
    # E11*RG against E22*RG: complementary with certificate E11 at 1.
    c = span(m2c2, [1], "right")
    d = span(m2c2, [8], "right")
    assert is_lcp(c, d)
    assert lcp_certificate(c, d) == 1


# ---------------------------------------------------------------------------
# scans

def test_scan_counts_frozen(f3c2, f2c3, f2s3, m2c2):
    assert len(lcp_scan(_alg(Zmod(2), CyclicGroup(2)))) == 2
    assert len(lcp_scan(_alg(Zmod(4), CyclicGroup(2)))) == 2
    assert len(lcp_scan(f3c2)) == 4
    assert len(lcp_scan(f2c3)) == 4
    assert len(lcp_scan(f2s3)) == 16
    assert len(lcp_scan(m2c2)) == 26


def test_scan_certificates_frozen_f2c3(f2c3):
    assert sorted(p.certificate for p in lcp_scan(f2c3)) == [0, 1, 6, 7]


def test_scan_matches_idempotent_count(f3c2, f2s3):
    for alg in (f3c2, f2s3):
        assert len(lcp_scan(alg)) == len(enumerate_idempotents(alg))


def test_scan_left_side(f3c2, m2c2):
    assert len(lcp_scan(f3c2, side="left")) == 4
    assert len(lcp_scan(m2c2, side="left")) == 26


def test_scan_pairs_come_with_swaps(f2c3):
    pairs = {(p.c.key(), p.d.key()) for p in lcp_scan(f2c3)}
    for ck, dk in pairs:
        assert (dk, ck) in pairs


# ---------------------------------------------------------------------------
# refinement

def test_refine_frozen_f2s3(f2s3):
    c = span(f2s3, [25], "right")
    d = span(f2s3, [f2s3.one_minus(25)], "right")
    pc, pd = refine_certificate(c, d)
    assert pc == [25] and pd == [15, 23]


def test_refine_all_pairs(f3c2, f2c3, m2c2):
    for alg in (f3c2, f2c3, m2c2):
        for p in lcp_scan(alg):
            pc, pd = refine_certificate(p.c, p.d)
            total = 0
            for part in pc + pd:
                total = alg.add(total, part)
            assert total == alg.one


def test_refine_matrix_pair(m2c2):
    pc, pd = refine_certificate(span(m2c2, [1], "right"),
                                span(m2c2, [8], "right"))
    assert pc == [1] and pd == [8]


# ---------------------------------------------------------------------------
# involution equivalence

def test_hat_equivalence_frozen_f3c2(f3c2):
    he = hat_equivalence(span(f3c2, [8], "right"), span(f3c2, [5], "right"))
    assert he.certificate == 8
    assert he.central and he.sizes_match and he.hat_image_matches


def test_hat_equivalence_dichotomy_f2s3(f2s3):
    central_ok, noncentral_miss = 0, 0
    for p in lcp_scan(f2s3):
        he = hat_equivalence(p.c, p.d)
        assert he.sizes_match
        if he.central:
            assert he.hat_image_matches
            central_ok += 1
        elif not he.hat_image_matches:
            noncentral_miss += 1
    assert central_ok == 4
    assert noncentral_miss == 12  # every noncentral certificate misses


def test_hat_equivalence_sizes_always(m2c2):
    for p in lcp_scan(m2c2):
        assert hat_equivalence(p.c, p.d).sizes_match


# ---------------------------------------------------------------------------
# residue transfer

def test_residue_transfer_frozen_z4c3(z4c3):
    c = span(z4c3, [22], "right")
    d = span(z4c3, [63], "right")
    t = lcp_residue_correspondence(c, d)
    assert t.lcp_base and t.lcp_residue and t.biconditional
    assert t.certificate == 22 and t.residue_certificate == 6
    assert t.lifted_certificate == 22
    assert t.members_idempotent_generated


def test_residue_transfer_negative_pair(z4c3):
    c = span(z4c3, [22], "right")
    t = lcp_residue_correspondence(c, c)
    assert not t.lcp_base and not t.lcp_residue
    assert t.biconditional and t.certificate is None


def test_residue_biconditional_genuinely_fails_raw():
    # The whole algebra against a radical multiple: residue images are
    # the trivial complementary pair, the base pair is not complementary.
    z4c2 = _alg(Zmod(4), CyclicGroup(2))
    rm = residue_map(z4c2)
    whole = span(z4c2, [1], "right")
    rad = span(z4c2, [2], "right")
    assert list(rad.elements()) == [0, 2, 8, 10]
    t = lcp_residue_correspondence(whole, rad, rm)
    assert not t.lcp_base and t.lcp_residue
    assert not t.biconditional
    assert t.members_idempotent_generated is False


def test_residue_transfer_all_pairs_local(z4c3):
    # The asserted laws hold over every ideal pair; the raw
    # biconditional fails exactly on the frozen number of pairs, all
    # flagged as not idempotent-generated.
    from glab.fixtures import chain_square_zero
    expected = {
        "Z4C2": 4,
        "Z2[t]/(t^2)C2": 4,
        "Z4C3": 12,
    }
    for alg in (_alg(Zmod(4), CyclicGroup(2)),
                GroupAlgebra(chain_square_zero(), build_group(CyclicGroup(2))),
                z4c3):
        rm = residue_map(alg)
        census = enumerate_ideals(alg)
        violations = 0
        for c in census:
            for d in census:
                t = lcp_residue_correspondence(c, d, rm)
                if not t.biconditional:
                    violations += 1
                    assert t.lcp_residue and not t.lcp_base
                    assert t.members_idempotent_generated is False
        assert violations == expected[alg.label]


def test_project_code_is_ideal_image(z4c3):
    rm = residue_map(z4c3)
    c = span(z4c3, [22], "right")
    cbar = project_code(rm, c)
    assert cbar.side == "right"
    assert np.array_equal(cbar.mask, span(rm.residue, [6], "right").mask)
