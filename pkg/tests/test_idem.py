"""Idempotent census, primitivity, decompositions, lifting."""

import numpy as np
import pytest

from glab.errors import ConstructionError, FalsificationError, ScaleError
from glab.finring import MatrixRing, Zmod, build_ring
from glab.galg import GroupAlgebra, residue_map
from glab.grp import CyclicGroup, SymmetricGroup, build_group
from glab.idem import (decompose_idempotent, decompose_one,
                       dual_of_idempotent_ideal, enumerate_idempotents,
                       idempotent_census, is_idempotent, is_primitive,
                       lift_idempotent)
from glab.ideals import dual_code, ideal_intersect, ideal_sum, span


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
# census

def test_idempotents_frozen_small(f3c2, f2c3, z4c3):
    assert enumerate_idempotents(f3c2) == [0, 1, 5, 8]
    assert enumerate_idempotents(f2c3) == [0, 1, 6, 7]
    assert enumerate_idempotents(z4c3) == [0, 1, 22, 63]
    assert enumerate_idempotents(_alg(Zmod(4), CyclicGroup(2))) == [0, 1]


def test_idempotent_counts_frozen(f2s3, m2c2):
    assert len(enumerate_idempotents(f2s3)) == 16
    assert len(enumerate_idempotents(m2c2)) == 26
    m2c3 = _alg(MatrixRing(2, Zmod(2)), CyclicGroup(3))
    assert len(enumerate_idempotents(m2c3)) == 176


def test_census_flags_frozen(f2s3):
    census = idempotent_census(f2s3)
    assert [c.element for c in census if c.central] == [0, 1, 24, 25]
    prims = [c.element for c in census if c.primitive]
    assert prims == [15, 23, 25, 43, 45, 51, 53]
    assert f2s3.text(24) == "(1 2 3) + (1 3 2)"


def test_census_flags_matrix_base(m2c2):
    census = idempotent_census(m2c2)
    # only 0 and 1 are central; every other idempotent is primitive
    assert [c.element for c in census if c.central] == [0, m2c2.one]
    assert sum(c.primitive for c in census) == 24


def test_scan_is_exhaustive(f2c3):
    found = set(enumerate_idempotents(f2c3))
    for x in f2c3.elements:
        assert (f2c3.mul(x, x) == x) == (x in found)


def test_scan_scale_gate(f3c2):
    with pytest.raises(ScaleError):
        enumerate_idempotents(f3c2, bound=5)


# ---------------------------------------------------------------------------
# primitivity and decomposition

def test_primitivity_frozen(f3c2):
    assert not is_primitive(f3c2, 0)
    assert not is_primitive(f3c2, 1)
    assert is_primitive(f3c2, 5)
    assert is_primitive(f3c2, 8)


def test_primitivity_rejects_non_idempotent(f3c2):
    with pytest.raises(ConstructionError):
        is_primitive(f3c2, 2)


def test_decompose_one_frozen(f3c2, f2c3):
    assert decompose_one(f3c2) == [5, 8]
    assert decompose_one(f2c3) == [6, 7]


def test_decompose_one_invariants(f2s3, m2c2):
    for alg in (f2s3, m2c2):
        parts = decompose_one(alg)
        total = 0
        for p in parts:
            assert is_idempotent(alg, p) and is_primitive(alg, p)
            total = alg.add(total, p)
        assert total == alg.one
        for i, p in enumerate(parts):
            for q in parts[i + 1:]:
                assert alg.mul(p, q) == 0 and alg.mul(q, p) == 0
    assert decompose_one(m2c2) == [1, 8]  # E11 and E22 at the identity


def test_decompose_primitive_is_itself(f3c2):
    assert decompose_idempotent(f3c2, 5) == [5]
    assert decompose_idempotent(f3c2, 0) == []


def test_decompose_rejects_non_idempotent(f2c3):
    with pytest.raises(ConstructionError):
        decompose_idempotent(f2c3, 2)


# ---------------------------------------------------------------------------
# Peirce split and complement duality

def test_complement_split_sizes(f3c2, f2c3, f2s3, m2c2):
    for alg in (f3c2, f2c3, f2s3, m2c2):
        for e in enumerate_idempotents(alg):
            c = span(alg, [e], "right")
            d = span(alg, [alg.one_minus(e)], "right")
            assert c.cardinality * d.cardinality == alg.card
            assert ideal_intersect(c, d).is_zero()
            assert ideal_sum(c, d).is_full()


def test_involution_preserves_ideal_size(f3c2, f2s3, m2c2):
    for alg in (f3c2, f2s3, m2c2):
        for e in enumerate_idempotents(alg):
            ehat = alg.hat(e)
            assert is_idempotent(alg, ehat)
            assert (span(alg, [ehat], "right").cardinality
                    == span(alg, [e], "right").cardinality)


def test_dual_of_idempotent_ideal_frozen(f3c2):
    d = dual_of_idempotent_ideal(f3c2, 8)
    assert list(d.elements()) == [0, 5, 7]
    assert d.generators == (5,)  # 1 - hat(2+2g) = 2+g


def test_dual_of_idempotent_ideal_commutative(f3c2, f2c3, f2s3):
    for alg in (f3c2, f2c3, f2s3):
        for e in enumerate_idempotents(alg):
            d = dual_of_idempotent_ideal(alg, e)
            assert d.same_set(dual_code(span(alg, [e], "right")))


def test_dual_of_idempotent_ideal_fails_over_matrix_base(m2c2):
    # E11 at the identity: the dual of its right ideal is a left ideal
    # that no single right generator reproduces.
    with pytest.raises(FalsificationError):
        dual_of_idempotent_ideal(m2c2, 1)


def test_dual_of_idempotent_ideal_rejects_non_idempotent(f3c2):
    with pytest.raises(ConstructionError):
        dual_of_idempotent_ideal(f3c2, 2)


# ---------------------------------------------------------------------------
# lifting

def test_lift_frozen_z4c3(z4c3):
    rm = residue_map(z4c3)
    assert rm.residue.label == "Z4/radC3"
    assert rm.residue.ring.card == 2
    # g + g^2 in the residue algebra lifts to 2 + g + g^2
    assert lift_idempotent(z4c3, rm, 6) == 22
    assert z4c3.text(22) == "2 + g + g^2"


def test_lift_covers_all_residue_idempotents(z4c3):
    rm = residue_map(z4c3)
    lifted = sorted(lift_idempotent(z4c3, rm, eb)
                    for eb in enumerate_idempotents(rm.residue))
    assert lifted == enumerate_idempotents(z4c3)


def test_lift_over_chain_ring_base():
    from glab.fixtures import chain_square_zero
    alg = GroupAlgebra(chain_square_zero(), build_group(CyclicGroup(2)))
    rm = residue_map(alg)
    for eb in enumerate_idempotents(rm.residue):
        e = lift_idempotent(alg, rm, eb)
        assert is_idempotent(alg, e) and rm.reduce(e) == eb


def test_lift_is_identity_when_radical_trivial(f3c2):
    rm = residue_map(f3c2)
    assert rm.residue.card == f3c2.card
    for eb in enumerate_idempotents(rm.residue):
        e = lift_idempotent(f3c2, rm, eb)
        assert rm.reduce(e) == eb


def test_lift_rejects_non_idempotent_residue(z4c3):
    rm = residue_map(z4c3)
    with pytest.raises(ConstructionError):
        lift_idempotent(z4c3, rm, 2)
