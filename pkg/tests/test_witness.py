import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import psl2z_elements
from qmlen.certificates import (
    EXAMPLE_A,
    EXAMPLE_B,
    EXAMPLE_G,
    CommutatorOf,
    Factor,
    FactorizationWitness,
    TorsionOfOrder,
    involution_power_witness,
    lift_projective_witness,
    projective_torsion_witness,
    sl2z_example_witness,
    twist_commutator_witness,
    verify_witness,
    witness_failure,
)
from qmlen.errors import DomainError
from qmlen.groups import (
    S_MATRIX,
    T_MATRIX,
    IntMatrix2,
    ProjMatrix2,
    order,
    parse_permutation,
    power,
    project,
)

# reflections of a square: their product is a rotation of order 4
REFL_S = parse_permutation("(0 1)(2 3)", 4)
REFL_T = parse_permutation("(1 3)", 4)

# dihedral group of order 2*7 as permutations, st of order 7
D7_S = parse_permutation("(1 6)(2 5)(3 4)", 7)
D7_T = parse_permutation("(0 1)(2 6)(3 5)", 7)

# disjoint supports on 10 points: t moves 0..4, f swaps the two blocks
TWIST_T = parse_permutation("(0 1 2 3 4)", 10)
TWIST_F = parse_permutation("(0 5)(1 6)(2 7)(3 8)(4 9)", 10)


def test_example_factors():
    assert EXAMPLE_A * EXAMPLE_B == EXAMPLE_G
    assert order(EXAMPLE_A) == 4 == order(EXAMPLE_B)


@pytest.mark.parametrize("n", [1, 2, 3, -1, -2, 7, 50, -50])
def test_sl2z_example(n):
    w = sl2z_example_witness(n)
    assert verify_witness(w)
    assert w.target == power(EXAMPLE_G, n)
    assert len(w) <= 3
    assert all(isinstance(f.claim, TorsionOfOrder) for f in w.factors)


@pytest.mark.parametrize("s,t", [(REFL_S, REFL_T), (D7_S, D7_T),
                                 (project(EXAMPLE_A), project(EXAMPLE_B))])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 11, -1, -6])
def test_involution_powers(s, t, n):
    w = involution_power_witness(s, t, n)
    assert verify_witness(w) and len(w) == 2
    assert w.target == power(s * t, n)


def test_involution_rejects_non_involutions():
    with pytest.raises(DomainError):
        involution_power_witness(parse_permutation("(0 1 2)", 4), REFL_T, 2)
    with pytest.raises(DomainError):
        involution_power_witness(REFL_S, REFL_T, 0)


@pytest.mark.parametrize("n", [1, 2, 5, 13])
def test_twist_commutator(n):
    w = twist_commutator_witness(TWIST_F, TWIST_T, n)
    assert verify_witness(w) and len(w) == 1
    moved = TWIST_F.inverse() * TWIST_T * TWIST_F
    assert w.target == power(moved * TWIST_T.inverse(), n)


def test_twist_needs_commuting_conjugate():
    with pytest.raises(DomainError):
        twist_commutator_witness(parse_permutation("(0 3)", 5), parse_permutation("(0 1 2)", 5), 1)


@given(psl2z_elements(14).filter(lambda p: not p.is_identity()))
def test_projective_torsion(p):
    w = projective_torsion_witness(p)
    assert verify_witness(w)
    assert all(f.claim.order in (2, 3) for f in w.factors)


@given(psl2z_elements(10).filter(lambda p: not p.is_identity()), st.booleans())
def test_lift(p, flip):
    target = -p.rep if flip else p.rep
    lifted = lift_projective_witness(projective_torsion_witness(p), target)
    assert verify_witness(lifted)
    assert len(lifted) <= len(projective_torsion_witness(p)) + 1


class TestFailures:
    def test_product_mismatch_reported_first(self):
        w = FactorizationWitness(T_MATRIX, (Factor(S_MATRIX, TorsionOfOrder(3)),))
        assert witness_failure(w).startswith("product mismatch")

    def test_wrong_order(self):
        w = FactorizationWitness(S_MATRIX, (Factor(S_MATRIX, TorsionOfOrder(2)),))
        assert witness_failure(w) == "order claim failed at index 0: claimed 2, actual 4"

    def test_infinite_order(self):
        w = FactorizationWitness(T_MATRIX, (Factor(T_MATRIX, TorsionOfOrder(2)),))
        assert "actual infinite" in witness_failure(w)

    def test_commutator_claim(self):
        x, y = parse_permutation("(0 1)", 3), parse_permutation("(1 2)", 3)
        assert not verify_witness(FactorizationWitness(x * y, ()))
        c = x * y * x.inverse() * y.inverse()
        assert verify_witness(FactorizationWitness(c, (Factor(c, CommutatorOf(x, y)),)))
        bad = FactorizationWitness(c, (Factor(c, CommutatorOf(y, x)),))
        assert witness_failure(bad) == "commutator claim failed at index 0"

    def test_group_mismatch(self):
        w = FactorizationWitness(T_MATRIX, (Factor(ProjMatrix2(T_MATRIX), TorsionOfOrder(2)),))
        assert witness_failure(w).startswith("group mismatch at index 0")

    def test_empty_witness_for_identity(self):
        assert verify_witness(FactorizationWitness(IntMatrix2(1, 0, 0, 1), ()))

    def test_lift_rejects_wrong_target(self):
        pw = projective_torsion_witness(ProjMatrix2(T_MATRIX))
        with pytest.raises(DomainError):
            lift_projective_witness(pw, S_MATRIX)
