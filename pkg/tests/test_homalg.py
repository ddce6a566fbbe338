import numpy as np
import pytest

from homcat import exactlin as xl
from homcat import fixtures as fx
from homcat.errors import PreconditionError, StructuralError
from homcat.homalg import (
    HomAlgebra,
    HomHopfAlgebra,
    check_structure,
    dual,
    opposite,
    tensor_bialgebra,
    twist_by_endomorphism,
)


@pytest.fixture(scope="module")
def h4():
    return fx.sweedler()


@pytest.fixture(scope="module")
def h4t():
    return fx.sweedler_twisted()


# ------------------------------------------------------------ check_structure

def test_ground_field_passes():
    assert check_structure(fx.ground_field()).overall


def test_group_hopf_algebras_pass():
    for h in (fx.kz2(), fx.kz3()):
        r = check_structure(h)
        assert r.overall, r.failed()


def test_twisted_fixtures_pass(h4t):
    assert check_structure(fx.kz3_twisted()).overall
    assert check_structure(h4t).overall


def test_report_entry_vocabulary(h4t):
    r = check_structure(h4t)
    for axiom in ("hom-associativity", "hom-coassociativity", "antipode-left",
                  "antipode-right", "comult-multiplicative", "twist-unit"):
        assert r.entry(axiom).passed


def test_corrupted_mult_reports_witness(h4t):
    mult = h4t.mult.copy()
    mult[1, 2, 0] += 1
    bad = HomHopfAlgebra.from_tensors(
        mult, h4t.unit.copy(), h4t.comult.copy(), h4t.counit.copy(),
        h4t.twist.copy(), h4t.antipode.copy())
    r = check_structure(bad)
    assert not r.overall
    assoc = r.entry("hom-associativity")
    if not assoc.passed:
        assert all(len(w) == 3 for w in assoc.witnesses)
        w = assoc.witnesses[0]
        assert not xl.is_zero(assoc.residual[w])


def test_mutation_detection_sweep(h4t):
    # every single-constant corruption of mult/comult/antipode is caught
    rng = np.random.default_rng(7)
    detected = 0
    trials = []
    for tensor_name in ("mult", "comult", "antipode"):
        arr = getattr(h4t, tensor_name)
        for _ in range(8):
            idx = tuple(rng.integers(0, 4, size=arr.ndim))
            trials.append((tensor_name, idx))
    for tensor_name, idx in trials:
        parts = {
            "mult": h4t.mult.copy(), "comult": h4t.comult.copy(),
            "antipode": h4t.antipode.copy(),
        }
        parts[tensor_name][idx] += 1
        bad = HomHopfAlgebra.from_tensors(
            parts["mult"], h4t.unit.copy(), parts["comult"], h4t.counit.copy(),
            h4t.twist.copy(), parts["antipode"])
        if not check_structure(bad).overall:
            detected += 1
    assert detected == len(trials) >= 20


# ------------------------------------------------------- twist_by_endomorphism

def test_twist_identity_is_noop():
    h = fx.kz2()
    t = twist_by_endomorphism(h, xl.identity(2))
    assert xl.array_eq(t.mult, h.mult)
    assert xl.array_eq(t.comult, h.comult)
    assert xl.array_eq(t.antipode, h.antipode)


def test_twist_kz3_product_values():
    t = fx.kz3_twisted()
    # new g.g = alpha(g^2) = g
    assert xl.array_eq(t.mul_basis(1, 1), xl.basis_vector(3, 1))
    # new g.g^2 = alpha(1) = 1
    assert xl.array_eq(t.mul_basis(1, 2), xl.basis_vector(3, 0))
    assert check_structure(t).overall


def test_twist_h4_all_pairs(h4, h4t):
    alpha = fx.sweedler_scaling(2)
    for i in range(4):
        for j in range(4):
            want = xl.mat_vec(alpha, h4.mul_basis(i, j))
            assert xl.array_eq(h4t.mul_basis(i, j), want)


def test_twist_rejects_non_endomorphism(h4):
    bad = xl.identity(4)
    bad[0, 1] = xl.frac(1)  # not an algebra map
    with pytest.raises(PreconditionError):
        twist_by_endomorphism(h4, bad)


def test_twist_rejects_singular(h4):
    with pytest.raises(PreconditionError):
        twist_by_endomorphism(h4, xl.zeros((4, 4)))


def test_twist_rejects_nonclassical(h4t):
    with pytest.raises(PreconditionError):
        twist_by_endomorphism(h4t, xl.identity(4))


# -------------------------------------------------------------------- opposite

def test_opposite_commutative_unchanged():
    h = fx.kz2()
    assert xl.array_eq(opposite(h).mult, h.mult)


def test_opposite_h4_is_bialgebra(h4t):
    assert check_structure(opposite(h4t)).overall


def test_opposite_involution(h4t):
    assert xl.array_eq(opposite(opposite(h4t)).mult, h4t.mult)


# ------------------------------------------------------------ tensor_bialgebra

def test_tensor_with_ground_field_is_relabeling():
    b = fx.kz2().as_bialgebra()
    t = tensor_bialgebra(fx.ground_field().as_bialgebra(), b)
    assert xl.array_eq(t.mult, b.mult)
    assert xl.array_eq(t.comult, b.comult)


def test_tensor_kz2_kz2():
    t = tensor_bialgebra(fx.kz2().as_bialgebra(), fx.kz2().as_bialgebra())
    assert t.dim == 4
    assert check_structure(t).overall


def test_tensor_op_h4_h4(h4t):
    t = tensor_bialgebra(opposite(h4t), h4t.as_bialgebra())
    assert t.dim == 16
    assert check_structure(t).overall


# ------------------------------------------------------------------------ dual

def test_dual_ground_field():
    d = dual(fx.ground_field().coalgebra)
    assert isinstance(d, HomAlgebra)
    assert check_structure(d).overall


def test_dual_kz2_is_function_algebra():
    d = dual(fx.kz2().coalgebra)
    # group-likes dualize to orthogonal idempotents' dual basis: e^i e^j = delta_ij e^i
    for i in range(2):
        for j in range(2):
            want = xl.basis_vector(2, i) if i == j else xl.zeros(2)
            assert xl.array_eq(d.mul_basis(i, j), want)
    assert check_structure(d).overall


def test_dual_twisted_passes(h4t):
    assert check_structure(dual(h4t)).overall
    assert check_structure(dual(fx.kz3_twisted())).overall


def test_bidual_entrywise(h4, h4t):
    for h in (h4, h4t):
        dd = dual(dual(h))
        assert xl.array_eq(dd.mult, h.mult)
        assert xl.array_eq(dd.comult, h.comult)
        assert xl.array_eq(dd.unit, h.unit)
        assert xl.array_eq(dd.counit, h.counit)
        assert xl.array_eq(dd.twist, h.twist)
        assert xl.array_eq(dd.antipode, h.antipode)


def test_bidual_coalgebra_entrywise(h4):
    c = h4.coalgebra
    cc = dual(dual(c))
    assert xl.array_eq(cc.comult, c.comult)
    assert xl.array_eq(cc.counit, c.counit)


# ------------------------------------------------------------------ structural

def test_dim_mismatch_raises():
    with pytest.raises(StructuralError):
        HomAlgebra(xl.zeros((2, 2, 2)), xl.zeros(3), xl.identity(2))


def test_singular_twist_rejected():
    with pytest.raises(StructuralError):
        HomAlgebra(xl.zeros((2, 2, 2)), xl.zeros(2), xl.zeros((2, 2)))


def test_structures_are_frozen(h4):
    with pytest.raises(ValueError):
        h4.mult[0, 0, 0] = 5
