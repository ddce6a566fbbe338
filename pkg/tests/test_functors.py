import pytest

from homcat import doihopf as dh
from homcat import exactlin as xl
from homcat import fixtures as fx
from homcat import functors as fn
from homcat.errors import PreconditionError
from homcat.homalg import AxiomReport


@pytest.fixture(scope="module")
def setup_kz3():
    d = dh.yetter_drinfeld_datum(fx.kz3_twisted())
    return d, dh.canonical_module(d, "C"), dh.canonical_module(d, "A")


@pytest.fixture(scope="module")
def setup_kz2():
    d = dh.yetter_drinfeld_datum(fx.kz2())
    return d, dh.canonical_module(d, "C"), dh.canonical_module(d, "A")


# ------------------------------------------------------------ datum morphisms

def test_identity_morphism_passes(setup_kz3):
    d, _, _ = setup_kz3
    assert fn.identity_morphism(d).report.overall


def test_counit_collapse_morphism(setup_kz3):
    d, _, _ = setup_kz3
    target, phi = fn.counit_collapse(d)
    assert target.datum_report.overall
    assert target.monoidal_report.overall
    assert phi.report.overall
    assert fn.check_monoidal_morphism(phi).overall


def test_twist_triple_is_morphism(setup_kz3):
    d, _, _ = setup_kz3
    phi = fn.DatumMorphism(d, d, d.H.twist.copy(), d.A.twist.copy(), d.C.twist.copy())
    assert phi.report.overall


def test_zero_gamma_fails_counit(setup_kz3):
    d, _, _ = setup_kz3
    phi = fn.DatumMorphism(d, d, xl.identity(d.H.dim), xl.identity(d.A.dim),
                           xl.zeros((d.C.dim, d.C.dim)))
    rep = phi.report
    assert not rep.entry("gamma-counit").passed


# -------------------------------------------------------------------- induce

def test_induce_identity_morphism_is_iso_to_input(setup_kz3):
    # the explicit inverse pair of the first assertion of the induction
    # tensor identity: a' (x) a -> untwisted a' times beta(untwisted a)
    d, _, A = setup_kz3
    phi = fn.identity_morphism(d)
    FA = fn.induce(phi, A)
    assert FA.dim == A.dim
    na = d.A.dim
    a3inv = xl.compose(d.A.twist_inv, d.A.twist_inv, d.A.twist_inv)
    a2inv = xl.mat_mul(d.A.twist_inv, d.A.twist_inv)
    formula = xl.zeros((na, na * na))
    for ap in range(na):
        for a in range(na):
            formula[:, ap * na + a] = d.A.mul(a3inv[:, ap].copy(), a2inv[:, a].copy())
    f = xl.mat_mul(formula, FA.section)
    fwd = dh.validate_morphism(dh.ModuleMorphism(FA, A, f))
    # inverse: a' -> class of twisted-squared a' (x) 1
    ginv = xl.zeros((na * na, na))
    a2 = xl.mat_mul(d.A.twist, d.A.twist)
    for ap in range(na):
        ginv[:, ap] = xl.tensor_vec(a2[:, ap].copy(), d.A.unit)
    g = xl.mat_mul(FA.projection, ginv)
    assert xl.array_eq(xl.mat_mul(f, g), xl.identity(na))
    assert xl.array_eq(xl.mat_mul(g, f), xl.identity(FA.dim))


def test_induce_trivial_module_rank(setup_kz2):
    # quotient-rank oracle: the balancing relations identify b'a with
    # counit(a) b', so the quotient collapses to the ground field
    d, _, _ = setup_kz2
    phi = fn.identity_morphism(d)
    k = dh.unit_module(d)
    gens = fn._balanced_generators(phi, k)
    rank = xl.rank(xl.from_columns(gens, dim=d.A.dim))
    Fk = fn.induce(phi, k)
    assert Fk.dim == d.A.dim - rank == 1


def test_induce_quotient_relation(setup_kz3):
    d, C, _ = setup_kz3
    phi = fn.identity_morphism(d)
    FC = fn.induce(phi, C)
    na, dm = d.A.dim, C.dim
    for b in range(na):
        for a in range(na):
            for m in range(dm):
                lhs = xl.tensor_vec(d.A.mul_basis(b, a), C.twist[:, m].copy())
                rhs = xl.tensor_vec(d.A.twist[:, b].copy(), C.action.act_basis(a, m))
                assert xl.array_eq(xl.mat_vec(FC.projection, lhs),
                                   xl.mat_vec(FC.projection, rhs))


def test_induce_output_passes(setup_kz3):
    d, C, A = setup_kz3
    src, phi = fn.unit_expand(d)
    kC = dh.canonical_module(src, "C")
    F = fn.induce(phi, kC)
    assert F.report.overall


# ------------------------------------------------------------------- coinduce

def test_coinduce_counit_target_gives_coalgebra_module(setup_kz3):
    d, C, _ = setup_kz3
    target, phi = fn.counit_collapse(d)
    Gk = fn.coinduce(phi, dh.unit_module(target))
    assert xl.array_eq(Gk.action.act_tensor, C.action.act_tensor)
    assert xl.array_eq(Gk.coaction.coact_tensor, C.coaction.coact_tensor)


def test_coinduce_identity_gamma_explicit_iso(setup_kz3):
    # the cotensor of the coalgebra module retracts onto it by
    # counit (x) identity; the verified inverse is the canonical
    # coaction c -> c1 (x) untwisted c2 (the printed inverse with an
    # extra inner twist composes to the inverse twist instead)
    d, C, _ = setup_kz3
    phi = fn.identity_morphism(d)
    GC = fn.coinduce(phi, C)
    assert GC.dim == C.dim
    nc = d.C.dim
    # f(c' (x) c) = counit(c') c
    f_amb = xl.zeros((nc, nc * nc))
    for cp in range(nc):
        e = d.C.counit[cp]
        if e == 0:
            continue
        for c in range(nc):
            f_amb[c, cp * nc + c] = e
    f = xl.mat_mul(f_amb, GC.inclusion)
    dh.validate_morphism(dh.ModuleMorphism(GC, C, f))
    # g(c) = c1 (x) untwisted c2, which is the canonical coaction vector
    g_amb = xl.zeros((nc * nc, nc))
    cinv = d.C.twist_inv
    for c in range(nc):
        for j, k, w in d.C.split_basis(c):
            g_amb[:, c] += w * xl.tensor_vec(xl.basis_vector(nc, j), cinv[:, k].copy())
    # image lies in the cotensor subspace
    fixed = xl.mat_mul(GC.inclusion, xl.mat_mul(GC.retraction, g_amb))
    assert xl.array_eq(fixed, g_amb)
    g = xl.mat_mul(GC.retraction, g_amb)
    assert xl.array_eq(xl.mat_mul(f, g), xl.identity(nc))
    assert xl.array_eq(xl.mat_mul(g, f), xl.identity(GC.dim))


def test_cotensor_with_trivial_coacting_side_is_everything():
    d = dh.yetter_drinfeld_datum(fx.kz2())
    target, phi = fn.counit_collapse(d)
    k = dh.unit_module(target)
    Gk = fn.coinduce(phi, k)
    assert Gk.dim == 1 * d.C.dim


def test_coinduce_output_passes(setup_kz3):
    d, C, A = setup_kz3
    phi = fn.identity_morphism(d)
    assert fn.coinduce(phi, A).report.overall


# ----------------------------------------------------------------- adjunction

def test_adjunction_triangles_identity(setup_kz3):
    d, C, A = setup_kz3
    phi = fn.identity_morphism(d)
    rep = fn.adjunction_triangles(phi, C, A)
    assert rep.overall, rep.failed()


def test_adjunction_triangles_collapse(setup_kz2, setup_kz3):
    for d, C, A in (setup_kz2, setup_kz3):
        target, phi = fn.counit_collapse(d)
        k2 = dh.unit_module(target)
        rep = fn.adjunction_triangles(phi, C, k2)
        assert rep.overall, rep.failed()


def test_adjunction_unit_invertible_for_identity(setup_kz3):
    d, C, _ = setup_kz3
    phi = fn.identity_morphism(d)
    eta, _ = fn.adjunction_maps(phi, C, C)
    assert xl.invert(eta.matrix) is not None


def test_adjunction_counit_kills_counitless_leg(setup_kz3):
    # a column whose coalgebra leg has zero counit maps to zero
    d, C, A = setup_kz3
    phi = fn.identity_morphism(d)
    eta, delta = fn.adjunction_maps(phi, C, A)
    FGA = delta.source
    GA = fn.coinduce(phi, A)
    # build an ambient vector with a counit-free C-leg: impossible for the
    # group-like fixture (all counits are 1), so check the formula shape
    # through the zero vector instead
    assert xl.is_zero(xl.mat_vec(delta.matrix, xl.zeros(FGA.dim)))


# ----------------------------------------------------------- tensor identities

def test_tensor_identity_coinduction_all_fixtures():
    for build in (fx.kz2, fx.kz3_twisted):
        d = dh.yetter_drinfeld_datum(build())
        C = dh.canonical_module(d, "C")
        A = dh.canonical_module(d, "A")
        phi = fn.identity_morphism(d)
        p1, q1 = fn.tensor_identity_coinduction(phi, C, A)
        assert xl.array_eq(xl.mat_mul(p1.matrix, q1.matrix), xl.identity(p1.target.dim))
        assert xl.array_eq(xl.mat_mul(q1.matrix, p1.matrix), xl.identity(p1.source.dim))


def test_tensor_identity_coinduction_counit_case_matches_direct(setup_kz3):
    # with gamma the counit this is the forgetful isomorphism; compare to
    # the directly-built matrix m (x) c -> m0 (x) twisted(m1 c)
    d, C, _ = setup_kz3
    target, phi = fn.counit_collapse(d)
    k2 = dh.unit_module(target)
    p1, _ = fn.tensor_identity_coinduction(phi, C, k2)
    nc = d.C.dim
    ac2inv = xl.mat_mul(d.C.twist_inv, d.C.twist_inv)
    direct = xl.zeros((C.dim * nc, C.dim * nc))
    for m in range(C.dim):
        for m0, c1, w in C.coaction.coact_basis(m):
            for c in range(nc):
                cv = xl.mat_vec(ac2inv, d.C_bialgebra.mul_basis(c1, c))
                for cc, x in enumerate(cv):
                    if x != 0:
                        direct[m0 * nc + cc, m * nc + c] += w * x
    assert xl.array_eq(p1.matrix, direct)


def test_tensor_identity_coinduction_classical_oracle(setup_kz2):
    # identity twists: the same formula with no twist corrections
    d, C, A = setup_kz2
    phi = fn.identity_morphism(d)
    p1, _ = fn.tensor_identity_coinduction(phi, C, A)
    GN = fn.coinduce(phi, A)
    cod = p1.target
    nc = d.C.dim
    amb = xl.zeros(((C.dim * A.dim) * nc, C.dim * (A.dim * nc)))
    for m in range(C.dim):
        for m0, c1, w in C.coaction.coact_basis(m):
            for n in range(A.dim):
                for c in range(nc):
                    col = m * (A.dim * nc) + n * nc + c
                    prod = d.C_bialgebra.mul_basis(c1, c)
                    for cc, x in enumerate(prod):
                        if x != 0:
                            amb[(m0 * A.dim + n) * nc + cc, col] += w * x
    classical = xl.compose(cod.retraction, amb,
                           xl.tensor_map(xl.identity(C.dim), GN.inclusion))
    assert xl.array_eq(p1.matrix, classical)


def test_tensor_identity_induction_all_fixtures():
    for build in (fx.kz2, fx.kz3_twisted):
        d = dh.yetter_drinfeld_datum(build())
        C = dh.canonical_module(d, "C")
        A = dh.canonical_module(d, "A")
        phi = fn.identity_morphism(d)
        p2, q2 = fn.tensor_identity_induction(phi, C, A)
        assert xl.array_eq(xl.mat_mul(p2.matrix, q2.matrix), xl.identity(p2.target.dim))
        assert xl.array_eq(xl.mat_mul(q2.matrix, p2.matrix), xl.identity(p2.source.dim))


def test_tensor_identity_induction_unit_expansion(setup_kz3):
    d, C, A = setup_kz3
    src, phi = fn.unit_expand(d)
    kC = dh.canonical_module(src, "C")
    p2, q2 = fn.tensor_identity_induction(phi, kC, A)
    assert xl.array_eq(xl.mat_mul(p2.matrix, q2.matrix), xl.identity(p2.target.dim))


def test_tensor_identity_induction_unit_coproduct_column(setup_kz3):
    # a' = 1: the image of 1 (x) (m (x) n) is (1 (x) m) (x) untwisted n
    d, C, A = setup_kz3
    phi = fn.identity_morphism(d)
    p2, _ = fn.tensor_identity_induction(phi, C, A)
    dom, cod = p2.source, p2.target
    FM = fn.induce(phi, C)
    na, dm, dn = d.A.dim, C.dim, A.dim
    for m in range(dm):
        for n in range(dn):
            col = xl.zeros(na * dm * dn)
            col[(0 * dm + m) * dn + n] = xl.frac(1)  # basis 0 is the unit of A
            got = xl.mat_vec(p2.matrix, xl.mat_vec(dom.projection, col))
            want = xl.tensor_vec(
                xl.mat_vec(FM.projection,
                           xl.tensor_vec(d.A.unit, xl.basis_vector(dm, m))),
                A.twist_inv[:, n].copy())
            assert xl.array_eq(got, want)


def test_restriction_passes_and_is_identity_for_identity_beta(setup_kz3):
    d, _, A = setup_kz3
    phi = fn.identity_morphism(d)
    res = fn.restrict_module(phi, A)
    assert res.report.overall
    assert xl.array_eq(res.action.act_tensor, A.action.act_tensor)


def test_corestriction_requires_identity_legs(setup_kz3):
    d, C, A = setup_kz3
    src, phi = fn.unit_expand(d)
    with pytest.raises(PreconditionError):
        fn.corestrict_module(phi, C)
