"""The small exact fixture corpus used by tests, demos and the CLI.

Everything here is dimension <= 4 before products are taken:

* the ground field ``k``;
* group algebras of the cyclic groups of order 2 and 3, classical and
  (for order 3) twisted along the inversion automorphism;
* the standard 4-dimensional Hopf algebra generated by a grouplike ``g``
  and a skew-primitive ``x`` (``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``),
  classical and twisted along ``g -> g, x -> 2x``.
"""

from __future__ import annotations

from fractions import Fraction

from homcat import exactlin as xl
from homcat.doihopf import ComoduleStructure, DoiHopfDatum, ModuleStructure
from homcat.homalg import HomAlgebra, HomCoalgebra, HomBialgebra, HomHopfAlgebra, twist_by_endomorphism

__all__ = [
    "ground_field",
    "kz2",
    "kz3",
    "kz3_inversion",
    "kz3_twisted",
    "sweedler",
    "sweedler_scaling",
    "sweedler_twisted",
    "hopf_from_tables",
    "regular_datum",
    "adjoint_datum",
]


def hopf_from_tables(dim, mult_table, comult_table, counit, antipode_table, name=""):
    """Build a classical Hopf algebra from sparse tables.

    ``mult_table[(i, j)]`` lists ``(k, coeff)`` terms of ``e_i . e_j``;
    ``comult_table[i]`` lists ``(j, k, coeff)`` terms; ``antipode_table[i]``
    lists ``(j, coeff)``.  Basis vector 0 is the unit.
    """
    mult = xl.zeros((dim, dim, dim))
    for (i, j), terms in mult_table.items():
        for k, c in terms:
            mult[i, j, k] = xl.frac(c)
    comult = xl.zeros((dim, dim, dim))
    for i, terms in comult_table.items():
        for j, k, c in terms:
            comult[i, j, k] = xl.frac(c)
    eps = xl.zeros(dim)
    for i, c in enumerate(counit):
        eps[i] = xl.frac(c)
    s = xl.zeros((dim, dim))
    for i, terms in antipode_table.items():
        for j, c in terms:
            s[j, i] = xl.frac(c)
    unit = xl.basis_vector(dim, 0)
    return HomHopfAlgebra.from_tensors(mult, unit, comult, eps, xl.identity(dim), s, name=name)


def ground_field() -> HomHopfAlgebra:
    """The one-dimensional structure: everything is the identity."""
    one = [(0, 1)]
    return hopf_from_tables(1, {(0, 0): one}, {0: [(0, 0, 1)]}, [1], {0: one}, name="k")


def _cyclic_group_algebra(order: int, name: str) -> HomHopfAlgebra:
    mult = {}
    comult = {}
    antipode = {}
    for i in range(order):
        for j in range(order):
            mult[(i, j)] = [((i + j) % order, 1)]
        comult[i] = [(i, i, 1)]
        antipode[i] = [((-i) % order, 1)]
    return hopf_from_tables(order, mult, comult, [1] * order, antipode, name=name)


def kz2() -> HomHopfAlgebra:
    """Group algebra of the order-2 cyclic group; basis {1, g}."""
    return _cyclic_group_algebra(2, "kZ2")


def kz3() -> HomHopfAlgebra:
    """Group algebra of the order-3 cyclic group; basis {1, g, g^2}."""
    return _cyclic_group_algebra(3, "kZ3")


def kz3_inversion():
    """The inversion automorphism g -> g^2 of the order-3 group algebra."""
    m = xl.zeros((3, 3))
    m[0, 0] = Fraction(1)
    m[2, 1] = Fraction(1)
    m[1, 2] = Fraction(1)
    return m


def kz3_twisted() -> HomHopfAlgebra:
    return twist_by_endomorphism(kz3(), kz3_inversion())


def sweedler() -> HomHopfAlgebra:
    """The 4-dimensional Hopf algebra; basis {1, g, x, gx}.

    Relations g^2 = 1, x^2 = 0, xg = -gx; g grouplike, x skew-primitive
    (split(x) = x (x) 1 + g (x) x); antipode g -> g, x -> -gx.
    """
    ONE, G, X, GX = range(4)
    mult = {
        (ONE, ONE): [(ONE, 1)], (ONE, G): [(G, 1)], (ONE, X): [(X, 1)], (ONE, GX): [(GX, 1)],
        (G, ONE): [(G, 1)], (G, G): [(ONE, 1)], (G, X): [(GX, 1)], (G, GX): [(X, 1)],
        (X, ONE): [(X, 1)], (X, G): [(GX, -1)], (X, X): [], (X, GX): [],
        (GX, ONE): [(GX, 1)], (GX, G): [(X, -1)], (GX, X): [], (GX, GX): [],
    }
    comult = {
        ONE: [(ONE, ONE, 1)],
        G: [(G, G, 1)],
        X: [(X, ONE, 1), (G, X, 1)],
        GX: [(GX, G, 1), (ONE, GX, 1)],
    }
    # split(gx) = (g (x) g)(x (x) 1 + g (x) x) = gx (x) g + 1 (x) gx  (g^2 = 1)
    counit = [1, 1, 0, 0]
    antipode = {
        ONE: [(ONE, 1)],
        G: [(G, 1)],
        X: [(GX, -1)],
        GX: [(X, 1)],
    }
    return hopf_from_tables(4, mult, comult, counit, antipode, name="H4")


def sweedler_scaling(lam=2):
    """The bialgebra automorphism g -> g, x -> lam x of the 4-dim fixture."""
    m = xl.identity(4)
    m[2, 2] = xl.frac(lam)
    m[3, 3] = xl.frac(lam)
    return m


def sweedler_twisted(lam=2) -> HomHopfAlgebra:
    return twist_by_endomorphism(sweedler(), sweedler_scaling(lam))


def _regular_coaction(H: HomHopfAlgebra) -> ComoduleStructure:
    """H coacting on itself by its own coproduct."""
    return ComoduleStructure(H.comult.copy(), H.twist.copy())


def regular_datum(H: HomHopfAlgebra) -> DoiHopfDatum:
    """(H, H, k): the regular coaction with the trivial coalgebra side."""
    k = ground_field()
    act = xl.zeros((H.dim, 1, 1))
    for h in range(H.dim):
        act[h, 0, 0] = H.counit[h]
    return DoiHopfDatum(
        H, H.algebra, k.coalgebra,
        _regular_coaction(H), ModuleStructure(act, xl.identity(1)),
        A_bialgebra=H, C_bialgebra=k,
        name=f"regular({H.name})")


def adjoint_action(H: HomHopfAlgebra) -> ModuleStructure:
    """H acting on itself by the twisted two-sided conjugation.

    A basis element h sends g to the product of (first leg of h times
    untwisted g) with the antipode of the twisted second leg.
    """
    n = H.dim
    act = xl.zeros((n, n, n))
    s_alpha = xl.mat_mul(H.antipode, H.twist)
    for h in range(n):
        for h1, h2, w in H.split_basis(h):
            for g in range(n):
                inner = H.mul(xl.basis_vector(n, h1), H.twist_inv[:, g].copy())
                vec = H.mul(inner, s_alpha[:, h2].copy())
                for k, x in enumerate(vec):
                    if x != 0:
                        act[h, g, k] += w * x
    return ModuleStructure(act, H.twist.copy())


def adjoint_datum(H: HomHopfAlgebra) -> DoiHopfDatum:
    """(H, H, H): regular coaction, conjugation action.

    Monoidal whenever H is cocommutative (the twisted fixtures above
    all are, except the 4-dimensional one).
    """
    return DoiHopfDatum(
        H, H.algebra, H.coalgebra,
        _regular_coaction(H), adjoint_action(H),
        A_bialgebra=H, C_bialgebra=H,
        name=f"adjoint({H.name})")
