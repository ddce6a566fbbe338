"""Doi-Hopf data and modules.

A datum bundles a twisted Hopf (or bi-) algebra ``H``, an ``H``-comodule
algebra ``A`` and an ``H``-module coalgebra ``C``.  A module over the
datum is simultaneously a left ``A``-module and right ``C``-comodule
whose coaction intertwines the action through ``H``.

Index conventions (lexicographic flattening throughout):

* action tensors   ``act[a, m, m']``   -- ``e_m'`` coefficient of ``e_a . e_m``;
* coaction tensors ``coact[m, m', c]`` -- ``e_m' (x) e_c`` coefficient of ``rho(e_m)``.

When ``A`` and ``C`` carry compatible bialgebra structures (a *monoidal*
datum), the module category is monoidal: the tensor of two modules acts
through the coproduct of ``A`` and coacts through the product of ``C``
corrected by the inverse twist squared, and the associator and unitors
twist by single powers of the structure maps.
"""

from __future__ import annotations

from functools import cached_property
from typing import Optional

import numpy as np

from homcat import exactlin as xl
from homcat.errors import MorphismError, PreconditionError, StructuralError
from homcat.homalg import (
    AxiomCheck,
    AxiomReport,
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopfAlgebra,
    opposite,
    tensor_bialgebra,
    tuple_check,
    _scalar,
)

__all__ = [
    "ModuleStructure",
    "ComoduleStructure",
    "DoiHopfDatum",
    "DoiHopfModule",
    "ModuleMorphism",
    "check_datum",
    "check_doi_hopf_module",
    "check_monoidal_datum",
    "split_coaction_check",
    "tensor_modules",
    "unit_module",
    "structure_maps",
    "check_pentagon",
    "check_triangle",
    "canonical_module",
    "yetter_drinfeld_datum",
    "yd_compatibility_check",
    "doi_hopf_compatibility_check",
    "check_module_morphism",
    "validate_morphism",
    "tensor_morphism",
    "associator_matrix",
]


# -------------------------------------------------------------- carrier types


class ModuleStructure:
    """A left action tensor together with the carrier's twist."""

    def __init__(self, act: np.ndarray, twist: np.ndarray):
        if act.ndim != 3 or act.shape[1] != act.shape[2]:
            raise StructuralError(f"action tensor has shape {act.shape}")
        if twist.shape != (act.shape[1], act.shape[1]):
            raise StructuralError("carrier twist does not match the action tensor")
        inv = xl.invert(twist)
        if inv is None:
            raise StructuralError("carrier twist is singular")
        self.act_tensor = act
        self.twist = twist
        self.twist_inv = inv
        self.over_dim = act.shape[0]
        self.dim = act.shape[1]
        act.setflags(write=False)
        twist.setflags(write=False)
        inv.setflags(write=False)

    @cached_property
    def _terms(self):
        terms = {}
        for (a, m, m2), c in xl.nonzero_items(self.act_tensor):
            terms.setdefault((a, m), []).append((m2, c))
        return terms

    def act_basis(self, a: int, m: int) -> np.ndarray:
        out = xl.zeros(self.dim)
        for m2, c in self._terms.get((a, m), ()):
            out[m2] = c
        return out

    def act(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = xl.zeros(self.dim)
        for a in range(self.over_dim):
            x = u[a]
            if x == 0:
                continue
            for m in range(self.dim):
                y = v[m]
                if y == 0:
                    continue
                for m2, c in self._terms.get((a, m), ()):
                    out[m2] += x * y * c
        return out


class ComoduleStructure:
    """A right coaction tensor together with the carrier's twist."""

    def __init__(self, coact: np.ndarray, twist: np.ndarray):
        if coact.ndim != 3 or coact.shape[0] != coact.shape[1]:
            raise StructuralError(f"coaction tensor has shape {coact.shape}")
        if twist.shape != (coact.shape[0], coact.shape[0]):
            raise StructuralError("carrier twist does not match the coaction tensor")
        inv = xl.invert(twist)
        if inv is None:
            raise StructuralError("carrier twist is singular")
        self.coact_tensor = coact
        self.twist = twist
        self.twist_inv = inv
        self.dim = coact.shape[0]
        self.over_dim = coact.shape[2]
        coact.setflags(write=False)
        twist.setflags(write=False)
        inv.setflags(write=False)

    @cached_property
    def _terms(self):
        terms = {m: [] for m in range(self.dim)}
        for (m, m2, c), w in xl.nonzero_items(self.coact_tensor):
            terms[m].append((m2, c, w))
        return terms

    def coact_basis(self, m: int):
        """Terms (m', c, coeff) of the coaction of a basis vector."""
        return self._terms[m]

    def coact(self, v: np.ndarray) -> np.ndarray:
        out = xl.zeros(self.dim * self.over_dim)
        for m in range(self.dim):
            x = v[m]
            if x == 0:
                continue
            for m2, c, w in self._terms[m]:
                out[m2 * self.over_dim + c] += x * w
        return out


class DoiHopfDatum:
    """(H, A, C) with the coaction of A and the action on C.

    ``H`` may be a bialgebra only: none of the datum axioms involve an
    antipode (the Yetter-Drinfeld datum feeds a tensor-square bialgebra
    here).  Optional bialgebra extensions of ``A`` and ``C`` make the
    datum monoidal.
    """

    def __init__(self, H: HomBialgebra, A: HomAlgebra, C: HomCoalgebra,
                 A_coaction: ComoduleStructure, C_action: ModuleStructure,
                 A_bialgebra: Optional[HomBialgebra] = None,
                 C_bialgebra: Optional[HomBialgebra] = None,
                 name: str = ""):
        if A_coaction.dim != A.dim or A_coaction.over_dim != H.dim:
            raise StructuralError("coaction of A has wrong dimensions")
        if C_action.dim != C.dim or C_action.over_dim != H.dim:
            raise StructuralError("action on C has wrong dimensions")
        if not xl.array_eq(A_coaction.twist, A.twist):
            raise StructuralError("coaction twist differs from the twist of A")
        if not xl.array_eq(C_action.twist, C.twist):
            raise StructuralError("action twist differs from the twist of C")
        if A_bialgebra is not None:
            if A_bialgebra.dim != A.dim or not xl.array_eq(A_bialgebra.mult, A.mult) \
                    or not xl.array_eq(A_bialgebra.unit, A.unit) \
                    or not xl.array_eq(A_bialgebra.twist, A.twist):
                raise StructuralError("bialgebra extension disagrees with A")
        if C_bialgebra is not None:
            if C_bialgebra.dim != C.dim or not xl.array_eq(C_bialgebra.comult, C.comult) \
                    or not xl.array_eq(C_bialgebra.counit, C.counit) \
                    or not xl.array_eq(C_bialgebra.twist, C.twist):
                raise StructuralError("bialgebra extension disagrees with C")
        self.H = H
        self.A = A
        self.C = C
        self.A_coaction = A_coaction
        self.C_action = C_action
        self.A_bialgebra = A_bialgebra
        self.C_bialgebra = C_bialgebra
        self.name = name

    @property
    def monoidal(self) -> bool:
        return self.A_bialgebra is not None and self.C_bialgebra is not None

    @cached_property
    def datum_report(self) -> AxiomReport:
        return check_datum(self)

    @cached_property
    def monoidal_report(self) -> AxiomReport:
        return check_monoidal_datum(self)

    def __repr__(self):
        return f"<DoiHopfDatum {self.name or ''} H={self.H.dim} A={self.A.dim} C={self.C.dim}>"


class DoiHopfModule:
    """A space acted on by A and coacted on by C, with one shared twist."""

    def __init__(self, datum: DoiHopfDatum, action: ModuleStructure,
                 coaction: ComoduleStructure, name: str = ""):
        if action.over_dim != datum.A.dim:
            raise StructuralError("action is not over A")
        if coaction.over_dim != datum.C.dim:
            raise StructuralError("coaction is not over C")
        if action.dim != coaction.dim:
            raise StructuralError("action and coaction carrier dimensions differ")
        if not xl.array_eq(action.twist, coaction.twist):
            raise StructuralError("the two halves carry different twists")
        self.datum = datum
        self.action = action
        self.coaction = coaction
        self.dim = action.dim
        self.twist = action.twist
        self.twist_inv = action.twist_inv
        self.name = name

    @cached_property
    def report(self) -> AxiomReport:
        return check_doi_hopf_module(self.datum, self)

    def __repr__(self):
        return f"<DoiHopfModule {self.name or ''} dim={self.dim}>"


class ModuleMorphism:
    """A matrix between two modules; validity is a checked property."""

    def __init__(self, source: DoiHopfModule, target: DoiHopfModule,
                 matrix: np.ndarray, name: str = ""):
        if matrix.shape != (target.dim, source.dim):
            raise StructuralError(
                f"matrix shape {matrix.shape} does not map dim {source.dim} to dim {target.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.name = name
        self.inverse: Optional[ModuleMorphism] = None
        matrix.setflags(write=False)

    def __matmul__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        return ModuleMorphism(other.source, self.target, xl.mat_mul(self.matrix, other.matrix))

    def __repr__(self):
        return f"<ModuleMorphism {self.name or ''} {self.source.dim}->{self.target.dim}>"


# ------------------------------------------------------------ generic checks


def module_axiom_checks(algebra: HomAlgebra, mod: ModuleStructure, prefix: str = "module"):
    """Unit, twist-compatibility and twisted associativity of a left action."""
    na, nm = algebra.dim, mod.dim
    e = xl.basis_vector

    return [
        tuple_check(f"{prefix}-unit", (nm,), nm,
                    lambda m: mod.act(algebra.unit, e(nm, m)),
                    lambda m: mod.twist[:, m].copy()),
        tuple_check(f"{prefix}-twist-compatibility", (na, nm), nm,
                    lambda a, m: xl.mat_vec(mod.twist, mod.act_basis(a, m)),
                    lambda a, m: mod.act(algebra.twist[:, a].copy(), mod.twist[:, m].copy())),
        tuple_check(f"{prefix}-hom-associativity", (na, na, nm), nm,
                    lambda a, b, m: mod.act(algebra.twist[:, a].copy(), mod.act_basis(b, m)),
                    lambda a, b, m: mod.act(algebra.mul_basis(a, b), mod.twist[:, m].copy())),
    ]


def comodule_axiom_checks(coalgebra: HomCoalgebra, com: ComoduleStructure, prefix: str = "comodule"):
    """Counit, twist-compatibility and twisted coassociativity of a coaction."""
    nc, nm = coalgebra.dim, com.dim

    def counit_side(m):
        out = xl.zeros(nm)
        for m2, c, w in com.coact_basis(m):
            e = coalgebra.counit[c]
            if e != 0:
                out[m2] += w * e
        return out

    def twist_coact(m):
        tcol = com.twist[:, m]
        out = xl.zeros(nm * nc)
        for i in range(nm):
            if tcol[i] == 0:
                continue
            for m2, c, w in com.coact_basis(i):
                out[m2 * nc + c] += tcol[i] * w
        return out

    def coact_twisted(m):
        out = xl.zeros(nm * nc)
        for m2, c, w in com.coact_basis(m):
            out += w * xl.tensor_vec(com.twist[:, m2].copy(), coalgebra.twist[:, c].copy())
        return out

    def coassoc_lhs(m):
        out = xl.zeros(nm * nc * nc)
        for m2, c, w in com.coact_basis(m):
            ccol = coalgebra.twist[:, c]
            for m3, c2, w2 in com.coact_basis(m2):
                base = (m3 * nc + c2) * nc
                for k in range(nc):
                    if ccol[k] != 0:
                        out[base + k] += w * w2 * ccol[k]
        return out

    def coassoc_rhs(m):
        out = xl.zeros(nm * nc * nc)
        for m2, c, w in com.coact_basis(m):
            tcol = com.twist[:, m2]
            for m3 in range(nm):
                if tcol[m3] == 0:
                    continue
                for j, k, w2 in coalgebra.split_basis(c):
                    out[(m3 * nc + j) * nc + k] += w * w2 * tcol[m3]
        return out

    return [
        tuple_check(f"{prefix}-counit", (nm,), nm,
                    counit_side, lambda m: com.twist[:, m].copy()),
        tuple_check(f"{prefix}-twist-compatibility", (nm,), nm * nc,
                    twist_coact, coact_twisted),
        tuple_check(f"{prefix}-coassociativity", (nm,), nm * nc * nc,
                    coassoc_lhs, coassoc_rhs),
    ]


def check_datum(d: DoiHopfDatum) -> AxiomReport:
    """Comodule-algebra axioms of A and module-coalgebra axioms of C."""
    H, A, C = d.H, d.A, d.C
    na, nh, nc = A.dim, H.dim, C.dim

    entries = comodule_axiom_checks(H.coalgebra, d.A_coaction, prefix="comodule")

    def coact_of_product(i, j):
        return d.A_coaction.coact(A.mul_basis(i, j))

    def product_of_coacts(i, j):
        out = xl.zeros(na * nh)
        for a1, h1, w1 in d.A_coaction.coact_basis(i):
            for a2, h2, w2 in d.A_coaction.coact_basis(j):
                out += (w1 * w2) * xl.tensor_vec(A.mul_basis(a1, a2), H.mul_basis(h1, h2))
        return out

    entries.append(tuple_check("comodule-algebra-multiplicative", (na, na), na * nh,
                               coact_of_product, product_of_coacts))
    entries.append(tuple_check("comodule-algebra-unit", (), na * nh,
                               lambda: d.A_coaction.coact(A.unit),
                               lambda: xl.tensor_vec(A.unit, H.unit)))

    entries += module_axiom_checks(H.algebra, d.C_action, prefix="module")

    def split_of_action(h, c):
        return C.split(d.C_action.act_basis(h, c))

    def action_of_splits(h, c):
        out = xl.zeros(nc * nc)
        for h1, h2, w1 in H.split_basis(h):
            for c1, c2, w2 in C.split_basis(c):
                out += (w1 * w2) * xl.tensor_vec(
                    d.C_action.act_basis(h1, c1), d.C_action.act_basis(h2, c2))
        return out

    entries.append(tuple_check("module-coalgebra-comultiplicative", (nh, nc), nc * nc,
                               split_of_action, action_of_splits))
    entries.append(tuple_check("module-coalgebra-counit", (nh, nc), 1,
                               lambda h, c: _scalar(C.counit_of(d.C_action.act_basis(h, c))),
                               lambda h, c: _scalar(H.counit[h] * C.counit[c])))
    return AxiomReport(entries)


def doi_hopf_compatibility_check(d: DoiHopfDatum, action: ModuleStructure,
                                 coaction: ComoduleStructure) -> AxiomCheck:
    """Only the interchange law between action and coaction, standalone."""
    na, nc, nm = d.A.dim, d.C.dim, action.dim

    def lhs(a, m):
        return coaction.coact(action.act_basis(a, m))

    def rhs(a, m):
        out = xl.zeros(nm * nc)
        for a0, h, w1 in d.A_coaction.coact_basis(a):
            for m0, c, w2 in coaction.coact_basis(m):
                out += (w1 * w2) * xl.tensor_vec(
                    action.act_basis(a0, m0), d.C_action.act_basis(h, c))
        return out

    return tuple_check("doi-hopf-compatibility", (na, nm), nm * nc, lhs, rhs)


def check_doi_hopf_module(d: DoiHopfDatum, M: DoiHopfModule) -> AxiomReport:
    entries = module_axiom_checks(d.A, M.action, prefix="module")
    entries += comodule_axiom_checks(d.C, M.coaction, prefix="comodule")
    entries.append(doi_hopf_compatibility_check(d, M.action, M.coaction))
    return AxiomReport(entries)


def _require_monoidal_data(d: DoiHopfDatum):
    if not d.monoidal:
        raise StructuralError("datum carries no bialgebra extensions on A and C")


def check_monoidal_datum(d: DoiHopfDatum) -> AxiomReport:
    """The two compatibilities that make the module category monoidal."""
    _require_monoidal_data(d)
    A, C, H = d.A_bialgebra, d.C_bialgebra, d.H
    na, nc = A.dim, C.dim
    alpha_h2 = xl.mat_mul(H.twist, H.twist)

    def t3(u, v, w):
        return xl.tensor_vec(xl.tensor_vec(u, v), w)

    def lhs(a, c, cd):
        out = xl.zeros(na * na * nc)
        prod = C.mul_basis(c, cd)
        for a0, h, w in d.A_coaction.coact_basis(a):
            hvec = alpha_h2[:, h].copy()
            acted = d.C_action.act(hvec, prod)
            for a01, a02, w2 in A.split_basis(a0):
                out += (w * w2) * t3(xl.basis_vector(na, a01), xl.basis_vector(na, a02), acted)
        return out

    def rhs(a, c, cd):
        out = xl.zeros(na * na * nc)
        for a1, a2, w in A.split_basis(a):
            for a10, h1, w1 in d.A_coaction.coact_basis(a1):
                left = d.C_action.act_basis(h1, c)
                for a20, h2, w2 in d.A_coaction.coact_basis(a2):
                    right = d.C_action.act_basis(h2, cd)
                    out += (w * w1 * w2) * t3(
                        xl.basis_vector(na, a10), xl.basis_vector(na, a20),
                        C.mul(left, right))
        return out

    def unit_lhs(a):
        return A.counit[a] * C.unit

    def unit_rhs(a):
        out = xl.zeros(nc)
        for a0, h, w in d.A_coaction.coact_basis(a):
            e = A.counit[a0]
            if e != 0:
                out += (w * e) * d.C_action.act(xl.basis_vector(H.dim, h), C.unit)
        return out

    return AxiomReport([
        tuple_check("monoidal-coaction-coproduct", (na, nc, nc), na * na * nc, lhs, rhs),
        tuple_check("monoidal-coaction-counit", (na,), nc, unit_lhs, unit_rhs),
    ])


def split_coaction_check(d: DoiHopfDatum) -> AxiomCheck:
    """Optional: coaction and coproduct of A interchange legwise.

    This stronger condition implies the monoidal compatibilities whenever
    C is a module bialgebra; it is named, not required.
    """
    _require_monoidal_data(d)
    A, H = d.A_bialgebra, d.H
    na, nh = A.dim, H.dim

    def lhs(a):
        out = xl.zeros(na * na * nh * nh)
        for a0, h, w in d.A_coaction.coact_basis(a):
            for j, k, w2 in A.split_basis(a0):
                for h1, h2, w3 in H.split_basis(h):
                    out[((j * na + k) * nh + h1) * nh + h2] += w * w2 * w3
        return out

    def rhs(a):
        out = xl.zeros(na * na * nh * nh)
        for a1, a2, w in A.split_basis(a):
            for a10, h1, w1 in d.A_coaction.coact_basis(a1):
                for a20, h2, w2 in d.A_coaction.coact_basis(a2):
                    out[((a10 * na + a20) * nh + h1) * nh + h2] += w * w1 * w2
        return out

    return tuple_check("coaction-coproduct-split", (na,), na * na * nh * nh, lhs, rhs)


# ----------------------------------------------------------- monoidal product


def _require_pass(report: AxiomReport, what: str):
    if not report.overall:
        bad = [e.axiom for e in report.failed()]
        raise PreconditionError(f"{what} fails: {bad}", report)


def tensor_modules(d: DoiHopfDatum, M: DoiHopfModule, N: DoiHopfModule,
                   check: bool = True) -> DoiHopfModule:
    """The tensor module: act through the coproduct of A, coact through
    the product of C corrected by the inverse twist squared."""
    if check:
        _require_pass(d.monoidal_report, "monoidal datum check")
        _require_pass(M.report, "left module check")
        _require_pass(N.report, "right module check")
    A, C = d.A_bialgebra, d.C_bialgebra
    na, nc = A.dim, C.dim
    dm, dn = M.dim, N.dim
    dim = dm * dn
    alpha_c2_inv = xl.mat_mul(C.twist_inv, C.twist_inv)

    act = xl.zeros((na, dim, dim))
    for a in range(na):
        for a1, a2, w in A.split_basis(a):
            for m in range(dm):
                left = M.action.act_basis(a1, m)
                for n in range(dn):
                    right = N.action.act_basis(a2, n)
                    vec = xl.tensor_vec(left, right)
                    col = m * dn + n
                    for t, x in enumerate(vec):
                        if x != 0:
                            act[a, col, t] += w * x

    coact = xl.zeros((dim, dim, nc))
    for m in range(dm):
        for m0, c1, w1 in M.coaction.coact_basis(m):
            for n in range(dn):
                for n0, c2, w2 in N.coaction.coact_basis(n):
                    cvec = xl.mat_vec(alpha_c2_inv, C.mul_basis(c1, c2))
                    row = m * dn + n
                    tgt = m0 * dn + n0
                    for cc, x in enumerate(cvec):
                        if x != 0:
                            coact[row, tgt, cc] += w1 * w2 * x

    twist = xl.tensor_map(M.twist, N.twist)
    return DoiHopfModule(
        d, ModuleStructure(act, twist), ComoduleStructure(coact, twist),
        name=f"{M.name}(x){N.name}" if M.name and N.name else "")


def unit_module(d: DoiHopfDatum) -> DoiHopfModule:
    """The ground field with counit action and unit coaction."""
    _require_monoidal_data(d)
    na, nc = d.A.dim, d.C.dim
    act = xl.zeros((na, 1, 1))
    for a in range(na):
        act[a, 0, 0] = d.A_bialgebra.counit[a]
    coact = xl.zeros((1, 1, nc))
    for c in range(nc):
        coact[0, 0, c] = d.C_bialgebra.unit[c]
    one = xl.identity(1)
    return DoiHopfModule(d, ModuleStructure(act, one), ComoduleStructure(coact, one), name="k")


def check_module_morphism(f: ModuleMorphism) -> AxiomReport:
    S, T = f.source, f.target
    d = S.datum
    if T.datum is not d:
        raise StructuralError("source and target live over different data")
    na, nc = d.A.dim, d.C.dim
    mat = f.matrix

    def col(m):
        return mat[:, m].copy()

    entries = [
        tuple_check("morphism-twist", (S.dim,), T.dim,
                    lambda m: xl.mat_vec(mat, S.twist[:, m].copy()),
                    lambda m: xl.mat_vec(T.twist, col(m))),
        tuple_check("morphism-A-linear", (na, S.dim), T.dim,
                    lambda a, m: xl.mat_vec(mat, S.action.act_basis(a, m)),
                    lambda a, m: T.action.act(xl.basis_vector(na, a), col(m))),
        tuple_check("morphism-C-colinear", (S.dim,), T.dim * nc,
                    lambda m: T.coaction.coact(col(m)),
                    lambda m: _push_coact(S, mat, m, T.dim, nc)),
    ]
    return AxiomReport(entries)


def _push_coact(S: DoiHopfModule, mat: np.ndarray, m: int, tdim: int, nc: int):
    out = xl.zeros(tdim * nc)
    for m2, c, w in S.coaction.coact_basis(m):
        fv = mat[:, m2]
        for t in range(tdim):
            if fv[t] != 0:
                out[t * nc + c] += w * fv[t]
    return out


def validate_morphism(f: ModuleMorphism) -> ModuleMorphism:
    """Raise (naming the property and a witness) unless f is a morphism."""
    rep = check_module_morphism(f)
    if not rep.overall:
        bad = rep.failed()[0]
        raise MorphismError(bad.axiom, bad.witnesses[0])
    return f


def tensor_morphism(d: DoiHopfDatum, f: ModuleMorphism, g: ModuleMorphism,
                    sources: Optional[tuple] = None,
                    targets: Optional[tuple] = None) -> ModuleMorphism:
    """f (x) g between the tensor modules (built or supplied)."""
    src = sources or (tensor_modules(d, f.source, g.source), )
    tgt = targets or (tensor_modules(d, f.target, g.target), )
    return ModuleMorphism(src[0], tgt[0], xl.tensor_map(f.matrix, g.matrix))


# ------------------------------------------------------------- structure maps


def _identity_morphism(M: DoiHopfModule) -> ModuleMorphism:
    return ModuleMorphism(M, M, xl.identity(M.dim))


def structure_maps(d: DoiHopfDatum, M: DoiHopfModule, N: DoiHopfModule, P: DoiHopfModule,
                   check: bool = True):
    """Associator for (M, N, P) and the unitors of M, all validated with
    exact inverses."""
    MN = tensor_modules(d, M, N, check=check)
    NP = tensor_modules(d, N, P, check=check)
    left = tensor_modules(d, MN, P, check=False)
    right = tensor_modules(d, M, NP, check=False)

    dm, dn, dp = M.dim, N.dim, P.dim
    assoc_mat = xl.zeros((dm * dn * dp, dm * dn * dp))
    inv_mat = xl.zeros((dm * dn * dp, dm * dn * dp))
    for m in range(dm):
        am = M.twist_inv[:, m]
        bm = M.twist[:, m]
        for p in range(dp):
            ap = P.twist[:, p]
            bp = P.twist_inv[:, p]
            for n in range(dn):
                col = (m * dn + n) * dp + p
                for m2 in range(dm):
                    if am[m2] != 0:
                        for p2 in range(dp):
                            if ap[p2] != 0:
                                assoc_mat[(m2 * dn + n) * dp + p2, col] += am[m2] * ap[p2]
                    if bm[m2] != 0:
                        for p2 in range(dp):
                            if bp[p2] != 0:
                                inv_mat[(m2 * dn + n) * dp + p2, col] += bm[m2] * bp[p2]

    assoc = ModuleMorphism(left, right, assoc_mat, name="associator")
    assoc.inverse = ModuleMorphism(right, left, inv_mat, name="associator_inv")

    k = unit_module(d)
    kM = tensor_modules(d, k, M, check=False)
    Mk = tensor_modules(d, M, k, check=False)
    lmat = M.twist_inv.copy()
    rmat = M.twist_inv.copy()
    lun = ModuleMorphism(kM, M, lmat, name="left_unitor")
    lun.inverse = ModuleMorphism(M, kM, M.twist.copy())
    run = ModuleMorphism(Mk, M, rmat, name="right_unitor")
    run.inverse = ModuleMorphism(M, Mk, M.twist.copy())

    if check:
        for f in (assoc, assoc.inverse, lun, lun.inverse, run, run.inverse):
            validate_morphism(f)
        for f in (assoc, lun, run):
            if not xl.array_eq(xl.mat_mul(f.matrix, f.inverse.matrix), xl.identity(f.matrix.shape[0])):
                raise MorphismError("structure-map-inverse", f.name)
            if not xl.array_eq(xl.mat_mul(f.inverse.matrix, f.matrix), xl.identity(f.matrix.shape[1])):
                raise MorphismError("structure-map-inverse", f.name)
    return assoc, lun, run


def associator_matrix(objs) -> np.ndarray:
    """Re-bracketing matrix for (X (x) Y) (x) Z -> X (x) (Y (x) Z)."""
    X, Y, Z = objs
    mats = (X.twist_inv, xl.identity(Y.dim), Z.twist)
    return xl.tensor_map(xl.tensor_map(mats[0], mats[1]), mats[2])


def check_pentagon(d: DoiHopfDatum, M, N, P, Q) -> AxiomCheck:
    """Both re-bracketing routes ((M N) P) Q -> M (N (P Q)) agree."""
    idm = {X: xl.identity(X.dim) for X in (M, N, P, Q)}
    MN = tensor_modules(d, M, N, check=False)
    NP = tensor_modules(d, N, P, check=False)
    PQ = tensor_modules(d, P, Q, check=False)
    route1 = xl.mat_mul(associator_matrix((M, N, PQ)), associator_matrix((MN, P, Q)))
    route2 = xl.compose(
        xl.tensor_map(idm[M], associator_matrix((N, P, Q))),
        associator_matrix((M, NP, Q)),
        xl.tensor_map(associator_matrix((M, N, P)), idm[Q]))
    diff = route1 - route2
    witnesses = [idx for idx, _ in xl.nonzero_items(diff)]
    return AxiomCheck("pentagon", witnesses, diff)


def check_triangle(d: DoiHopfDatum, M: DoiHopfModule, N: DoiHopfModule) -> AxiomCheck:
    """(id (x) left-unitor) after the associator equals right-unitor (x) id."""
    k = unit_module(d)
    lhs = xl.mat_mul(xl.tensor_map(xl.identity(M.dim), N.twist_inv),
                     associator_matrix((M, k, N)))
    rhs = xl.tensor_map(M.twist_inv, xl.identity(N.dim))
    diff = lhs - rhs
    witnesses = [idx for idx, _ in xl.nonzero_items(diff)]
    return AxiomCheck("triangle", witnesses, diff)


# ---------------------------------------------------------- canonical modules


def canonical_module(d: DoiHopfDatum, which: str, check: bool = True) -> DoiHopfModule:
    """The built-in modules carried by the datum itself.

    * ``"C"``: the coalgebra, acted on through the counit of A;
    * ``"A"``: the algebra, coacting through the action on the unit of C;
    * ``"AxC"``: the product space (valid over any datum).
    """
    if which in ("C", "A"):
        if check:
            _require_pass(d.monoidal_report, "monoidal datum check")
        A, C = d.A_bialgebra, d.C_bialgebra
    else:
        A, C = d.A_bialgebra or d.A, d.C_bialgebra or d.C
    na, nc, nh = d.A.dim, d.C.dim, d.H.dim

    if which == "C":
        act = xl.zeros((na, nc, nc))
        for a in range(na):
            for a0, h, w in d.A_coaction.coact_basis(a):
                e = A.counit[a0]
                if e == 0:
                    continue
                for c in range(nc):
                    vec = d.C_action.act_basis(h, c)
                    for c2, x in enumerate(vec):
                        if x != 0:
                            act[a, c, c2] += w * e * x
        coact = xl.zeros((nc, nc, nc))
        for c in range(nc):
            for j, k, w in d.C.split_basis(c):
                col = d.C.twist_inv[:, k]
                for l in range(nc):
                    if col[l] != 0:
                        coact[c, j, l] += w * col[l]
        tw = d.C.twist.copy()
        mod = DoiHopfModule(d, ModuleStructure(act, tw), ComoduleStructure(coact, tw), name="C")
    elif which == "A":
        act = xl.zeros((na, na, na))
        ainv = d.A.twist_inv
        for a in range(na):
            for a2 in range(na):
                x = ainv[a2, a]
                if x == 0:
                    continue
                for b in range(na):
                    vec = d.A.mul_basis(a2, b)
                    for k, y in enumerate(vec):
                        if y != 0:
                            act[a, b, k] += x * y
        coact = xl.zeros((na, na, nc))
        for a in range(na):
            for a0, h, w in d.A_coaction.coact_basis(a):
                vec = d.C_action.act(xl.basis_vector(nh, h), C.unit)
                for c, x in enumerate(vec):
                    if x != 0:
                        coact[a, a0, c] += w * x
        tw = d.A.twist.copy()
        mod = DoiHopfModule(d, ModuleStructure(act, tw), ComoduleStructure(coact, tw), name="A")
    elif which == "AxC":
        dim = na * nc
        act = xl.zeros((na, dim, dim))
        alpha_a, alpha_c = d.A.twist, d.C.twist
        for a in range(na):
            acol = alpha_a[:, a]
            for a2 in range(na):
                if acol[a2] == 0:
                    continue
                for b in range(na):
                    prod = d.A.mul_basis(a2, b)
                    for c in range(nc):
                        col = b * nc + c
                        for k, y in enumerate(prod):
                            if y == 0:
                                continue
                            for l in range(nc):
                                if alpha_c[l, c] != 0:
                                    act[a, col, k * nc + l] += acol[a2] * y * alpha_c[l, c]
        coact = xl.zeros((dim, dim, nc))
        ac2inv = xl.mat_mul(d.C.twist_inv, d.C.twist_inv)
        for b in range(na):
            for b0, h, w1 in d.A_coaction.coact_basis(b):
                for c in range(nc):
                    for j, k, w2 in d.C.split_basis(c):
                        vec = xl.mat_vec(ac2inv, d.C_action.act_basis(h, k))
                        row = b * nc + c
                        tgt = b0 * nc + j
                        for l, x in enumerate(vec):
                            if x != 0:
                                coact[row, tgt, l] += w1 * w2 * x
        tw = xl.tensor_map(alpha_a, alpha_c)
        mod = DoiHopfModule(d, ModuleStructure(act, tw), ComoduleStructure(coact, tw), name="AxC")
    else:
        raise StructuralError(f"unknown canonical module {which!r}")

    if check:
        _require_pass(mod.report, f"canonical module {which}")
    return mod


# --------------------------------------------------------- Yetter-Drinfeld


def yetter_drinfeld_datum(H: HomHopfAlgebra) -> DoiHopfDatum:
    """The datum whose modules are the Yetter-Drinfeld modules of H.

    The acting bialgebra is (opposite H) (x) H.  H coacts on itself
    through a double coproduct corrected by the inverse antipode, and
    acts on itself by two-sided multiplication.  The coalgebra side
    carries the opposite bialgebra structure (with the inverse antipode,
    which is its Hopf antipode).
    """
    n = H.dim
    s_inv = H.antipode_inv
    if s_inv is None:
        raise PreconditionError("antipode is not invertible")
    Hop = opposite(H)
    H2 = tensor_bialgebra(Hop, H.as_bialgebra())
    alpha = H.twist
    alpha_inv = H.twist_inv
    alpha_inv2 = xl.mat_mul(alpha_inv, alpha_inv)
    s_inv_a2 = xl.mat_mul(s_inv, alpha_inv2)

    coact = xl.zeros((n, n, n * n))
    for i in range(n):
        for i1, i2, w in H.split_basis(i):
            leg2 = alpha_inv[:, i2]
            for i11, i12, w2 in H.split_basis(i1):
                a0 = alpha_inv[:, i12]
                leg1 = s_inv_a2[:, i11]
                coef = w * w2
                for p, x in enumerate(a0):
                    if x == 0:
                        continue
                    for u, y in enumerate(leg1):
                        if y == 0:
                            continue
                        for v, z in enumerate(leg2):
                            if z != 0:
                                coact[i, p, u * n + v] += coef * x * y * z
    A_coaction = ComoduleStructure(coact, alpha.copy())

    act = xl.zeros((n * n, n, n))
    for u in range(n):
        au = alpha[:, u].copy()
        for v in range(n):
            ev = xl.basis_vector(n, v)
            for l in range(n):
                inner = H.mul(ev, alpha_inv[:, l].copy())
                vec = H.mul(inner, au)
                for k, x in enumerate(vec):
                    if x != 0:
                        act[u * n + v, l, k] = x
    C_action = ModuleStructure(act, alpha.copy())

    C_hopf = HomHopfAlgebra(Hop.algebra, H.coalgebra, s_inv,
                            name=f"{H.name}^op" if H.name else "")
    return DoiHopfDatum(
        H2, H.algebra, H.coalgebra, A_coaction, C_action,
        A_bialgebra=H, C_bialgebra=C_hopf,
        name=f"YD({H.name})" if H.name else "YD")


def yd_compatibility_check(H: HomHopfAlgebra, action: ModuleStructure,
                           coaction: ComoduleStructure) -> AxiomCheck:
    """The direct two-sided compatibility of a candidate YD pair.

    The coaction of an acted vector must equal the sandwich of the
    coacted vector between the split action legs, with the inverse
    antipode closing the loop.
    """
    n, nm = H.dim, action.dim
    s_inv = H.antipode_inv
    alpha_inv = H.twist_inv
    alpha_inv2 = xl.mat_mul(alpha_inv, alpha_inv)

    def lhs(h, m):
        return coaction.coact(action.act_basis(h, m))

    def rhs(h, m):
        out = xl.zeros(nm * n)
        for h1, h2, w1 in H.split_basis(h):
            sh1 = s_inv[:, h1].copy()
            for h21, h22, w2 in H.split_basis(h2):
                for m0, m1, w3 in coaction.coact_basis(m):
                    left = action.act(alpha_inv[:, h21].copy(), xl.basis_vector(nm, m0))
                    inner = H.mul(alpha_inv2[:, h22].copy(), alpha_inv[:, m1].copy())
                    right = H.mul(inner, sh1)
                    out += (w1 * w2 * w3) * xl.tensor_vec(left, right)
        return out

    return tuple_check("yetter-drinfeld-compatibility", (n, nm), nm * n, lhs, rhs)
