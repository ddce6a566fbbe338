"""Twisted algebraic structures and their exhaustive axiom checkers.

A structure is a bundle of structure-constant tensors over a chosen basis:

* ``mult[i, j, k]``    -- the ``e_k`` coefficient of ``e_i . e_j``;
* ``comult[i, j, k]``  -- the ``e_j (x) e_k`` coefficient of ``split(e_i)``;
* ``unit`` / ``counit`` -- coordinate (co)vectors;
* ``twist``            -- the invertible structure endomorphism ``alpha``.

Every law is checked on every basis tuple; a report entry records the
axiom identifier, the violating input tuples and the exact residual
tensor (inputs first, then the flattened output).  All arrays are frozen
after construction, so structures are safe to share.
"""

from __future__ import annotations

from functools import cached_property
from typing import Callable, Optional, Sequence

import numpy as np

from homcat import exactlin as xl
from homcat.errors import PreconditionError, StructuralError

__all__ = [
    "AxiomCheck",
    "AxiomReport",
    "HomAlgebra",
    "HomCoalgebra",
    "HomBialgebra",
    "HomHopfAlgebra",
    "check_structure",
    "twist_by_endomorphism",
    "opposite",
    "tensor_bialgebra",
    "dual",
]


# --------------------------------------------------------------------- report


class AxiomCheck:
    """Outcome of one axiom: identifier, witnesses, exact residual."""

    def __init__(self, axiom: str, witnesses, residual: np.ndarray):
        self.axiom = axiom
        self.witnesses = tuple(witnesses)
        residual.setflags(write=False)
        self.residual = residual

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __repr__(self):
        state = "pass" if self.passed else f"FAIL at {list(self.witnesses[:3])}"
        return f"<{self.axiom}: {state}>"


class AxiomReport:
    def __init__(self, entries: Sequence[AxiomCheck] = (), warnings: Sequence[str] = ()):
        self.entries = list(entries)
        self.warnings = list(warnings)

    @property
    def overall(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, axiom: str) -> AxiomCheck:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def failed(self):
        return [e for e in self.entries if not e.passed]

    def extend(self, other: "AxiomReport") -> "AxiomReport":
        self.entries.extend(other.entries)
        self.warnings.extend(other.warnings)
        return self

    def __repr__(self):
        bad = self.failed()
        if not bad:
            return f"<AxiomReport: all {len(self.entries)} pass>"
        return f"<AxiomReport: {len(bad)}/{len(self.entries)} fail: {[e.axiom for e in bad]}>"

    def __str__(self):
        lines = []
        for e in self.entries:
            if e.passed:
                lines.append(f"PASS {e.axiom}")
            else:
                lines.append(f"FAIL {e.axiom}  witnesses={list(e.witnesses[:4])}")
        for w in self.warnings:
            lines.append(f"WARN {w}")
        return "\n".join(lines)


def tuple_check(axiom: str, input_dims: Sequence[int], out_dim: int,
                lhs: Callable, rhs: Callable) -> AxiomCheck:
    """Evaluate two sides on every basis tuple and collect the residual."""
    input_dims = tuple(input_dims)
    residual = xl.zeros(input_dims + (out_dim,))
    witnesses = []
    for idx in np.ndindex(*input_dims) if input_dims else [()]:
        diff = lhs(*idx) - rhs(*idx)
        if not xl.is_zero(diff):
            witnesses.append(idx)
            residual[idx] = diff
    return AxiomCheck(axiom, witnesses, residual)


def _scalar(x) -> np.ndarray:
    v = xl.zeros(1)
    v[0] = x
    return v


# ----------------------------------------------------------------- structures


def _freeze(*arrays):
    for a in arrays:
        a.setflags(write=False)


class HomAlgebra:
    """Unital algebra with associativity twisted by an endomorphism."""

    def __init__(self, mult: np.ndarray, unit: np.ndarray, twist: np.ndarray, name: str = ""):
        n = mult.shape[0]
        if mult.shape != (n, n, n):
            raise StructuralError(f"multiplication tensor has shape {mult.shape}")
        if unit.shape != (n,) or twist.shape != (n, n):
            raise StructuralError("unit/twist dimensions do not match the multiplication")
        if n < 1:
            raise StructuralError("dimension must be at least 1")
        inv = xl.invert(twist)
        if inv is None:
            raise StructuralError("twist is singular")
        self.dim = n
        self.mult = mult
        self.unit = unit
        self.twist = twist
        self.twist_inv = inv
        self.name = name
        _freeze(mult, unit, twist, inv)

    @cached_property
    def _mult_terms(self):
        terms = {}
        for (i, j, k), c in xl.nonzero_items(self.mult):
            terms.setdefault((i, j), []).append((k, c))
        return terms

    def mul_basis(self, i: int, j: int) -> np.ndarray:
        out = xl.zeros(self.dim)
        for k, c in self._mult_terms.get((i, j), ()):
            out[k] = c
        return out

    def mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = xl.zeros(self.dim)
        for i in range(self.dim):
            x = u[i]
            if x == 0:
                continue
            for j in range(self.dim):
                y = v[j]
                if y == 0:
                    continue
                for k, c in self._mult_terms.get((i, j), ()):
                    out[k] += x * y * c
        return out

    def mul_pair(self, u2: np.ndarray, v2: np.ndarray) -> np.ndarray:
        """Componentwise product on the tensor square, lex-flattened."""
        n = self.dim
        out = xl.zeros(n * n)
        for p, x in enumerate(u2):
            if x == 0:
                continue
            a, b = divmod(p, n)
            for q, y in enumerate(v2):
                if y == 0:
                    continue
                c, d = divmod(q, n)
                xy = x * y
                for k1, c1 in self._mult_terms.get((a, c), ()):
                    for k2, c2 in self._mult_terms.get((b, d), ()):
                        out[k1 * n + k2] += xy * c1 * c2
        return out

    def __repr__(self):
        return f"<HomAlgebra {self.name or ''} dim={self.dim}>"


class HomCoalgebra:
    """Counital coalgebra with coassociativity twisted by an endomorphism."""

    def __init__(self, comult: np.ndarray, counit: np.ndarray, twist: np.ndarray, name: str = ""):
        n = comult.shape[0]
        if comult.shape != (n, n, n):
            raise StructuralError(f"comultiplication tensor has shape {comult.shape}")
        if counit.shape != (n,) or twist.shape != (n, n):
            raise StructuralError("counit/twist dimensions do not match the comultiplication")
        if n < 1:
            raise StructuralError("dimension must be at least 1")
        inv = xl.invert(twist)
        if inv is None:
            raise StructuralError("twist is singular")
        self.dim = n
        self.comult = comult
        self.counit = counit
        self.twist = twist
        self.twist_inv = inv
        self.name = name
        _freeze(comult, counit, twist, inv)

    @cached_property
    def _comult_terms(self):
        terms = {i: [] for i in range(self.dim)}
        for (i, j, k), c in xl.nonzero_items(self.comult):
            terms[i].append((j, k, c))
        return terms

    def split_basis(self, i: int):
        """Terms (j, k, coeff) of the coproduct of a basis vector."""
        return self._comult_terms[i]

    def split(self, v: np.ndarray) -> np.ndarray:
        n = self.dim
        out = xl.zeros(n * n)
        for i in range(n):
            x = v[i]
            if x == 0:
                continue
            for j, k, c in self._comult_terms[i]:
                out[j * n + k] += x * c
        return out

    def counit_of(self, v: np.ndarray):
        out = 0
        for i in range(self.dim):
            if v[i] != 0 and self.counit[i] != 0:
                out += v[i] * self.counit[i]
        return out

    def __repr__(self):
        return f"<HomCoalgebra {self.name or ''} dim={self.dim}>"


class HomBialgebra:
    """Algebra and coalgebra on one space, sharing one twist."""

    def __init__(self, algebra: HomAlgebra, coalgebra: HomCoalgebra, name: str = ""):
        if algebra.dim != coalgebra.dim:
            raise StructuralError("algebra and coalgebra dimensions differ")
        if not xl.array_eq(algebra.twist, coalgebra.twist):
            raise StructuralError("algebra and coalgebra twists differ")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.name = name or algebra.name or coalgebra.name

    @classmethod
    def from_tensors(cls, mult, unit, comult, counit, twist, name: str = ""):
        return cls(HomAlgebra(mult, unit, twist, name), HomCoalgebra(comult, counit, twist, name), name)

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def comult(self):
        return self.coalgebra.comult

    @property
    def counit(self):
        return self.coalgebra.counit

    @property
    def twist(self):
        return self.algebra.twist

    @property
    def twist_inv(self):
        return self.algebra.twist_inv

    def mul(self, u, v):
        return self.algebra.mul(u, v)

    def mul_basis(self, i, j):
        return self.algebra.mul_basis(i, j)

    def mul_pair(self, u2, v2):
        return self.algebra.mul_pair(u2, v2)

    def split(self, v):
        return self.coalgebra.split(v)

    def split_basis(self, i):
        return self.coalgebra.split_basis(i)

    def counit_of(self, v):
        return self.coalgebra.counit_of(v)

    def as_bialgebra(self) -> "HomBialgebra":
        return HomBialgebra(self.algebra, self.coalgebra, self.name)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name or ''} dim={self.dim}>"


class HomHopfAlgebra(HomBialgebra):
    """Bialgebra with an antipode commuting with the twist."""

    def __init__(self, algebra: HomAlgebra, coalgebra: HomCoalgebra, antipode: np.ndarray, name: str = ""):
        super().__init__(algebra, coalgebra, name)
        if antipode.shape != (self.dim, self.dim):
            raise StructuralError("antipode dimensions do not match")
        self.antipode = antipode
        _freeze(antipode)

    @classmethod
    def from_tensors(cls, mult, unit, comult, counit, twist, antipode, name: str = ""):
        return cls(HomAlgebra(mult, unit, twist, name), HomCoalgebra(comult, counit, twist, name), antipode, name)

    @cached_property
    def antipode_inv(self) -> Optional[np.ndarray]:
        return xl.invert(self.antipode)


# ------------------------------------------------------------------- checkers


def _algebra_checks(a: HomAlgebra) -> list[AxiomCheck]:
    n = a.dim
    alpha = a.twist

    def tw(i):
        return alpha[:, i].copy()

    checks = [
        tuple_check("twist-multiplicative", (n, n), n,
                    lambda i, j: xl.mat_vec(alpha, a.mul_basis(i, j)),
                    lambda i, j: a.mul(tw(i), tw(j))),
        tuple_check("twist-unit", (), n,
                    lambda: xl.mat_vec(alpha, a.unit),
                    lambda: a.unit.copy()),
        tuple_check("unit-left", (n,), n,
                    lambda i: a.mul(a.unit, xl.basis_vector(n, i)),
                    lambda i: tw(i)),
        tuple_check("unit-right", (n,), n,
                    lambda i: a.mul(xl.basis_vector(n, i), a.unit),
                    lambda i: tw(i)),
        tuple_check("hom-associativity", (n, n, n), n,
                    lambda i, j, k: a.mul(tw(i), a.mul_basis(j, k)),
                    lambda i, j, k: a.mul(a.mul_basis(i, j), tw(k))),
    ]
    return checks


def _coalgebra_checks(c: HomCoalgebra) -> list[AxiomCheck]:
    n = c.dim
    alpha = c.twist

    def tw(i):
        return alpha[:, i].copy()

    def split_twisted(i):
        return c.split(tw(i))

    def twisted_split(i):
        out = xl.zeros(n * n)
        for j, k, w in c.split_basis(i):
            out += w * xl.tensor_vec(tw(j), tw(k))
        return out

    def counit_left(i):
        out = xl.zeros(n)
        for j, k, w in c.split_basis(i):
            e = c.counit[j]
            if e != 0:
                out[k] += w * e
        return out

    def counit_right(i):
        out = xl.zeros(n)
        for j, k, w in c.split_basis(i):
            e = c.counit[k]
            if e != 0:
                out[j] += w * e
        return out

    def coassoc_lhs(i):
        out = xl.zeros(n ** 3)
        for j, k, w in c.split_basis(i):
            out += w * xl.tensor_vec(c.split(xl.basis_vector(n, j)), tw(k))
        return out

    def coassoc_rhs(i):
        out = xl.zeros(n ** 3)
        for j, k, w in c.split_basis(i):
            out += w * xl.tensor_vec(tw(j), c.split(xl.basis_vector(n, k)))
        return out

    checks = [
        tuple_check("twist-comultiplicative", (n,), n * n, split_twisted, twisted_split),
        tuple_check("twist-counit", (n,), 1,
                    lambda i: _scalar(c.counit_of(tw(i))),
                    lambda i: _scalar(c.counit[i])),
        tuple_check("counit-left", (n,), n, counit_left, tw),
        tuple_check("counit-right", (n,), n, counit_right, tw),
        tuple_check("hom-coassociativity", (n,), n ** 3, coassoc_lhs, coassoc_rhs),
    ]
    return checks


def _bialgebra_checks(b: HomBialgebra) -> list[AxiomCheck]:
    n = b.dim
    e = xl.basis_vector

    checks = [
        tuple_check("comult-multiplicative", (n, n), n * n,
                    lambda i, j: b.split(b.mul_basis(i, j)),
                    lambda i, j: b.algebra.mul_pair(b.split(e(n, i)), b.split(e(n, j)))),
        tuple_check("comult-unit", (), n * n,
                    lambda: b.split(b.unit),
                    lambda: xl.tensor_vec(b.unit, b.unit)),
        tuple_check("counit-multiplicative", (n, n), 1,
                    lambda i, j: _scalar(b.counit_of(b.mul_basis(i, j))),
                    lambda i, j: _scalar(b.counit[i] * b.counit[j])),
        tuple_check("counit-unit", (), 1,
                    lambda: _scalar(b.counit_of(b.unit)),
                    lambda: _scalar(xl.frac(1))),
    ]
    return checks


def _hopf_checks(h: HomHopfAlgebra) -> list[AxiomCheck]:
    n = h.dim
    s = h.antipode
    e = xl.basis_vector

    def sv(i):
        return s[:, i].copy()

    def antipode_left(i):
        out = xl.zeros(n)
        for j, k, w in h.split_basis(i):
            out += w * h.mul(sv(j), e(n, k))
        return out

    def antipode_right(i):
        out = xl.zeros(n)
        for j, k, w in h.split_basis(i):
            out += w * h.mul(e(n, j), sv(k))
        return out

    def eps_unit(i):
        return h.counit[i] * h.unit

    def anti_comult_lhs(i):
        return h.split(sv(i))

    def anti_comult_rhs(i):
        out = xl.zeros(n * n)
        for j, k, w in h.split_basis(i):
            out += w * xl.tensor_vec(sv(k), sv(j))
        return out

    checks = [
        tuple_check("antipode-twist", (n,), n,
                    lambda i: xl.mat_vec(s, h.twist[:, i].copy()),
                    lambda i: xl.mat_vec(h.twist, sv(i))),
        tuple_check("antipode-left", (n,), n, antipode_left, eps_unit),
        tuple_check("antipode-right", (n,), n, antipode_right, eps_unit),
        # consequences of the axioms; checked, not assumed
        tuple_check("antipode-anti-multiplicative", (n, n), n,
                    lambda i, j: xl.mat_vec(s, h.mul_basis(i, j)),
                    lambda i, j: h.mul(sv(j), sv(i))),
        tuple_check("antipode-anti-comultiplicative", (n,), n * n,
                    anti_comult_lhs, anti_comult_rhs),
        tuple_check("antipode-counit", (n,), 1,
                    lambda i: _scalar(h.counit_of(sv(i))),
                    lambda i: _scalar(h.counit[i])),
    ]
    return checks


def check_structure(s) -> AxiomReport:
    """Run every axiom of the given structure; exact, all basis tuples."""
    if isinstance(s, HomHopfAlgebra):
        entries = _algebra_checks(s.algebra) + _coalgebra_checks(s.coalgebra) \
            + _bialgebra_checks(s) + _hopf_checks(s)
    elif isinstance(s, HomBialgebra):
        entries = _algebra_checks(s.algebra) + _coalgebra_checks(s.coalgebra) \
            + _bialgebra_checks(s)
    elif isinstance(s, HomAlgebra):
        entries = _algebra_checks(s)
    elif isinstance(s, HomCoalgebra):
        entries = _coalgebra_checks(s)
    else:
        raise StructuralError(f"cannot check a {type(s).__name__}")
    return AxiomReport(entries)


# --------------------------------------------------------------- constructors


def _is_identity(m: np.ndarray) -> bool:
    return xl.array_eq(m, xl.identity(m.shape[0]))


def twist_by_endomorphism(classical: HomHopfAlgebra, alpha: np.ndarray) -> HomHopfAlgebra:
    """Deform a classical structure along a bialgebra endomorphism.

    The product becomes ``alpha . mult``, the coproduct ``comult . alpha``;
    unit, counit and antipode are kept and ``alpha`` becomes the twist.
    """
    n = classical.dim
    if not _is_identity(classical.twist):
        raise PreconditionError("input must be classical (identity twist)")
    if alpha.shape != (n, n):
        raise StructuralError("endomorphism dimensions do not match")
    if xl.invert(alpha) is None:
        raise PreconditionError("endomorphism is singular")
    e = xl.basis_vector

    def col(i):
        return alpha[:, i].copy()

    morphism_checks = AxiomReport([
        tuple_check("endomorphism-multiplicative", (n, n), n,
                    lambda i, j: xl.mat_vec(alpha, classical.mul_basis(i, j)),
                    lambda i, j: classical.mul(col(i), col(j))),
        tuple_check("endomorphism-unit", (), n,
                    lambda: xl.mat_vec(alpha, classical.unit), lambda: classical.unit.copy()),
        tuple_check("endomorphism-comultiplicative", (n,), n * n,
                    lambda i: classical.split(col(i)),
                    lambda i: xl.mat_vec(xl.tensor_map(alpha, alpha), classical.split(e(n, i)))),
        tuple_check("endomorphism-counit", (n,), 1,
                    lambda i: _scalar(classical.counit_of(col(i))),
                    lambda i: _scalar(classical.counit[i])),
    ])
    if not morphism_checks.overall:
        bad = morphism_checks.failed()[0]
        raise PreconditionError(
            f"map is not a bialgebra endomorphism: {bad.axiom} fails at {bad.witnesses[0]}",
            morphism_checks)

    mult = xl.zeros((n, n, n))
    for (i, j, k), c in xl.nonzero_items(classical.mult):
        for k2 in range(n):
            if alpha[k2, k] != 0:
                mult[i, j, k2] += c * alpha[k2, k]
    comult = xl.zeros((n, n, n))
    for i in range(n):
        for i2 in range(n):
            a = alpha[i2, i]
            if a == 0:
                continue
            for j, k, c in classical.split_basis(i2):
                comult[i, j, k] += a * c
    return HomHopfAlgebra.from_tensors(
        mult, classical.unit.copy(), comult, classical.counit.copy(),
        alpha.copy(), classical.antipode.copy(),
        name=f"{classical.name}_twisted" if classical.name else "twisted")


def opposite(b: HomBialgebra) -> HomBialgebra:
    """Reverse the multiplication; the coalgebra half is untouched."""
    n = b.dim
    mult_op = np.swapaxes(b.mult, 0, 1).copy()
    alg = HomAlgebra(mult_op, b.unit.copy(), b.twist.copy(), name=f"{b.name}^op" if b.name else "op")
    return HomBialgebra(alg, b.coalgebra, name=alg.name)


def tensor_bialgebra(b1: HomBialgebra, b2: HomBialgebra) -> HomBialgebra:
    """Componentwise product and coproduct with the middle-swap convention."""
    n1, n2 = b1.dim, b2.dim
    n = n1 * n2
    mult = xl.zeros((n, n, n))
    for (i1, j1, k1), c1 in xl.nonzero_items(b1.mult):
        for (i2, j2, k2), c2 in xl.nonzero_items(b2.mult):
            mult[i1 * n2 + i2, j1 * n2 + j2, k1 * n2 + k2] = c1 * c2
    comult = xl.zeros((n, n, n))
    for (i1, j1, k1), c1 in xl.nonzero_items(b1.comult):
        for (i2, j2, k2), c2 in xl.nonzero_items(b2.comult):
            comult[i1 * n2 + i2, j1 * n2 + j2, k1 * n2 + k2] = c1 * c2
    unit = xl.tensor_vec(b1.unit, b2.unit)
    counit = xl.tensor_vec(b1.counit, b2.counit)
    twist = xl.tensor_map(b1.twist, b2.twist)
    name = f"{b1.name}(x){b2.name}" if b1.name and b2.name else ""
    return HomBialgebra.from_tensors(mult, unit, comult, counit, twist, name=name)


def _dual_coalgebra_to_algebra(c: HomCoalgebra, name: str) -> HomAlgebra:
    # Convolution product, corrected by the square of the inverse twist so
    # that the counit becomes a genuine unit:  <f*g, x> = <f (x) g, split(a^-2 x)>.
    # The plain convolution satisfies the unit law only for identity twist.
    n = c.dim
    a2i = xl.mat_mul(c.twist_inv, c.twist_inv)
    mult = xl.zeros((n, n, n))
    for (kp, i, j), w in xl.nonzero_items(c.comult):
        for k in range(n):
            s = a2i[kp, k]
            if s != 0:
                mult[i, j, k] += w * s
    twist = c.twist_inv.T.copy()
    return HomAlgebra(mult, c.counit.copy(), twist, name=name)


def _dual_algebra_to_coalgebra(a: HomAlgebra, name: str) -> HomCoalgebra:
    n = a.dim
    a2i = xl.mat_mul(a.twist_inv, a.twist_inv)
    comult = xl.zeros((n, n, n))
    for (ip, jp, k), w in xl.nonzero_items(a.mult):
        for i in range(n):
            x = a2i[ip, i]
            if x == 0:
                continue
            for j in range(n):
                y = a2i[jp, j]
                if y != 0:
                    comult[k, i, j] += w * x * y
    twist = a.twist_inv.T.copy()
    return HomCoalgebra(comult, a.unit.copy(), twist, name=name)


def dual(s):
    """Finite dual: coalgebras become algebras and conversely.

    Bialgebras and antipodes dualize transposed; applying ``dual`` twice
    returns the original structure constants entrywise.
    """
    if isinstance(s, HomHopfAlgebra):
        name = f"{s.name}*" if s.name else "dual"
        return HomHopfAlgebra(
            _dual_coalgebra_to_algebra(s.coalgebra, name),
            _dual_algebra_to_coalgebra(s.algebra, name),
            s.antipode.T.copy(), name=name)
    if isinstance(s, HomBialgebra):
        name = f"{s.name}*" if s.name else "dual"
        return HomBialgebra(
            _dual_coalgebra_to_algebra(s.coalgebra, name),
            _dual_algebra_to_coalgebra(s.algebra, name), name=name)
    if isinstance(s, HomCoalgebra):
        return _dual_coalgebra_to_algebra(s, name=f"{s.name}*" if s.name else "dual")
    if isinstance(s, HomAlgebra):
        return _dual_algebra_to_coalgebra(s, name=f"{s.name}*" if s.name else "dual")
    raise StructuralError(f"cannot dualize a {type(s).__name__}")
