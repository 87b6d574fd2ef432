"""Twisted U(1)-valued 2-cocycles on finite groups and their cohomology.

A twisted cocycle stores a table of :class:`Phase` values indexed by group
element pairs.  Elements g with twist p(g) = 1 act on coefficients by
complex conjugation, which shows up in the cocycle identity and in the
coboundary that defines cohomological equivalence.

Equivalence is decided exactly: phases are snapped onto a root-of-unity
lattice Z_M and the coboundary condition becomes a system of linear
congruences mod M, solved by integer diagonalization.  A negative verdict
is therefore certified only relative to the chosen lattice modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .errors import (
    CocycleIdentityFails,
    MismatchedGroup,
    NotNormalized,
    NotProjectiveRep,
    NotRootOfUnity,
)
from .group import FiniteGroup, Z2Hom, trivial_hom
from .phase import Phase
from .rep import ProjectiveRep, adjoint, compose
from .smith import solve_congruence


@dataclass(frozen=True, eq=False)
class TwistedCocycle:
    """A table v: G x G -> U(1) satisfying the p-twisted cocycle identity."""

    group: FiniteGroup
    twist: Z2Hom
    table: np.ndarray  # (n, n) object array of Phase

    @property
    def n(self) -> int:
        return self.group.n

    def __call__(self, g: int, h: int) -> Phase:
        return self.table[g, h]

    @property
    def is_exact(self) -> bool:
        return all(p.is_exact for p in self.table.flat)

    def root_orders(self) -> list[int]:
        return [p.N for p in self.table.flat if p.is_exact]

    def close_to(self, other: "TwistedCocycle", tol: float = 1e-9) -> bool:
        return all(
            self.table[g, h].close_to(other.table[g, h], tol)
            for g in self.group.elements()
            for h in self.group.elements()
        )


def _phase_table(group: FiniteGroup, values, tol: float) -> np.ndarray:
    raw = np.asarray(values, dtype=object)
    if raw.shape != (group.n, group.n):
        raise NotNormalized(f"expected a {group.n} x {group.n} table")
    table = np.empty((group.n, group.n), dtype=object)
    for g in group.elements():
        for h in group.elements():
            table[g, h] = Phase.coerce(raw[g, h], tol)
    return table


def cocycle_defect(
    u: TwistedCocycle, f: int, g: int, h: int
) -> Phase:
    """conj^p(f)(v(g,h)) v(f,gh) / (v(f,g) v(fg,h)); equals 1 for a cocycle."""
    grp, p = u.group, u.twist
    num = u(g, h).conj_pow(p(f)) * u(f, grp.mul(g, h))
    den = u(f, g) * u(grp.mul(f, g), h)
    return num * den.inverse()


def validate_cocycle(
    group: FiniteGroup, twist: Z2Hom, values, tol: float = 1e-9
) -> TwistedCocycle:
    """Check normalization and the twisted 2-cocycle identity."""
    if not twist.group.same_as(group):
        raise MismatchedGroup("twist lives on a different group")
    table = _phase_table(group, values, tol)
    e = group.identity
    for g in group.elements():
        if not table[e, g].is_one(tol) or not table[g, e].is_one(tol):
            raise NotNormalized(f"v(e,{g}) or v({g},e) differs from 1")
    u = TwistedCocycle(group, twist, table)
    for f in group.elements():
        for g in group.elements():
            for h in group.elements():
                if not cocycle_defect(u, f, g, h).is_one(tol):
                    raise CocycleIdentityFails(
                        f"twisted cocycle identity fails at (f,g,h)=({f},{g},{h})"
                    )
    return u


def trivial_cocycle(group: FiniteGroup, twist: Z2Hom | None = None) -> TwistedCocycle:
    twist = twist if twist is not None else trivial_hom(group)
    table = np.empty((group.n, group.n), dtype=object)
    table[:] = Phase.one()
    return TwistedCocycle(group, twist, table)


def epsilon(q1: Z2Hom, q2: Z2Hom, twist: Z2Hom | None = None) -> TwistedCocycle:
    """The sign cocycle (g,h) -> (-1)^(q1(g) q2(h)); a cocycle for any twist."""
    if not q1.group.same_as(q2.group):
        raise MismatchedGroup("homomorphisms live on different groups")
    group = q1.group
    twist = twist if twist is not None else trivial_hom(group)
    table = np.empty((group.n, group.n), dtype=object)
    for g in group.elements():
        for h in group.elements():
            table[g, h] = Phase.exact(q1(g) * q2(h), 2)
    return TwistedCocycle(group, twist, table)


def epsilon_p(
    k1: int, q1: Z2Hom, k2: int, q2: Z2Hom, p: Z2Hom
) -> TwistedCocycle:
    """Correction cocycle of the stacking group law.

    (g,h) -> (-1)^( q1(g) q2(h) + (k1-k2)(k1 q2(g) + k2 q1(g)) p(h) ), where
    only the parity of k1 - k2 matters.
    """
    if not (q1.group.same_as(q2.group) and q1.group.same_as(p.group)):
        raise MismatchedGroup("homomorphisms live on different groups")
    group = q1.group
    k1, k2 = int(k1) % 2, int(k2) % 2
    dk = abs(k1 - k2)
    table = np.empty((group.n, group.n), dtype=object)
    for g in group.elements():
        for h in group.elements():
            expo = q1(g) * q2(h) + dk * (k1 * q2(g) + k2 * q1(g)) * p(h)
            table[g, h] = Phase.exact(expo, 2)
    return TwistedCocycle(group, p, table)


def cocycle_product(u1: TwistedCocycle, u2: TwistedCocycle) -> TwistedCocycle:
    if not u1.group.same_as(u2.group) or not u1.twist.same_as(u2.twist):
        raise MismatchedGroup("cocycles must share group and twist")
    table = np.empty((u1.n, u1.n), dtype=object)
    for g in u1.group.elements():
        for h in u1.group.elements():
            table[g, h] = u1(g, h) * u2(g, h)
    return validate_cocycle(u1.group, u1.twist, table)


def coboundary(b, group: FiniteGroup, twist: Z2Hom) -> TwistedCocycle:
    """The twisted coboundary (g,h) -> b(g) conj^p(g)(b(h)) b(gh)^-1."""
    bp = [Phase.coerce(x) for x in b]
    if not bp[group.identity].is_one():
        raise NotNormalized("coboundary 1-cochain must have b(e) = 1")
    table = np.empty((group.n, group.n), dtype=object)
    for g in group.elements():
        for h in group.elements():
            table[g, h] = (
                bp[g] * bp[h].conj_pow(twist(g)) * bp[group.mul(g, h)].inverse()
            )
    return validate_cocycle(group, twist, table)


@dataclass(frozen=True, eq=False)
class CocycleWitness:
    """A 1-cochain b with b(e) = 1 whose twisted coboundary maps u1 to u2."""

    group: FiniteGroup
    twist: Z2Hom
    modulus: int
    b: tuple[Phase, ...]

    def verify(
        self, u1: TwistedCocycle, u2: TwistedCocycle, tol: float = 1e-9
    ) -> bool:
        shifted = cocycle_product(u1, coboundary(self.b, self.group, self.twist))
        return shifted.close_to(u2, tol)


def default_modulus(*cocycles: TwistedCocycle) -> int:
    """lcm of the exact root orders present and 2|G|."""
    orders = [2 * cocycles[0].n]
    for u in cocycles:
        orders.extend(u.root_orders())
    return lcm(*orders)


def _exponent_table(u: TwistedCocycle, modulus: int, snap_tol: float) -> np.ndarray:
    exps = np.zeros((u.n, u.n), dtype=object)
    for g in u.group.elements():
        for h in u.group.elements():
            snapped = u(g, h).try_snap(modulus, snap_tol)
            if snapped is None:
                raise NotRootOfUnity(
                    f"v({g},{h}) = {u(g, h).value:.12g} does not lie on the "
                    f"{modulus}-th root lattice within {snap_tol:.1e}"
                )
            exps[g, h] = snapped.k * (modulus // snapped.N)
    return exps


def cohomologous(
    u1: TwistedCocycle,
    u2: TwistedCocycle,
    modulus: int | None = None,
    snap_tol: float = 1e-8,
) -> tuple[bool, CocycleWitness | None]:
    """Decide u2 = u1 * (twisted coboundary of b) with b on the Z_M lattice.

    In exponent space the condition reads, for every pair (g, h),

        x_g + (-1)^p(g) x_h - x_gh  =  a2(g,h) - a1(g,h)   (mod M),

    a linear congruence system solved exactly over the integers.  A False
    verdict certifies only that no witness exists on the chosen lattice.
    """
    if not u1.group.same_as(u2.group) or not u1.twist.same_as(u2.twist):
        raise MismatchedGroup("cocycles must share group and twist")
    group, p = u1.group, u1.twist
    m = modulus if modulus is not None else default_modulus(u1, u2)
    a1 = _exponent_table(u1, m, snap_tol)
    a2 = _exponent_table(u2, m, snap_tol)

    n = group.n
    rows, rhs = [], []
    for g in group.elements():
        for h in group.elements():
            row = [0] * n
            row[g] += 1
            row[h] += -1 if p(g) else 1
            row[group.mul(g, h)] -= 1
            rows.append(row)
            rhs.append(int((a2[g, h] - a1[g, h]) % m))
    x = solve_congruence(rows, rhs, m)
    if x is None:
        return False, None
    # the (e, h) equations read x_e = 0, so b(e) = 1 holds automatically
    assert x[group.identity] == 0
    b = tuple(Phase.exact(int(k), m) for k in x)
    witness = CocycleWitness(group, p, m, b)
    if not witness.verify(u1, u2, tol=max(1e-9, snap_tol)):
        raise AssertionError("congruence solver produced an invalid witness")
    return True, witness


def snap_cocycle(u: TwistedCocycle, modulus: int, tol: float = 1e-6) -> TwistedCocycle:
    """Replace floating phases by exact points of the modulus-th root lattice."""
    table = np.empty((u.n, u.n), dtype=object)
    for g in u.group.elements():
        for h in u.group.elements():
            table[g, h] = u(g, h).snap(modulus, tol)
    return validate_cocycle(u.group, u.twist, table)


def cocycle_of_rep(rep: ProjectiveRep, tol: float = 1e-8) -> TwistedCocycle:
    """Extract v(g,h) from V_g V_h = v(g,h) V_gh.

    v(g,h) is read off as trace(V_g V_h (V_gh)^-1)/dim; the product must be
    scalar within tol or the input is not a projective representation.
    """
    group = rep.group
    dim = rep.dim
    table = np.empty((group.n, group.n), dtype=object)
    for g in group.elements():
        for h in group.elements():
            prod = compose(rep.op(g), rep.op(h))
            back = compose(prod, adjoint(rep.op(group.mul(g, h))))
            mat = back[0]
            lam = np.trace(mat) / dim
            if np.linalg.norm(mat - lam * np.eye(dim)) > tol * max(1.0, abs(lam)) * dim:
                raise NotProjectiveRep(
                    f"V_{g} V_{h} (V_{g}{h})^-1 deviates from a scalar"
                )
            table[g, h] = Phase.from_complex(lam, tol=max(tol, 1e-9))
    return validate_cocycle(group, rep.twist, table, tol=max(1e-9, tol))
