"""Projective unitary/anti-unitary representations.

An operator is stored as a pair ``(matrix, flag)``: the linear part in the
standard basis, and flag 1 when the operator carries a complex conjugation
on the right (so the operator is M composed with entrywise conjugation).
All composition rules below follow from K M = conj(M) K.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSystem, NotUnitary
from .group import FiniteGroup, Z2Hom

Pair = tuple[np.ndarray, int]


def pair(matrix, flag: int = 0) -> Pair:
    return np.asarray(matrix, dtype=complex), int(flag) % 2


def compose(a: Pair, b: Pair) -> Pair:
    """(Ma K^fa)(Mb K^fb) = Ma conj^fa(Mb) K^(fa+fb)."""
    ma, fa = a
    mb, fb = b
    mb = np.conj(mb) if fa else mb
    return ma @ mb, (fa + fb) % 2


def adjoint(a: Pair) -> Pair:
    """Inverse of a unitary/anti-unitary pair: (Ma K^f)^-1 = K^f Ma^dag."""
    ma, fa = a
    inv = ma.conj().T
    return (np.conj(inv) if fa else inv), fa


def apply_to_vector(a: Pair, v: np.ndarray) -> np.ndarray:
    ma, fa = a
    return ma @ (np.conj(v) if fa else v)


def adjoint_action(a: Pair, x: np.ndarray) -> np.ndarray:
    """V x V^-1 for unitary/anti-unitary V; equals M conj^f(x) M^dag."""
    ma, fa = a
    return ma @ (np.conj(x) if fa else x) @ ma.conj().T


def conjugate_pair(t: np.ndarray, a: Pair) -> Pair:
    """T (M K^f) T^dag for a unitary T; matrix becomes T M T^t when f = 1."""
    ma, fa = a
    right = t.T if fa else t.conj().T
    return t @ ma @ right, fa


def kron_pair(a: Pair, b: Pair) -> Pair:
    """Tensor product; requires equal flags (conjugation is basis-local)."""
    ma, fa = a
    mb, fb = b
    if fa != fb:
        raise InvalidSystem("cannot tensor a unitary with an anti-unitary")
    return np.kron(ma, mb), fa


@dataclass(frozen=True, eq=False)
class ProjectiveRep:
    """g -> (matrix, flag) with flag pattern given by the twist p: G -> Z2."""

    group: FiniteGroup
    twist: Z2Hom
    ops: tuple[Pair, ...]

    def __post_init__(self):
        if len(self.ops) != self.group.n:
            raise InvalidSystem(
                f"need {self.group.n} operators, got {len(self.ops)}"
            )
        dim = self.ops[0][0].shape[0]
        for g, (m, f) in enumerate(self.ops):
            if m.shape != (dim, dim):
                raise InvalidSystem(f"operator {g} has shape {m.shape}")
            if f != self.twist(g):
                raise InvalidSystem(
                    f"flag of operator {g} is {f}, twist demands {self.twist(g)}"
                )
            if np.linalg.norm(m @ m.conj().T - np.eye(dim)) > 1e-9 * dim:
                raise NotUnitary(f"operator {g} is not unitary within 1e-9")
        e = self.group.identity
        if np.linalg.norm(self.ops[e][0] - np.eye(dim)) > 1e-8 * dim:
            raise InvalidSystem("operator at the identity must be the identity")

    @staticmethod
    def build(group: FiniteGroup, twist: Z2Hom, matrices) -> "ProjectiveRep":
        ops = tuple(pair(m, twist(g)) for g, m in enumerate(matrices))
        return ProjectiveRep(group, twist, ops)

    @property
    def dim(self) -> int:
        return self.ops[0][0].shape[0]

    def op(self, g: int) -> Pair:
        return self.ops[g]

    def act(self, g: int, x: np.ndarray) -> np.ndarray:
        return adjoint_action(self.ops[g], x)

    def rescaled(self, phases) -> "ProjectiveRep":
        """Gauge change g -> lambda(g) V_g; phases[identity] must be 1."""
        ops = tuple(
            (complex(lam) * m, f) for lam, (m, f) in zip(phases, self.ops)
        )
        return ProjectiveRep(self.group, self.twist, ops)

    def conjugated(self, t: np.ndarray) -> "ProjectiveRep":
        ops = tuple(conjugate_pair(t, o) for o in self.ops)
        return ProjectiveRep(self.group, self.twist, ops)

    def det_normalized(self) -> "ProjectiveRep":
        """Gauge with det = 1 everywhere; the cocycle then satisfies v^dim = 1.

        Taking determinants of V_g V_h = v(g,h) V_gh shows v^dim is the
        twisted coboundary of det V, so this gauge pins every cocycle value
        onto the dim-th root lattice.
        """
        dim = self.dim
        ops = []
        for m, f in self.ops:
            root = np.exp(np.log(np.linalg.det(m)) / dim)
            ops.append((m / root, f))
        return ProjectiveRep(self.group, self.twist, tuple(ops))
