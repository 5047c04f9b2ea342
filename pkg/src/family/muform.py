"""Associated family of flat connections as evaluable coefficient fields.

On the complexified bundle C^4 the family reads

    nabla^mu = d + (mu - 1) P + (mu^-1 - 1) M

with P = A_o^(1,0) and M = A_o^(0,1). The coefficients are stored once and
Omega(mu) = (mu - 1) P + (mu^-1 - 1) M is formed on demand.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from src.common.exceptions import FamilyError
from src.common.logging import get_logger
from src.moebius import CircleGrid, SphereCongruenceGrid
from src.quatlin import algebra
from src.surface import TorusLattice

logger = get_logger(__name__)


@dataclass(frozen=True)
class MuForm:
    """Per point and direction coefficient matrices P and M, shape (n1, n2, d, d)."""

    Px: np.ndarray
    Py: np.ndarray
    Mx: np.ndarray
    My: np.ndarray
    lattice: TorusLattice
    mask: np.ndarray
    offset: tuple[float, float] = (0.0, 0.0)
    kind: str = "primal"

    def __post_init__(self) -> None:
        shapes = {a.shape for a in (self.Px, self.Py, self.Mx, self.My)}
        if len(shapes) != 1:
            raise FamilyError("Coefficient fields differ in shape", {"shapes": sorted(shapes)})
        shape = shapes.pop()
        if len(shape) != 4 or shape[-1] != shape[-2]:
            raise FamilyError("Coefficients must have shape (n1, n2, d, d)", {"shape": shape})

    @property
    def shape(self) -> tuple[int, int]:
        return self.Px.shape[:2]

    @property
    def dim(self) -> int:
        return self.Px.shape[-1]

    def evaluate(self, mu: complex) -> tuple[np.ndarray, np.ndarray]:
        """(Omega_x(mu), Omega_y(mu))."""
        mu = _check_mu(mu)
        a, b = mu - 1.0, 1.0 / mu - 1.0
        return a * self.Px + b * self.Mx, a * self.Py + b * self.My

    def along(self, mu: complex, direction: complex) -> np.ndarray:
        """Omega(mu) applied to the constant tangent vector `direction` = dx + i dy."""
        ox, oy = self.evaluate(mu)
        return direction.real * ox + direction.imag * oy

    def total(self) -> tuple[np.ndarray, np.ndarray]:
        """P + M per direction, the complexified A_o."""
        return self.Px + self.Mx, self.Py + self.My

    def typing_residual(self) -> float:
        """max of |P_y - i P_x| and |M_y + i M_x|; zero for a (1,0) + (0,1) split."""
        p = np.abs(self.Py - 1j * self.Px).max()
        m = np.abs(self.My + 1j * self.Mx).max()
        return float(max(p, m))

    def base_index(self, point: tuple[int, int]) -> tuple[int, int]:
        """Validated grid index of a base point."""
        i, j = (int(point[0]) % self.shape[0], int(point[1]) % self.shape[1])
        if not self.mask[i, j]:
            raise FamilyError("Base point is masked", {"base_point": (i, j)})
        return i, j


def _check_mu(mu: complex) -> complex:
    mu = complex(mu)
    if mu == 0 or not np.isfinite(mu):
        raise FamilyError("Spectral parameter must be a finite nonzero number", {"mu": str(mu)})
    return mu


def _projectors(S: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(1 - iS)/2 and (1 + iS)/2 for the complex matrices of S."""
    eye = np.eye(S.shape[-1])
    return 0.5 * (eye - 1j * S), 0.5 * (eye + 1j * S)


def connection_form(cg: CircleGrid, sg: SphereCongruenceGrid | None = None) -> MuForm:
    """Associated family of the modified Hopf field A_o."""
    sg = sg or cg.hopf.sphere
    plus, minus = _projectors(sg.embedded())
    ax, ay, _, _ = cg.modified()
    ex, ey = algebra.embed_qmat(ax), algebra.embed_qmat(ay)
    frames = cg.hopf.frames
    mf = MuForm(
        Px=plus @ ex,
        Py=plus @ ey,
        Mx=minus @ ex,
        My=minus @ ey,
        lattice=frames.lattice,
        mask=frames.mask,
        offset=frames.offset,
        kind="primal",
    )
    logger.debug("connection_form_built", policy=cg.policy, typing_residual=mf.typing_residual())
    return mf


def dual_family(cg: CircleGrid, sg: SphereCongruenceGrid | None = None) -> MuForm:
    """Family d + (mu - 1) Q_o^(1,0) + (mu^-1 - 1) Q_o^(0,1) with Q_o^(1,0) = Q_o (1 - iS)/2."""
    sg = sg or cg.hopf.sphere
    plus, minus = _projectors(sg.embedded())
    _, _, qx, qy = cg.modified()
    ex, ey = algebra.embed_qmat(qx), algebra.embed_qmat(qy)
    frames = cg.hopf.frames
    return MuForm(
        Px=ex @ plus,
        Py=ey @ plus,
        Mx=ex @ minus,
        My=ey @ minus,
        lattice=frames.lattice,
        mask=frames.mask,
        offset=frames.offset,
        kind="dual",
    )


def contragredient(mf: MuForm) -> MuForm:
    """Family of the dual representation: (P, M) -> (-P^T, -M^T)."""

    def neg_t(m: np.ndarray) -> np.ndarray:
        return -np.swapaxes(m, -1, -2)

    return dataclasses.replace(
        mf,
        Px=neg_t(mf.Px),
        Py=neg_t(mf.Py),
        Mx=neg_t(mf.Mx),
        My=neg_t(mf.My),
        kind=f"contragredient({mf.kind})",
    )


def constant_family(
    P: np.ndarray,
    M: np.ndarray,
    lattice: TorusLattice,
    n1: int = 16,
    n2: int = 16,
    kind: str = "constant",
) -> MuForm:
    """Family with x-coefficients P, M constant over the torus; y-coefficients follow the typing."""
    P = np.asarray(P, dtype=complex)
    M = np.asarray(M, dtype=complex)
    tile = (n1, n2, 1, 1)
    return MuForm(
        Px=np.tile(P, tile),
        Py=np.tile(1j * P, tile),
        Mx=np.tile(M, tile),
        My=np.tile(-1j * M, tile),
        lattice=lattice,
        mask=np.ones((n1, n2), dtype=bool),
        kind=kind,
    )


def zero_family(lattice: TorusLattice | None = None, n1: int = 16, n2: int = 16, dim: int = 4) -> MuForm:
    """A_o = 0: every holonomy is the identity."""
    zero = np.zeros((dim, dim))
    return constant_family(zero, zero, lattice or TorusLattice.rectangular(1.0, 1.0), n1, n2, kind="fixture:zero")


def jordan_family(lattice: TorusLattice | None = None, n1: int = 16, n2: int = 16) -> MuForm:
    """Constant nilpotent family whose holonomies have two 2x2 Jordan blocks at 1."""
    nil = np.zeros((4, 4))
    nil[0, 2] = nil[1, 3] = 1.0
    return constant_family(nil, nil, lattice or TorusLattice.rectangular(1.0, 1.0), n1, n2, kind="fixture:jordan")


def fixture_family(name: str, lattice: TorusLattice | None = None, n1: int = 16, n2: int = 16) -> MuForm:
    """Synthetic family by name: 'zero' or 'jordan'."""
    if name == "zero":
        return zero_family(lattice, n1, n2)
    if name == "jordan":
        return jordan_family(lattice, n1, n2)
    raise FamilyError(f"Unknown fixture family '{name}'")
