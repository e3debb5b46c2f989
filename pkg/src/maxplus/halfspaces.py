"""Max-plus affine half-spaces and containment tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .convex_sets import ConvexSet
from .linalg import DimensionMismatch, TropVector
from .semiring import MaxPlusScalar, ZERO

Side = Literal["plus", "minus"]


def eval_form(coeffs: TropVector, x: TropVector) -> MaxPlusScalar:
    """Max-plus linear form: max_i (coeffs_i + x_i)."""
    if coeffs.dim != x.dim:
        raise DimensionMismatch(f"dim {coeffs.dim} vs {x.dim}")
    out = ZERO
    for a, v in zip(coeffs, x):
        out = out + a * v
    return out


@dataclass(frozen=True)
class HalfSpace:
    """The region where psi_plus(x) + a_plus >= psi_minus(x) + a_minus.

    The minus side is the opposite half-space (reversed inequality);
    boundary points belong to both sides.
    """

    plus_coeffs: TropVector
    plus_const: MaxPlusScalar
    minus_coeffs: TropVector
    minus_const: MaxPlusScalar

    def __post_init__(self):
        if self.plus_coeffs.dim != self.minus_coeffs.dim:
            raise DimensionMismatch(
                f"dim {self.plus_coeffs.dim} vs {self.minus_coeffs.dim}"
            )

    @property
    def dim(self) -> int:
        return self.plus_coeffs.dim

    def _sides(self, x: TropVector, tolerance: float = 0.0):
        lhs = eval_form(self.plus_coeffs, x) + self.plus_const
        rhs = eval_form(self.minus_coeffs, x) + self.minus_const
        if tolerance:
            slack = MaxPlusScalar(tolerance)
            return lhs * slack, rhs * slack, lhs, rhs
        return lhs, rhs, lhs, rhs

    def contains(self, x: TropVector, side: Side, tolerance: float = 0.0) -> bool:
        if x.dim != self.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {x.dim}")
        lhs_relaxed, rhs_relaxed, lhs, rhs = self._sides(x, tolerance)
        if side == "plus":
            return lhs_relaxed >= rhs
        if side == "minus":
            return rhs_relaxed >= lhs
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")

    def contains_ray(self, r: TropVector, side: Side) -> bool:
        """Homogeneous inequality for a recession direction (constants drop)."""
        lhs = eval_form(self.plus_coeffs, r)
        rhs = eval_form(self.minus_coeffs, r)
        return lhs >= rhs if side == "plus" else rhs >= lhs

    def contains_set(self, A: ConvexSet, side: Side, tolerance: float = 0.0) -> bool:
        """Whether the whole V-represented set lies in the chosen side.

        Checking the points against the affine inequality and the rays against
        the homogeneous one is exact: a max-plus combination of satisfying
        generators satisfies the same inequality (the convex-combination
        constraint lets the constant absorb into the point coefficients).
        """
        if A.dim != self.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {A.dim}")
        if not all(self.contains(p, side, tolerance) for p in A.points):
            return False
        return all(self.contains_ray(r, side) for r in A.rays)

    def to_json(self) -> dict:
        return {
            "plus": {"coeffs": self.plus_coeffs.to_json(), "const": self.plus_const.to_json()},
            "minus": {"coeffs": self.minus_coeffs.to_json(), "const": self.minus_const.to_json()},
        }

    @classmethod
    def from_json(cls, obj) -> "HalfSpace":
        if not isinstance(obj, dict) or "plus" not in obj or "minus" not in obj:
            raise ValueError("half-space document needs \"plus\" and \"minus\" objects")
        def part(o, name):
            if not isinstance(o, dict) or "coeffs" not in o or "const" not in o:
                raise ValueError(f"half-space \"{name}\" needs \"coeffs\" and \"const\"")
            return TropVector.from_json(o["coeffs"]), MaxPlusScalar.from_json(o["const"])
        pc, pk = part(obj["plus"], "plus")
        mc, mk = part(obj["minus"], "minus")
        return cls(pc, pk, mc, mk)
