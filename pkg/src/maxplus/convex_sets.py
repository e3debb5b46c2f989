"""Finitely generated max-plus convex sets: co(points) + cone(rays)."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import List, Tuple

from .cones import Cone, NotMember
from .linalg import DimensionMismatch, TropMatrix, TropVector
from .semiring import ONE, ZERO, MaxPlusScalar


def _lift(v: TropVector, last: MaxPlusScalar) -> TropVector:
    return TropVector(list(v) + [last])


@dataclass(frozen=True)
class SetDecomposition:
    """Certificate: target = convex combination of extreme points, plus rays.

    Point coefficients max out at 0 (the convex-combination constraint);
    point_terms plus ray_terms never exceed dim + 1 entries.
    """

    point_terms: Tuple[Tuple[int, MaxPlusScalar], ...]
    ray_terms: Tuple[Tuple[int, MaxPlusScalar], ...]
    target: TropVector

    def recombine(self, A: "ConvexSet") -> TropVector:
        out = TropVector.zero(A.dim)
        for k, coeff in self.point_terms:
            out = out.join(A.points[k].scale(coeff))
        for h, coeff in self.ray_terms:
            out = out.join(A.rays[h].scale(coeff))
        return out

    def to_json(self) -> dict:
        return {
            "point_terms": [{"index": k, "coeff": c.to_json()} for k, c in self.point_terms],
            "ray_terms": [{"index": h, "coeff": c.to_json()} for h, c in self.ray_terms],
            "target": self.target.to_json(),
        }


class ConvexSet:
    """A = co(points) + cone(rays), both finite, in V-representation.

    The point list must be non-empty; zero-vector rays are stripped with a
    warning (they add nothing and would break ray normalization).
    """

    def __init__(self, points: TropMatrix, rays: TropMatrix | None = None):
        if points.ncols == 0:
            raise ValueError("a convex set needs at least one point")
        if rays is None:
            rays = TropMatrix([], dim=points.dim)
        if rays.dim != points.dim:
            raise DimensionMismatch(f"points dim {points.dim} vs rays dim {rays.dim}")
        kept = [r for r in rays.columns if not r.is_zero_vector]
        if len(kept) != rays.ncols:
            warnings.warn("dropping zero-vector rays from convex set", stacklevel=2)
        self._points = points
        self._rays = TropMatrix(kept, dim=points.dim)

    @classmethod
    def from_vectors(cls, points, rays=()) -> "ConvexSet":
        pts = list(points)
        rs = list(rays)
        dim = pts[0].dim if pts else None
        return cls(TropMatrix(pts, dim=dim), TropMatrix(rs, dim=dim))

    @property
    def points(self) -> TropMatrix:
        return self._points

    @property
    def rays(self) -> TropMatrix:
        return self._rays

    @property
    def dim(self) -> int:
        return self._points.dim

    def __repr__(self) -> str:
        return f"ConvexSet(points={list(self._points.columns)!r}, rays={list(self._rays.columns)!r})"

    def homogenize(self) -> Cone:
        """Lift to dimension n+1: points get last coordinate 0, rays -inf.

        This is the closure of the homogenization cone of the set, with the
        recession directions sitting in the last-coordinate-zero slice.
        """
        lifted = [_lift(p, ONE) for p in self._points.columns]
        lifted += [_lift(r, ZERO) for r in self._rays.columns]
        return Cone(TropMatrix(lifted, dim=self.dim + 1))

    def lifted_projection(self, x: TropVector) -> TropVector:
        """Projection of (x, 0) onto the homogenization cone, in n+1 dims."""
        if x.dim != self.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {x.dim}")
        return self.homogenize().project(_lift(x, ONE))

    def member(self, x: TropVector) -> bool:
        return self.lifted_projection(x) == _lift(x, ONE)

    def extreme_points(self) -> List[TropVector]:
        """All extreme points, lex-sorted (with -inf below every finite value).

        These are the basis generators of the homogenization cone whose last
        coordinate is finite, rescaled so that coordinate is 0.
        """
        out = []
        for g in self.homogenize().extract_basis().generators:
            last = g[self.dim]
            if last.is_zero:
                continue
            rescaled = g.scale(MaxPlusScalar(-last.as_float()))
            out.append(TropVector(list(rescaled)[: self.dim]))
        out.sort(key=lambda v: v.sort_key())
        return out

    def recession(self) -> Cone:
        """Recession cone, as the basis of the cone generated by the rays."""
        return Cone(self._rays).extract_basis()

    def decompose(self, x: TropVector) -> SetDecomposition:
        """Write a member as a convex combination of extreme points plus
        extreme recession rays, with at most dim + 1 terms in total."""
        lifted_x = _lift(x, ONE)
        cone = self.homogenize()
        try:
            cone_dec = cone.decompose(lifted_x)
        except NotMember as exc:
            raise NotMember(
                "vector is not a member of the convex set",
                TropVector(list(exc.projection)[: self.dim]),
            ) from None
        p = self._points.ncols
        point_terms = []
        ray_terms = []
        for k, coeff in cone_dec.terms:
            if k < p:
                point_terms.append((k, coeff))
            else:
                ray_terms.append((k - p, coeff))
        return SetDecomposition(tuple(point_terms), tuple(ray_terms), x)

    def minkowski_sum(self, other: "ConvexSet") -> "ConvexSet":
        """Max-plus Minkowski sum: pairwise joins of points, union of rays."""
        if other.dim != self.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")
        points = []
        for pa in self._points.columns:
            for pb in other._points.columns:
                j = pa.join(pb)
                if j not in points:
                    points.append(j)
        rays = list(self._rays.columns)
        for r in other._rays.columns:
            if r not in rays:
                rays.append(r)
        return ConvexSet(TropMatrix(points, dim=self.dim), TropMatrix(rays, dim=self.dim))

    def is_extreme(self, x: TropVector) -> bool:
        """Whether a member is an extreme point of the set.

        Appending a member to the point list leaves the represented set
        unchanged, so extremality can be read off the extended V-representation.
        """
        if not self.member(x):
            raise NotMember(
                "vector is not a member of the convex set",
                TropVector(list(self.lifted_projection(x))[: self.dim]),
            )
        extended = ConvexSet(
            TropMatrix(list(self._points.columns) + [x], dim=self.dim), self._rays
        )
        return x in extended.extreme_points()

    def to_json(self) -> dict:
        return {"points": self._points.to_json(), "rays": self._rays.to_json()}

    @classmethod
    def from_json(cls, obj) -> "ConvexSet":
        if not isinstance(obj, dict) or "points" not in obj:
            raise ValueError("set document must be an object with a \"points\" field")
        points = TropMatrix.from_json(obj["points"])
        rays = TropMatrix.from_json(obj.get("rays", []), dim=points.dim)
        return cls(points, rays)


def sets_equal(a: ConvexSet, b: ConvexSet) -> bool:
    """Set equality by mutual membership of points plus mutual ray containment."""
    if not all(b.member(p) for p in a.points):
        return False
    if not all(a.member(p) for p in b.points):
        return False
    ra, rb = Cone(a.rays), Cone(b.rays)
    return ra.contains_cone(rb) and rb.contains_cone(ra)
