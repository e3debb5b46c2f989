"""Vectors and matrices over the max-plus semiring, with residuated operators."""

from __future__ import annotations

from typing import Iterable, List, Sequence

from .semiring import ZERO, MaxPlusScalar, ResidualScalar, residual, scalars_equal


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


class TropVector:
    """Immutable coordinate vector over MaxPlusScalar."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable[MaxPlusScalar]):
        cs = tuple(coords)
        if not cs:
            raise ValueError("vector dimension must be at least 1")
        for c in cs:
            if not isinstance(c, MaxPlusScalar):
                raise TypeError(f"coordinates must be MaxPlusScalar, got {c!r}")
        self._coords = cs

    @classmethod
    def of(cls, *values) -> "TropVector":
        """Build from plain numbers; -inf (or float('-inf')) gives the zero."""
        return cls(MaxPlusScalar(v) for v in values)

    @classmethod
    def zero(cls, dim: int) -> "TropVector":
        return cls([ZERO] * dim)

    @property
    def dim(self) -> int:
        return len(self._coords)

    def __len__(self) -> int:
        return len(self._coords)

    def __iter__(self):
        return iter(self._coords)

    def __getitem__(self, i: int) -> MaxPlusScalar:
        return self._coords[i]

    def join(self, other: "TropVector") -> "TropVector":
        """Pointwise max (vector semiring addition)."""
        if other.dim != self.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")
        return TropVector(a + b for a, b in zip(self._coords, other._coords))

    def scale(self, lam: MaxPlusScalar) -> "TropVector":
        return TropVector(lam * c for c in self._coords)

    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self._coords) if not c.is_zero)

    @property
    def is_zero_vector(self) -> bool:
        return all(c.is_zero for c in self._coords)

    def max_coord(self) -> MaxPlusScalar:
        m = ZERO
        for c in self._coords:
            m = m + c
        return m

    def __le__(self, other: "TropVector") -> bool:
        if other.dim != self.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")
        return all(a <= b for a, b in zip(self._coords, other._coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropVector):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self) -> int:
        return hash(self._coords)

    def sort_key(self) -> tuple:
        """Lexicographic key with -inf below every finite value."""
        return tuple(c.as_float() for c in self._coords)

    def __repr__(self) -> str:
        inner = ", ".join("-inf" if c.is_zero else f"{c.as_float():g}" for c in self._coords)
        return f"TropVector({inner})"

    def to_json(self) -> list:
        return [c.to_json() for c in self._coords]

    @classmethod
    def from_json(cls, obj) -> "TropVector":
        if not isinstance(obj, list) or not obj:
            raise ValueError(f"expected a non-empty array of scalars, got {obj!r}")
        return cls(MaxPlusScalar.from_json(v) for v in obj)


def vectors_equal(u: TropVector, v: TropVector, tolerance: float = 0.0) -> bool:
    if u.dim != v.dim:
        return False
    return all(scalars_equal(a, b, tolerance) for a, b in zip(u, v))


class TropMatrix:
    """Column-major matrix: columns are the generators of a cone or set.

    An empty matrix (no columns) is allowed but then needs an explicit
    ambient dimension.
    """

    __slots__ = ("_columns", "_dim")

    def __init__(self, columns: Iterable[TropVector], dim: int | None = None):
        cols = tuple(columns)
        if cols:
            n = cols[0].dim
            for c in cols:
                if c.dim != n:
                    raise DimensionMismatch("columns have mixed dimensions")
            if dim is not None and dim != n:
                raise DimensionMismatch(f"declared dim {dim} but columns have dim {n}")
            self._dim = n
        else:
            if dim is None:
                raise ValueError("empty matrix needs an explicit dimension")
            if dim < 1:
                raise ValueError("dimension must be at least 1")
            self._dim = dim
        self._columns = cols

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def ncols(self) -> int:
        return len(self._columns)

    @property
    def columns(self) -> tuple:
        return self._columns

    def __iter__(self):
        return iter(self._columns)

    def __getitem__(self, k: int) -> TropVector:
        return self._columns[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self._columns == other._columns and self._dim == other._dim

    def __hash__(self) -> int:
        return hash((self._columns, self._dim))

    def __repr__(self) -> str:
        return f"TropMatrix({list(self._columns)!r})"

    def to_json(self) -> list:
        return [c.to_json() for c in self._columns]

    @classmethod
    def from_json(cls, obj, dim: int | None = None) -> "TropMatrix":
        if not isinstance(obj, list):
            raise ValueError(f"expected an array of vectors, got {obj!r}")
        return cls((TropVector.from_json(v) for v in obj), dim=dim)


def combine(M: TropMatrix, lambdas: Sequence[MaxPlusScalar]) -> TropVector:
    """Max-plus linear combination of the columns: max_k (lambda_k + M[:,k])."""
    if len(lambdas) != M.ncols:
        raise DimensionMismatch(f"{M.ncols} columns but {len(lambdas)} coefficients")
    out = TropVector.zero(M.dim)
    for lam, col in zip(lambdas, M.columns):
        out = out.join(col.scale(lam))
    return out


def left_residual(M: TropMatrix, x: TropVector) -> List[ResidualScalar]:
    """Greatest lambda_k with lambda_k + M[:,k] <= x, per column.

    +inf appears exactly at zero columns.
    """
    if x.dim != M.dim:
        raise DimensionMismatch(f"dim {M.dim} vs {x.dim}")
    out = []
    for col in M.columns:
        out.append(min(residual(x[i], col[i]) for i in range(M.dim)))
    return out


def project(M: TropMatrix, x: TropVector) -> TropVector:
    """Canonical projection: greatest element of cone(columns of M) below x."""
    lams = [r.clamp_to_max_plus() for r in left_residual(M, x)]
    return combine(M, lams)
