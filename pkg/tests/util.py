"""Random instance generators and conversions shared across the test suite."""

import random

from maxplus import Cone, ConvexSet, MaxPlusScalar, TropMatrix, TropVector, ZERO

NEG = float("-inf")


def floats(v) -> list:
    return [c.as_float() for c in v]


def vec(*values) -> TropVector:
    return TropVector.of(*values)


def rand_scalar(rng: random.Random, lo=-5, hi=5, p_zero=0.2) -> MaxPlusScalar:
    if rng.random() < p_zero:
        return ZERO
    return MaxPlusScalar(rng.randint(lo, hi))


def rand_vector(rng: random.Random, n: int, p_zero=0.2, nonzero=True) -> TropVector:
    while True:
        v = TropVector([rand_scalar(rng, p_zero=p_zero) for _ in range(n)])
        if not nonzero or not v.is_zero_vector:
            return v


def rand_cone(rng: random.Random, n: int, max_gens=7) -> Cone:
    m = rng.randint(1, max_gens)
    return Cone(TropMatrix([rand_vector(rng, n) for _ in range(m)], dim=n))


def rand_cone_member(rng: random.Random, C: Cone) -> TropVector:
    """Random linear combination of the generators (may be the zero vector)."""
    out = TropVector.zero(C.dim)
    for g in C.generators:
        lam = rand_scalar(rng, p_zero=0.4)
        out = out.join(g.scale(lam))
    return out


def rand_set(rng: random.Random, n: int, max_points=6, max_rays=3, with_rays=True) -> ConvexSet:
    p = rng.randint(1, max_points)
    q = rng.randint(0, max_rays) if with_rays else 0
    points = TropMatrix([rand_vector(rng, n, nonzero=False) for _ in range(p)], dim=n)
    rays = TropMatrix([rand_vector(rng, n) for _ in range(q)], dim=n)
    return ConvexSet(points, rays)


def rand_set_member(rng: random.Random, A: ConvexSet) -> TropVector:
    """Random convex combination of points, joined with a random ray part."""
    alphas = [rng.randint(-5, 0) for _ in A.points]
    alphas[rng.randrange(len(alphas))] = 0
    out = TropVector.zero(A.dim)
    for p, a in zip(A.points, alphas):
        out = out.join(p.scale(MaxPlusScalar(a)))
    for r in A.rays:
        out = out.join(r.scale(rand_scalar(rng, lo=-3, hi=3, p_zero=0.5)))
    return out


def fig1_set() -> ConvexSet:
    return ConvexSet.from_vectors(
        [vec(5, 2), vec(4, 0), vec(3, 2), vec(1, 3), vec(2, 5)],
        [vec(0, 1), vec(2, 0)],
    )


def fig1_extreme_points():
    return [vec(1, 3), vec(2, 5), vec(3, 2), vec(4, 0), vec(5, 2)]


def same_ray(u: TropVector, v: TropVector) -> bool:
    """Whether two nonzero vectors generate the same max-plus ray."""
    mu, mv = u.max_coord(), v.max_coord()
    return u.scale(MaxPlusScalar(-mu.as_float())) == v.scale(MaxPlusScalar(-mv.as_float()))
