"""Eschenburg parameter triples and their predicates.

An Eschenburg biquotient is parameterized by two integer triples a, b with
equal sums.  Everything below is a pure function of those six integers:
freeness of the circle action, order of its ineffective kernel, positive
curvature (both for some metric and for the fixed metric/labeling), the
isometry-canonical form, and the order of the fourth cohomology group.

Moves that are isometries (permuting a, permuting b2/b3, adding a common
shift to all six entries, rescaling by an ineffective kernel) are applied by
``canonicalize`` and ``effectivize``.  Moves that are mere diffeomorphisms
(cyclic relabelings of all of b, swapping a and b) are never applied
implicitly; the a/b swap appears only through the dual-embedding operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .arith import elementary_symmetric

_PERMS3 = tuple(permutations(range(3)))


class DegenerateActionError(ValueError):
    """The circle action is trivial (all parameters equal)."""


class NotPositivelyCurvedError(ValueError):
    """The parameters do not satisfy the fixed-metric positive-curvature test."""


@dataclass(frozen=True)
class EschParams:
    """Integer triples (a, b) with sum(a) == sum(b)."""

    a: tuple[int, int, int]
    b: tuple[int, int, int]

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        if len(a) != 3 or len(b) != 3:
            raise ValueError(f"expected two triples, got a={a}, b={b}")
        if sum(a) != sum(b):
            raise ValueError(f"parameter sums differ: sum(a) = {sum(a)}, sum(b) = {sum(b)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __str__(self) -> str:
        return f"a={self.a} b={self.b}"


def shift(e: EschParams, c: int) -> EschParams:
    """Add a common integer to all six entries (an isometry of the quotient)."""
    return EschParams(tuple(x + c for x in e.a), tuple(x + c for x in e.b))


def is_free(e: EschParams) -> bool:
    """Freeness of the circle action: six pairwise-coprimality checks.

    gcd(a1 - b_s(1), a2 - b_s(2)) == 1 for every permutation s; the third
    difference is redundant because the six entries have balanced sums.
    """
    a, b = e.a, e.b
    return all(gcd(a[0] - b[s[0]], a[1] - b[s[1]]) == 1 for s in _PERMS3)


def is_free_oracle(e: EschParams) -> bool:
    """Freeness decided by direct divisor enumeration, no gcd calls.

    For each permutation, looks for an integer m >= 2 dividing both matched
    differences, enumerating m up to min(|d1|, |d2|) and treating zero
    differences (divisible by everything) exhaustively.
    """
    a, b = e.a, e.b
    for s in _PERMS3:
        d1 = a[0] - b[s[0]]
        d2 = a[1] - b[s[1]]
        if d1 == 0 and d2 == 0:
            return False
        if d1 == 0 or d2 == 0:
            lone = d1 or d2
            if abs(lone) >= 2:
                return False
            continue
        for m in range(2, min(abs(d1), abs(d2)) + 1):
            if d1 % m == 0 and d2 % m == 0:
                return False
    return True


def kernel_order(e: EschParams) -> int:
    """Order of the ineffective kernel: gcd of all nine differences a_i - b_j.

    Zero means every difference vanishes (a totally degenerate action).
    """
    g = 0
    for ai in e.a:
        for bj in e.b:
            g = gcd(g, ai - bj)
    return g


def effectivize(e: EschParams) -> EschParams:
    """Divide out the ineffective kernel; the quotient space is unchanged.

    Subtracts t = a1 mod g from all six entries and divides by
    g = kernel_order(e), giving parameters with kernel order 1.
    """
    g = kernel_order(e)
    if g == 0:
        raise DegenerateActionError(f"all parameters equal ({e}); the action is trivial")
    if g == 1:
        return e
    t = e.a[0] % g
    return EschParams(
        tuple((x - t) // g for x in e.a),
        tuple((x - t) // g for x in e.b),
    )


def canonicalize(e: EschParams) -> EschParams:
    """Isometry-canonical representative.

    Sorts a descending, sorts (b2, b3) descending with b1 untouched, then
    shifts all six entries so min(a) == 0.  The multiset of differences
    a_i - b_j is unchanged, so every predicate in this module is preserved.
    """
    a = tuple(sorted(e.a, reverse=True))
    b = (e.b[0],) + tuple(sorted(e.b[1:], reverse=True))
    c = -a[2]
    return EschParams(tuple(x + c for x in a), tuple(x + c for x in b))


def admits_positive_curvature(e: EschParams) -> bool:
    """True iff every b_i lies strictly outside [min(a), max(a)]."""
    lo, hi = min(e.a), max(e.a)
    return all(bi < lo or bi > hi for bi in e.b)


def is_pc_metric(e: EschParams) -> bool:
    """Positive curvature for the fixed metric and labeling.

    Demands, on top of ``admits_positive_curvature``, that b2 and b3 lie on
    the same side of [min(a), max(a)].  Cyclic relabelings of b would change
    the metric and are deliberately not tried.
    """
    if not admits_positive_curvature(e):
        return False
    lo, hi = min(e.a), max(e.a)
    b2, b3 = e.b[1], e.b[2]
    return (b2 < lo and b3 < lo) or (b2 > hi and b3 > hi)


def _first_chain(e: EschParams) -> bool:
    """b3 <= b2 < a3 <= a2 <= a1 < b1."""
    a, b = e.a, e.b
    return b[2] <= b[1] < a[2] <= a[1] <= a[0] < b[0]


def pc_normal_form(e: EschParams) -> EschParams:
    """Representative with b3 <= b2 < a3 <= a2 <= a1 < b1 and min(a) == 0.

    Canonicalizes, and if b2/b3 ended up above the a-interval (the mirrored
    inequality chain), negates all six entries -- the conjugate circle
    parameterization, an isometric model -- and canonicalizes again.
    """
    if not is_pc_metric(e):
        raise NotPositivelyCurvedError(f"{e} fails the fixed-metric positive-curvature test")
    f = canonicalize(e)
    if f.b[1] > max(f.a):
        f = canonicalize(EschParams(tuple(-x for x in f.a), tuple(-x for x in f.b)))
    assert _first_chain(f)
    return f


def in_pc_normal_form(e: EschParams) -> bool:
    """True iff e already satisfies the normal-form inequality chain."""
    return _first_chain(e)


def h4_order(e: EschParams) -> int:
    """|H^4| = |sigma_2(a) - sigma_2(b)|; 0 only for degenerate inputs."""
    return abs(elementary_symmetric(2, e.a) - elementary_symmetric(2, e.b))


def family_cohomogeneity_one(p: int) -> EschParams:
    """The positively curved cohomogeneity-one member a=(p,1,1), b=(p+2,0,0)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return EschParams((p, 1, 1), (p + 2, 0, 0))


def family_cohomogeneity_two(variant: str, k: int) -> EschParams:
    """Members of the two infinite cohomogeneity-two families.

    Variant "A": a = (15015k + 39, 0, 0),    b = (15015k + 55, -3, -13).
    Variant "B": a = (15015k + 12909, 0, 0), b = (15015k + 12925, -3, -13).

    15015 = 3*5*7*11*13, which is what keeps every shift in the curvature
    window singular for every k.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if variant == "A":
        base_a, base_b = 39, 55
    elif variant == "B":
        base_a, base_b = 12909, 12925
    else:
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    n = 15015 * k
    return EschParams((n + base_a, 0, 0), (n + base_b, -3, -13))
