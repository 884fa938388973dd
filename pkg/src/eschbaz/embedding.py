"""Shift-parameterized Bazaikin candidates for a given Eschenburg space.

Rewriting an Eschenburg space with all six parameters shifted by an integer
c is an isometry, but it changes the associated Bazaikin candidate

    q^c = (2(a1+c)+1, 2(a2+c)+1, 2(a3+c)+1, -(2(b2+c)+1), -(2(b3+c)+1)).

This module decides, in exact integer arithmetic, for which shifts the
candidate is non-singular (``nonsingular_shift``) and positively curved
(``pc_shift_window``), produces certified non-singular shifts of the form
+-2**(mu-1) * P**mu (``certified_shift``), tracks when two shifts can share
the same |H^6| (``collision_locus``), and builds embedding certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import bazaikin
from .arith import elementary_symmetric, factorize
from .bazaikin import BazParams
from .eschenburg import (
    EschParams,
    NotPositivelyCurvedError,
    in_pc_normal_form,
    is_free,
    is_pc_metric,
    pc_normal_form,
)


class NormalFormError(ValueError):
    """Input was required to be in positive-curvature normal form but is not."""


class SingularCandidateError(ValueError):
    """The requested shift yields a singular Bazaikin candidate."""


# The normal form of the cohomogeneity-one family a=(p,1,1), b=(p+2,0,0) is
# a=(t,0,0), b=(t+2,-1,-1) with t = p-1.  Its curvature window is one point,
# although a closed range of two shifts is sometimes quoted for it; reports
# carry a note instead of silently adopting either reading.
COHOM1_WINDOW_NOTE = (
    "cohomogeneity-one family a=(p,1,1), b=(p+2,0,0): curvature window is "
    "sometimes quoted as -1 <= c <= 0, but the strict pairwise-sum "
    "inequalities give exactly {-1} (at c=0 the pair sum q4+q5 equals -2 "
    "while the others are positive)"
)


@dataclass(frozen=True)
class EmbeddingCertificate:
    """One (Eschenburg parameters, shift, Bazaikin candidate) triple.

    ``baz`` always equals candidate_q(esch, shift); the boolean flags agree
    with the predicate modules on recomputation.  ``h6`` is |H^6| of the
    candidate when it is non-singular and 0 otherwise; ``offending_pairs``
    lists the violated gcd conditions (1-based index pairs) when singular.
    """

    esch: EschParams
    shift: int
    baz: BazParams
    baz_free: bool
    baz_pc: bool
    esch_pc: bool
    h6: int
    offending_pairs: tuple[tuple[tuple[int, int], tuple[int, int], int], ...] = ()


@dataclass(frozen=True)
class WindowReport:
    """All certificates across the positive-curvature shift window.

    ``esch`` is in positive-curvature normal form; every certificate in the
    window is positively curved by construction, and ``any_nonsingular``
    records whether at least one is a genuine Bazaikin space.
    """

    esch: EschParams
    window: range
    certificates: tuple[EmbeddingCertificate, ...]
    any_nonsingular: bool
    notes: tuple[str, ...] = ()


def candidate_q(e: EschParams, c: int) -> BazParams:
    """The Bazaikin candidate for e rewritten with shift c; sum is 2(b1+c)+1."""
    a, b = e.a, e.b
    return BazParams(
        (
            2 * (a[0] + c) + 1,
            2 * (a[1] + c) + 1,
            2 * (a[2] + c) + 1,
            -(2 * (b[1] + c) + 1),
            -(2 * (b[2] + c) + 1),
        )
    )


def nonsingular_shift(e: EschParams, c: int) -> bool:
    """True iff the shift-c candidate is a genuine (non-singular) Bazaikin space.

    Equivalent to e being free plus the nine conditions
    gcd(a_i + a_j + 1 + 2c, a_k - b_l) == 1, where {i, j} is the complement
    of k.  A zero difference makes the gcd equal |a_i + a_j + 1 + 2c|, which
    is evaluated literally.
    """
    if not is_free(e):
        return False
    a, b = e.a, e.b
    for k in range(3):
        i, j = (x for x in range(3) if x != k)
        pair_sum = a[i] + a[j] + 1 + 2 * c
        if any(gcd(pair_sum, a[k] - bl) != 1 for bl in b):
            return False
    return True


def make_certificate(e: EschParams, c: int) -> EmbeddingCertificate:
    """Evaluate every certificate field for the shift-c candidate of e."""
    q = candidate_q(e, c)
    free = bazaikin.is_free_baz(q)
    return EmbeddingCertificate(
        esch=e,
        shift=c,
        baz=q,
        baz_free=free,
        baz_pc=bazaikin.is_pc_baz(q),
        esch_pc=is_pc_metric(e),
        h6=bazaikin.h6_order(q) if free else 0,
        offending_pairs=() if free else tuple(bazaikin.freeness_failures(q)),
    )


def pc_shift_window(e: EschParams) -> range:
    """All integer shifts whose candidate is positively curved.

    Solves -(a2 + a3 + 1) < 2c < -(b2 + b3 + 1) in integer arithmetic (no
    halving, no floats).  Nonempty for every input in normal form: the open
    interval has half-length >= 1 and its endpoints cannot both be even
    integers at the minimal length.
    """
    if not in_pc_normal_form(e):
        raise NormalFormError(f"{e} is not in positive-curvature normal form")
    lo = -(e.a[1] + e.a[2] + 1)  # 2c must exceed this
    hi = -(e.b[1] + e.b[2] + 1)  # 2c must stay below this
    c_min = lo // 2 + 1
    c_max = (hi - 1) // 2
    window = range(c_min, c_max + 1)
    assert len(window) > 0
    return window


def _is_cohom1_normal_form(e: EschParams) -> bool:
    t = e.a[0]
    return e.a == (t, 0, 0) and e.b == (t + 2, -1, -1)


def window_scan(e: EschParams) -> WindowReport:
    """Certificates for every shift in the positive-curvature window.

    Normalizes e first, so the window is reported in normal-form
    coordinates.  Certificates are ordered by shift.
    """
    if not is_pc_metric(e):
        raise NotPositivelyCurvedError(f"{e} fails the fixed-metric positive-curvature test")
    f = pc_normal_form(e)
    window = pc_shift_window(f)
    certificates = tuple(make_certificate(f, c) for c in window)
    notes = (COHOM1_WINDOW_NOTE,) if _is_cohom1_normal_form(f) else ()
    return WindowReport(
        esch=f,
        window=window,
        certificates=certificates,
        any_nonsingular=any(cert.baz_free for cert in certificates),
        notes=notes,
    )


def shift_prime_product(e: EschParams, **factor_kwargs) -> int:
    """Product P underlying the certified shifts.

    For each of the nine (k, l) pairs, take the distinct prime divisors of
    a_k - b_l that are coprime to a_i + a_j + 1 ({i, j} the complement of
    k); each such prime contributes one factor of P per pair in which it
    qualifies.  Zero differences contribute nothing; an empty product is 1.
    """
    a, b = e.a, e.b
    product = 1
    for k in range(3):
        i, j = (x for x in range(3) if x != k)
        pair_sum = a[i] + a[j] + 1
        for bl in b:
            diff = a[k] - bl
            if diff == 0:
                continue
            for p in factorize(diff, **factor_kwargs).primes():
                if gcd(p, pair_sum) == 1:
                    product *= p
    return product


def _require_nonzero_differences(e: EschParams, what: str) -> None:
    # a_k == b_l pins one candidate pair sum at 0 for every shift, so the
    # gcd-equals-2 condition degenerates to |other pair sum| == 2 and at most
    # two shifts can ever work; the guaranteed-shift construction is void.
    if any(ak == bl for ak in e.a for bl in e.b):
        raise ValueError(
            f"{what} need all nine differences a_k - b_l nonzero; "
            f"{e} has a vanishing difference (free parameters with a vanishing "
            "difference admit at most two non-singular shifts)"
        )


def certified_shift(e: EschParams, mu: int, sign: int, **factor_kwargs) -> int:
    """A shift guaranteed to produce a non-singular candidate.

    Returns sign * 2**(mu-1) * P**mu with P from ``shift_prime_product``.
    Requires e free with all nine differences a_k - b_l nonzero, and
    mu >= 1; factorization-effort errors propagate.
    """
    if mu < 1:
        raise ValueError(f"mu must be >= 1, got {mu}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if not is_free(e):
        raise ValueError(f"certified shifts exist only for free parameters, got {e}")
    _require_nonzero_differences(e, "certified shifts")
    return sign * 2 ** (mu - 1) * shift_prime_product(e, **factor_kwargs) ** mu


def sigma3_shift_closed_form(e: EschParams, c: int) -> int:
    """sigma_3 of the 6-tuple (2(a_i+c)+1, -2(b_i+c)-1) without expanding it.

    Equals 8*(sigma_3(a) - sigma_3(b)) - 8*(sigma_1(a) + 2c + 1)
    * (sigma_2(a) - sigma_2(b)); the sigma_1 terms cancel because the
    parameter sums balance.
    """
    s1 = sum(e.a)
    d2 = elementary_symmetric(2, e.a) - elementary_symmetric(2, e.b)
    d3 = elementary_symmetric(3, e.a) - elementary_symmetric(3, e.b)
    return 8 * d3 - 8 * (s1 + 2 * c + 1) * d2


def collision_locus(e: EschParams) -> Fraction | None:
    """Where two different shifts can share the same |sigma_3|.

    Two shifts c != d give candidates with equal |H^6| exactly when c + d
    equals the returned rational.  Returns None when sigma_2(a) ==
    sigma_2(b), in which case |sigma_3| is constant and every shift pair
    collides ("everywhere").
    """
    d2 = elementary_symmetric(2, e.a) - elementary_symmetric(2, e.b)
    if d2 == 0:
        return None
    d3 = elementary_symmetric(3, e.a) - elementary_symmetric(3, e.b)
    return Fraction(d3, d2) - sum(e.a) - 1


def homotopy_distinct_embeddings(e: EschParams, n: int, **factor_kwargs) -> list[EmbeddingCertificate]:
    """n non-singular candidates with pairwise distinct |H^6|.

    Walks the certified shifts +-2**(mu-1) * P**mu for mu = 1, 2, ...,
    dropping any candidate whose |H^6| repeats an earlier one.  Since
    |sigma_3| is affine in the shift with nonzero slope (|H^4| is odd for
    free parameters), each |H^6| value is shared by at most two shifts, so
    mu <= n + 1 always suffices.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not is_free(e):
        raise ValueError(f"embedding targets exist only for free parameters, got {e}")
    _require_nonzero_differences(e, "guaranteed embedding targets")
    base = shift_prime_product(e, **factor_kwargs)
    out: list[EmbeddingCertificate] = []
    seen: set[int] = set()
    for mu in range(1, n + 2):
        for sign in (1, -1):
            c = sign * 2 ** (mu - 1) * base**mu
            cert = make_certificate(e, c)
            if not cert.baz_free:
                raise AssertionError(f"certified shift {c} produced a singular candidate for {e}")
            if cert.h6 in seen:
                continue
            seen.add(cert.h6)
            out.append(cert)
            if len(out) == n:
                return out
    raise AssertionError(f"could not reach {n} distinct |H^6| values for {e}")


def dual_embedding(e: EschParams, c: int) -> tuple[EschParams, BazParams]:
    """The swapped Eschenburg space and its Bazaikin host.

    With q = candidate_q(e, c) and qs its sum, returns the diffeomorphic
    (in general non-isometric) space given by a' = b + c, b' = a + c,
    together with (qs, -q4, -q5, -q2, -q3) -- which is exactly the shift-0
    candidate of the swapped space.  Non-singularity carries over and
    |H^6| is unchanged (the new 6-tuple is a signed permutation of the old).
    """
    if not nonsingular_shift(e, c):
        raise SingularCandidateError(f"shift {c} of {e} yields a singular candidate")
    q = candidate_q(e, c).q
    qs = sum(q)
    swapped = EschParams(tuple(x + c for x in e.b), tuple(x + c for x in e.a))
    dual = BazParams((qs, -q[3], -q[4], -q[1], -q[2]))
    assert dual == candidate_q(swapped, 0)
    return swapped, dual
