"""Batch verification and exhaustive search.

Three fixed verification jobs -- the nine hard-coded counterexample spaces,
the two infinite cohomogeneity-two families that extend the first and last
of them, and the cohomogeneity-one family -- plus ``scan_box``, which
enumerates every canonical free, positively curved Eschenburg parameter set
inside a box and reports which of them admit no positively curved
non-singular Bazaikin host under the shift construction.

``scan_box`` shards its enumeration over worker processes; results are
merged by deterministic sort, so output is identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .bazaikin import BazParams
from .embedding import (
    COHOM1_WINDOW_NOTE,
    EmbeddingCertificate,
    WindowReport,
    make_certificate,
    window_scan,
)
from .eschenburg import (
    EschParams,
    family_cohomogeneity_one,
    family_cohomogeneity_two,
    h4_order,
    is_free,
    is_pc_metric,
    pc_normal_form,
)


class VerificationFailure(Exception):
    """A batch check found a mismatch; ``details`` names what and where."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


@dataclass(frozen=True)
class SurveyRow:
    """One space's window scan in tabular form.

    ``verdicts`` holds one non-singularity flag per shift in the window;
    a counterexample is a nonempty window whose verdicts are all False.
    """

    esch: EschParams
    window: range
    verdicts: tuple[bool, ...]
    is_counterexample: bool
    h4: int


@dataclass(frozen=True)
class ScanStats:
    total: int
    embeddable: int
    counterexamples: int


@dataclass(frozen=True)
class CohomogeneityOneSummary:
    p_max: int
    certificates: tuple[EmbeddingCertificate, ...]
    notes: tuple[str, ...]


# The nine known counterexamples: free, positively curved Eschenburg spaces
# whose entire curvature window consists of singular candidates.  Windows are
# stored verbatim as ground truth, not re-derived.
KNOWN_COUNTEREXAMPLES: tuple[tuple[tuple[int, int, int], tuple[int, int, int], range], ...] = (
    ((39, 0, 0), (55, -3, -13), range(0, 8)),
    ((77, 2, 0), (93, -3, -11), range(-1, 7)),
    ((171, 2, 0), (187, -3, -11), range(-1, 7)),
    ((225, 4, 0), (247, -5, -13), range(-2, 9)),
    ((281, 3, 0), (294, -2, -8), range(-1, 5)),
    ((309, 6, 0), (323, -3, -5), range(-3, 4)),
    ((664, 2, 0), (678, -3, -9), range(-1, 6)),
    ((827, 4, 0), (843, -3, -9), range(-2, 6)),
    ((12909, 0, 0), (12925, -3, -13), range(0, 8)),
)


def _row_from_report(report: WindowReport) -> SurveyRow:
    verdicts = tuple(cert.baz_free for cert in report.certificates)
    return SurveyRow(
        esch=report.esch,
        window=report.window,
        verdicts=verdicts,
        is_counterexample=len(report.window) > 0 and not any(verdicts),
        h4=h4_order(report.esch),
    )


def verify_known_counterexamples() -> list[SurveyRow]:
    """Re-check all nine stored counterexamples from scratch.

    Each space must be free and positively curved, its computed window must
    equal the stored one, and every shift in the window must be singular.
    """
    rows = []
    for index, (a, b, expected_window) in enumerate(KNOWN_COUNTEREXAMPLES, start=1):
        e = EschParams(a, b)
        if not is_free(e):
            raise VerificationFailure(
                f"row {index}: {e} is not free", row=index, expected="free", actual="not free"
            )
        if not is_pc_metric(e):
            raise VerificationFailure(
                f"row {index}: {e} is not positively curved",
                row=index, expected="positively curved", actual="not positively curved",
            )
        row = _row_from_report(window_scan(e))
        if row.window != expected_window:
            raise VerificationFailure(
                f"row {index}: window mismatch for {e}: "
                f"expected [{expected_window.start}, {expected_window[-1]}], "
                f"got [{row.window.start}, {row.window[-1]}]",
                row=index, expected=expected_window, actual=row.window,
            )
        if not row.is_counterexample:
            good = [c for c, ok in zip(row.window, row.verdicts) if ok]
            raise VerificationFailure(
                f"row {index}: {e} embeds after all (non-singular at c in {good})",
                row=index, expected="all shifts singular", actual=good,
            )
        rows.append(row)
    return rows


def verify_infinite_families(k_max: int) -> list[SurveyRow]:
    """Check members 0..k_max of both infinite families are counterexamples."""
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    rows = []
    for variant in ("A", "B"):
        for k in range(k_max + 1):
            e = family_cohomogeneity_two(variant, k)
            if not (is_free(e) and is_pc_metric(e)):
                raise VerificationFailure(
                    f"family {variant}, k={k}: {e} is not free and positively curved",
                    variant=variant, k=k,
                )
            row = _row_from_report(window_scan(e))
            if not row.is_counterexample:
                raise VerificationFailure(
                    f"family {variant}, k={k}: {e} embeds after all",
                    variant=variant, k=k, actual=row.verdicts,
                )
            rows.append(row)
    return rows


def verify_cohomogeneity_one(p_max: int) -> CohomogeneityOneSummary:
    """Check the shift -1 candidate for a=(p,1,1), b=(p+2,0,0), 1 <= p <= p_max.

    The candidate must be (2p-1, 1, 1, 1, 1), non-singular, and positively
    curved.  The summary carries the standing window-discrepancy note for
    this family.
    """
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    certificates = []
    for p in range(1, p_max + 1):
        e = family_cohomogeneity_one(p)
        cert = make_certificate(e, -1)
        expected = BazParams((2 * p - 1, 1, 1, 1, 1))
        if cert.baz != expected:
            raise VerificationFailure(
                f"p={p}: candidate {cert.baz} != {expected}",
                p=p, expected=expected, actual=cert.baz,
            )
        if not (cert.baz_free and cert.baz_pc):
            raise VerificationFailure(
                f"p={p}: candidate {cert.baz} free={cert.baz_free} pc={cert.baz_pc}",
                p=p, expected="free and positively curved", actual=cert,
            )
        certificates.append(cert)
    return CohomogeneityOneSummary(
        p_max=p_max,
        certificates=tuple(certificates),
        notes=(COHOM1_WINDOW_NOTE,),
    )


def _free6(a1: int, a2: int, a3: int, b1: int, b2: int, b3: int) -> bool:
    return (
        gcd(a1 - b1, a2 - b2) == 1
        and gcd(a1 - b1, a2 - b3) == 1
        and gcd(a1 - b2, a2 - b1) == 1
        and gcd(a1 - b2, a2 - b3) == 1
        and gcd(a1 - b3, a2 - b1) == 1
        and gcd(a1 - b3, a2 - b2) == 1
    )


def _enumerate_chunk(args: tuple[list[tuple[int, int]], int]) -> set[tuple]:
    """Free, positively curved canonical forms for a chunk of (a1, a2) pairs.

    Enumerates both inequality chains (b2, b3 below the a-interval with b1
    above, and the mirror image), so a space whose normal form overflows the
    box is still found through its mirrored canonical form.  Returns
    normal-form keys, which is what makes global deduplication possible.
    """
    apairs, max_abs = args
    found: set[tuple] = set()
    for a1, a2 in apairs:
        s = a1 + a2
        # chain 1: b3 <= b2 <= -1, b1 = s - b2 - b3 <= max_abs (b1 > a1 holds)
        for b3 in range(-max_abs, 0):
            for b2 in range(max(b3, s - max_abs - b3), 0):
                b1 = s - b2 - b3
                if _free6(a1, a2, 0, b1, b2, b3):
                    f = pc_normal_form(EschParams((a1, a2, 0), (b1, b2, b3)))
                    found.add((f.a, f.b))
        # chain 2: b2 >= b3 >= a1 + 1, b2 <= max_abs, b1 = s - b2 - b3 >= -max_abs
        for b3 in range(a1 + 1, max_abs + 1):
            for b2 in range(b3, min(max_abs, s + max_abs - b3) + 1):
                b1 = s - b2 - b3
                if _free6(a1, a2, 0, b1, b2, b3):
                    f = pc_normal_form(EschParams((a1, a2, 0), (b1, b2, b3)))
                    found.add((f.a, f.b))
    return found


def _scan_chunk(keys: list[tuple]) -> list[tuple]:
    """Window-scan each normal form; returns (key, window bounds, verdicts)."""
    out = []
    for a, b in keys:
        report = window_scan(EschParams(a, b))
        verdicts = tuple(cert.baz_free for cert in report.certificates)
        out.append(((a, b), report.window.start, report.window[-1], verdicts))
    return out


def _chunked(items: list, n_chunks: int) -> list[list]:
    n_chunks = max(1, min(n_chunks, len(items)))
    size, extra = divmod(len(items), n_chunks)
    chunks, start = [], 0
    for i in range(n_chunks):
        end = start + size + (1 if i < extra else 0)
        chunks.append(items[start:end])
        start = end
    return chunks


def scan_box(max_abs: int, limit: int, workers: int = 1) -> tuple[ScanStats, list[SurveyRow]]:
    """Survey every space with a canonical form inside the box.

    Enumerates canonical free, positively curved parameter sets with all
    entries bounded by max_abs in absolute value, deduplicates them by
    normal form, window-scans each, and returns counts plus up to ``limit``
    counterexample rows sorted by |H^4| (ties broken lexicographically).
    """
    if max_abs < 1:
        raise ValueError(f"max_abs must be >= 1, got {max_abs}")
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    apairs = [(a1, a2) for a1 in range(max_abs + 1) for a2 in range(a1 + 1)]

    if workers <= 1:
        keys = _enumerate_chunk((apairs, max_abs))
        scanned = _scan_chunk(sorted(keys))
    else:
        enum_chunks = [(chunk, max_abs) for chunk in _chunked(apairs, 4 * workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            keys = set().union(*pool.map(_enumerate_chunk, enum_chunks))
            scanned = []
            for part in pool.map(_scan_chunk, _chunked(sorted(keys), 4 * workers)):
                scanned.extend(part)
        scanned.sort(key=lambda item: item[0])

    rows = []
    embeddable = 0
    for (a, b), c_lo, c_hi, verdicts in scanned:
        if any(verdicts):
            embeddable += 1
            continue
        e = EschParams(a, b)
        rows.append(
            SurveyRow(
                esch=e,
                window=range(c_lo, c_hi + 1),
                verdicts=verdicts,
                is_counterexample=True,
                h4=h4_order(e),
            )
        )
    stats = ScanStats(total=len(scanned), embeddable=embeddable, counterexamples=len(rows))
    rows.sort(key=lambda row: (row.h4, row.esch.a, row.esch.b))
    return stats, rows[:limit]
