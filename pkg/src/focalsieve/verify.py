"""Property sweeps over all primes up to a bound.

Each named property checks one verifiable statement about the geometry for
a single prime and reports (cases checked, failure descriptions).  The
names are part of the CLI contract:

    thm3       line membership matches divisibility, both directions
    thm5       all pairwise family-line intersections equal the focal point
    cor6       every focal point lies on the multiplicative axis y = x/p
    cor7       lines sharing a have equal slopes for every shift k
    cor8       focal point for shift k is k times the shift-1 focal point
    thm11      extremes with q >= 2 are closed under coordinate swap
    thm12      extremes on or above the bisector have a <= isqrt(p)
    rem13      quotient points sit in the band p/a - 1 < q <= p/a
    prop15     closed-form max remainder equals the brute-force scan
    eq14       p // (p // (q+1) + 1) == q for every attained q
    eq15       p // (p // (q+1)) > q for every a in [2, p-1]
    rem16      remainders descend by exactly q over a contiguous a-interval
    roundtrip  unmap(map_to_plane(n)) == n over the whole domain

Sweeps run per prime, independently; FOCAL_SIEVE_THREADS (or the
``workers`` argument) caps a process pool, and the report is assembled in
sorted order regardless of completion order.  The default of one worker is
the deterministic reference path.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import remainders as rem_mod
from .extremes import extremes as all_extremes
from .extremes import floor_sqrt, quotient_points
from .focal import (
    family_lines,
    focal_line,
    focal_point,
    k_witness,
    lattice_hits,
    line_contains,
    multiplicative_axis,
    pairwise_intersection,
)
from .plane import map_to_plane, new_context, unmap
from .sieve import primes_classic

CheckOutcome = tuple[int, list[str]]


def _check_line_membership(p: int) -> CheckOutcome:
    """Both directions of the divisibility/membership equivalence.

    Forward: every lattice hit of every line (a, k) is a multiple of a in
    range, carries k as its witness shift, and its divmod point satisfies
    the line equation; per a, the hits over all k cover every multiple
    exactly once.  Exclusion: for every n not divisible by a, the embedded
    image of n solves no line of a for any integer shift in [1, p] (for
    multiples of p the image sits on the shifted second branch).
    """
    ctx = new_context(p)
    p_sq = ctx.p_squared
    checked = 0
    failures: list[str] = []
    for a in range(2, p):
        q, rem = divmod(p, a)
        seen = 0
        for k in range(1, p + 1):
            for n in lattice_hits(ctx, a, k):
                checked += 1
                seen += 1
                j = n // p
                ok = (
                    n % a == 0
                    and p < n < p_sq
                    and (n % p) - k * a == rem * (-j)
                    and k_witness(ctx, a, n) == k
                )
                if not ok:
                    failures.append(f"p={p} a={a} k={k}: bad hit n={n}")
        expected = (p_sq - 1) // a - p // a
        if seen != expected:
            failures.append(
                f"p={p} a={a}: lines hit {seen} multiples, expected {expected}"
            )
        for n in range(p + 1, p_sq):
            if n % a == 0:
                continue
            checked += 1
            j, x = divmod(n, p)
            if x != 0:
                numerator = x + rem * j
                if numerator % a == 0 and 1 <= numerator // a <= p:
                    failures.append(f"p={p} a={a}: non-multiple n={n} on a line")
            else:
                numerator = j * rem
                if numerator % a == 0 and 1 <= q + numerator // a <= p:
                    failures.append(f"p={p} a={a}: non-multiple n={n} on a line")
    return checked, failures


def _attained_with_counts(p: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for a in range(2, p):
        q = p // a
        counts[q] = counts.get(q, 0) + 1
    return counts


def _check_family_intersections(p: int) -> CheckOutcome:
    """All pairwise intersections within a family equal its focal point."""
    ctx = new_context(p)
    checked = 0
    failures: list[str] = []
    for q, reps in sorted(_attained_with_counts(p).items()):
        if reps < 2:
            continue
        for k in range(1, p + 1):
            lines = family_lines(ctx, q, k)
            expect = focal_point(ctx, q, k).coords
            for i in range(len(lines)):
                for j in range(i + 1, len(lines)):
                    checked += 1
                    got = pairwise_intersection(lines[i], lines[j])
                    if got != expect:
                        failures.append(
                            f"p={p} q={q} k={k}: lines a={lines[i].a},a={lines[j].a} "
                            f"meet at {got}, focal point is {expect}"
                        )
    return checked, failures


def _check_focal_points_on_axis(p: int) -> CheckOutcome:
    ctx = new_context(p)
    axis = multiplicative_axis(ctx)
    checked = 0
    failures: list[str] = []
    for q in sorted(_attained_with_counts(p)):
        for k in range(1, p + 1):
            checked += 1
            pt = focal_point(ctx, q, k).coords
            if not line_contains(axis, pt):
                failures.append(f"p={p} q={q} k={k}: focal point off the axis")
    return checked, failures


def _check_parallel_shifts(p: int) -> CheckOutcome:
    ctx = new_context(p)
    checked = 0
    failures: list[str] = []
    for a in range(2, p):
        slope = focal_line(ctx, a, 1).slope
        for k in range(2, p + 1):
            checked += 1
            if focal_line(ctx, a, k).slope != slope:
                failures.append(f"p={p} a={a} k={k}: slope changed with shift")
    return checked, failures


def _check_focal_point_scaling(p: int) -> CheckOutcome:
    ctx = new_context(p)
    checked = 0
    failures: list[str] = []
    for q in sorted(_attained_with_counts(p)):
        unit = focal_point(ctx, q, 1).coords
        for k in range(1, p + 1):
            checked += 1
            pt = focal_point(ctx, q, k).coords
            if pt.x != k * unit.x or pt.y != k * unit.y:
                failures.append(f"p={p} q={q} k={k}: focal point is not k * unit")
    return checked, failures


def _check_extreme_swap_closure(p: int) -> CheckOutcome:
    ctx = new_context(p)
    checked = 0
    failures: list[str] = []
    for e in all_extremes(ctx):
        checked += 1
        if e.q == 1:
            failures.append(f"p={p}: unexpected extreme with q=1 at a={e.a}")
            continue
        swapped_is_extreme = p // e.q == e.a and p // (e.q + 1) < e.a
        if not swapped_is_extreme:
            failures.append(f"p={p}: swap of extreme ({e.a},{e.q}) is not an extreme")
    return checked, failures


def _check_extreme_sqrt_bound(p: int) -> CheckOutcome:
    ctx = new_context(p)
    s = floor_sqrt(p)
    checked = 1
    failures: list[str] = []
    if not (s * s <= p < (s + 1) * (s + 1)):
        failures.append(f"p={p}: floor_sqrt returned {s}")
    for e in all_extremes(ctx):
        if e.q >= e.a:
            checked += 1
            if e.a > s:
                failures.append(f"p={p}: extreme ({e.a},{e.q}) above bisector with a > {s}")
    return checked, failures


def _check_quotient_band(p: int) -> CheckOutcome:
    ctx = new_context(p)
    checked = 0
    failures: list[str] = []
    for pt in quotient_points(ctx):
        checked += 1
        ratio = Fraction(p, pt.a)
        if not (ratio - 1 < pt.q <= ratio):
            failures.append(f"p={p}: point ({pt.a},{pt.q}) outside the band")
    return checked, failures


def _brute_force_max_remainders(p: int) -> dict[int, int]:
    """Exhaustive max rem(p/a) per quotient over a in [2, p-1]."""
    best: dict[int, int] = {}
    for a in range(2, p):
        q, r = divmod(p, a)
        if r > best.get(q, -1):
            best[q] = r
    return best


def _check_max_remainder_closed_form(p: int) -> CheckOutcome:
    ctx = new_context(p)
    brute = _brute_force_max_remainders(p)
    checked = 0
    failures: list[str] = []
    for q, expect in sorted(brute.items()):
        checked += 1
        got = rem_mod.max_remainder_for_quotient(ctx, q)
        if got != expect:
            failures.append(f"p={p} q={q}: closed form {got}, brute force {expect}")
    return checked, failures


def _check_min_floor_identity(p: int) -> CheckOutcome:
    ctx = new_context(p)
    checked = 0
    failures: list[str] = []
    for q in rem_mod.attained_quotients(ctx):
        checked += 1
        a_min = rem_mod.min_a_for_quotient(ctx, q)
        if a_min != p // (q + 1) + 1 or not rem_mod.min_floor_identity_holds(p, q):
            failures.append(f"p={p} q={q}: min-a identity failed (a_min={a_min})")
    return checked, failures


def _check_drop_below_min(p: int) -> CheckOutcome:
    checked = 0
    failures: list[str] = []
    for a in range(2, p):
        checked += 1
        if not rem_mod.drop_below_min_holds(p, a):
            failures.append(f"p={p} a={a}: quotient did not rise below a_min")
    return checked, failures


def _check_remainder_progressions(p: int) -> CheckOutcome:
    ctx = new_context(p)
    checked = 0
    failures: list[str] = []
    for q in rem_mod.attained_quotients(ctx):
        cls = rem_mod.quotient_class(ctx, q)
        members = {a for a in range(2, p) if p // a == q}
        checked += 1
        if members != set(range(cls.a_min, cls.a_max + 1)):
            failures.append(f"p={p} q={q}: class is not the contiguous interval")
        rems = [r for _, r in cls.remainders]
        if cls.max_rem != rems[0] or cls.max_rem != max(rems):
            failures.append(f"p={p} q={q}: max remainder mismatch")
        for (a1, r1), (a2, r2) in zip(cls.remainders, cls.remainders[1:]):
            checked += 1
            if a2 != a1 + 1 or r1 - r2 != q:
                failures.append(f"p={p} q={q}: step {r1}->{r2} at a={a2} is not q")
    return checked, failures


def _check_embedding_roundtrip(p: int) -> CheckOutcome:
    ctx = new_context(p)
    failures: list[str] = []
    for n in range(1, ctx.p_squared + 1):
        if unmap(ctx, map_to_plane(ctx, n)) != n:
            failures.append(f"p={p}: round trip failed at n={n}")
    return ctx.p_squared, failures


PROPERTIES = {
    "thm3": _check_line_membership,
    "thm5": _check_family_intersections,
    "cor6": _check_focal_points_on_axis,
    "cor7": _check_parallel_shifts,
    "cor8": _check_focal_point_scaling,
    "thm11": _check_extreme_swap_closure,
    "thm12": _check_extreme_sqrt_bound,
    "rem13": _check_quotient_band,
    "prop15": _check_max_remainder_closed_form,
    "eq14": _check_min_floor_identity,
    "eq15": _check_drop_below_min,
    "rem16": _check_remainder_progressions,
    "roundtrip": _check_embedding_roundtrip,
}


@dataclass(frozen=True)
class PropertyReport:
    name: str
    checked_cases: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class VerifyReport:
    p_range: tuple[int, int]
    properties: tuple[PropertyReport, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return all(not prop.failures for prop in self.properties)

    def to_json(self) -> dict:
        return {
            "pRange": list(self.p_range),
            "properties": [
                {
                    "name": prop.name,
                    "checkedCases": prop.checked_cases,
                    "failures": list(prop.failures),
                }
                for prop in self.properties
            ],
            "elapsed": self.elapsed,
        }


def sweep_workers() -> int:
    """Worker count from FOCAL_SIEVE_THREADS, at least 1."""
    raw = os.environ.get("FOCAL_SIEVE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_task(task: tuple[str, int]) -> tuple[str, int, CheckOutcome]:
    name, p = task
    return name, p, PROPERTIES[name](p)


def run_verification(
    p_max: int, names: list[str] | None = None, workers: int | None = None
) -> VerifyReport:
    """Run the named properties over every prime <= p_max.

    Results are aggregated per property in ascending-p order independent
    of scheduling.  Unknown property names raise ValueError.
    """
    if p_max < 2:
        raise ValueError(f"p_max must be >= 2, got {p_max}")
    if names is None:
        names = list(PROPERTIES)
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(unknown)}")
    if workers is None:
        workers = sweep_workers()

    primes = primes_classic(1, p_max + 1)
    tasks = [(name, p) for name in names for p in primes]
    start = time.perf_counter()
    if workers > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_task, tasks, chunksize=chunk))
    else:
        outcomes = [_run_task(t) for t in tasks]
    elapsed = time.perf_counter() - start

    reports = []
    for name in names:
        checked = 0
        failures: list[str] = []
        for task_name, _, (task_checked, task_failures) in outcomes:
            if task_name == name:
                checked += task_checked
                failures.extend(task_failures)
        reports.append(
            PropertyReport(name=name, checked_cases=checked, failures=tuple(failures))
        )
    return VerifyReport(p_range=(2, p_max), properties=tuple(reports), elapsed=elapsed)
