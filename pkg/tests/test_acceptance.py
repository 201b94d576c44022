"""Acceptance gate for the package.

Each test prints one ``[criterion N] name: PASS/FAIL (elapsed)`` line (run
pytest with ``-s`` to see them for passing tests).  All comparisons are
exact; the only tolerances are wall-clock budgets.
"""

import time
import xml.etree.ElementTree as ET

from conftest import primes_upto
from focalsieve.cli import main as cli_main
from focalsieve.focal import focal_line, k_witness, lattice_hits, line_contains, zeroth_line
from focalsieve.plane import map_to_plane, new_context, point
from focalsieve.sieve import primes_classic, primes_geometric
from focalsieve.verify import run_verification

SVG_NS = "{http://www.w3.org/2000/svg}"


def _conclude(num, name, failures, elapsed, budget=None):
    status = "PASS" if not failures else f"FAIL ({len(failures)} failures)"
    print(f"[criterion {num}] {name}: {status} ({elapsed:.1f}s)")
    assert not failures, failures[:10]
    if budget is not None:
        assert elapsed < budget, f"{name} took {elapsed:.1f}s, budget {budget}s"


def test_criterion_1_sieve_equivalence():
    start = time.perf_counter()
    failures = []
    for p in primes_upto(101):
        ctx = new_context(p)
        if primes_geometric(ctx) != primes_classic(p, p * p):
            failures.append(f"p={p}: geometric and classic sieves disagree")
    _conclude(1, "sieve equivalence, primes <= 101", failures,
              time.perf_counter() - start, budget=30)


def test_criterion_2_line_membership_both_directions():
    start = time.perf_counter()
    failures = []
    for p in (5, 7, 11, 13, 17, 19, 23):
        ctx = new_context(p)
        images = {n: map_to_plane(ctx, n) for n in range(p + 1, p * p)}
        vertical = zeroth_line(ctx)
        for a in range(2, p):
            multiples = set(range(a * (p // a + 1), p * p, a))
            lines = {k: focal_line(ctx, a, k) for k in range(1, p + 1)}

            hit_union = set()
            for k, line in lines.items():
                for n in lattice_hits(ctx, a, k):
                    hit_union.add(n)
                    if n % a != 0:
                        failures.append(f"p={p} a={a} k={k}: hit {n} not a multiple")
            if hit_union != multiples:
                failures.append(f"p={p} a={a}: lattice hits != multiples")

            for n in multiples:
                k = k_witness(ctx, a, n)
                if not 1 <= k <= p:
                    failures.append(f"p={p} a={a} n={n}: witness {k} out of range")
                raw = point(n % p, -(n // p))
                if not line_contains(lines[k], raw):
                    failures.append(f"p={p} a={a} n={n}: not on its line")
                if n % p == 0 and not line_contains(vertical, images[n]):
                    failures.append(f"p={p} n={n}: multiple of p off the vertical")

            for n, pt in images.items():
                if n in multiples:
                    continue
                for line in lines.values():
                    if line_contains(line, pt):
                        failures.append(
                            f"p={p} a={a} n={n}: non-multiple on line k={line.k}"
                        )
    _conclude(2, "line membership <=> divisibility, p in {5..23}", failures,
              time.perf_counter() - start, budget=60)


def test_criterion_3_family_intersections_and_corollaries():
    start = time.perf_counter()
    report = run_verification(101, ["thm5", "cor6", "cor7", "cor8"], workers=1)
    failures = [f for prop in report.properties for f in prop.failures]
    _conclude(3, "family intersections + axis + parallels + scaling, primes <= 101",
              failures, time.perf_counter() - start)


def test_criterion_4_extreme_swap_closure():
    start = time.perf_counter()
    report = run_verification(10_000, ["thm11"], workers=1)
    failures = [f for prop in report.properties for f in prop.failures]
    _conclude(4, "extreme swap closure, primes <= 10^4", failures,
              time.perf_counter() - start, budget=60)


def test_criterion_5_extreme_sqrt_bound():
    start = time.perf_counter()
    report = run_verification(10_000, ["thm12"], workers=1)
    failures = [f for prop in report.properties for f in prop.failures]
    _conclude(5, "sqrt bound on extremes, primes <= 10^4", failures,
              time.perf_counter() - start)


def test_criterion_6_max_remainder_closed_form():
    start = time.perf_counter()
    report = run_verification(10_000, ["prop15", "eq14", "eq15"], workers=1)
    failures = [f for prop in report.properties for f in prop.failures]
    _conclude(6, "max-remainder closed form + floor identities, primes <= 10^4",
              failures, time.perf_counter() - start, budget=300)


def test_criterion_7_remainder_progressions():
    start = time.perf_counter()
    report = run_verification(10_000, ["rem16"], workers=1)
    failures = [f for prop in report.properties for f in prop.failures]
    _conclude(7, "remainder progressions, primes <= 10^4", failures,
              time.perf_counter() - start)


def test_criterion_8_embedding_roundtrip():
    start = time.perf_counter()
    report = run_verification(101, ["roundtrip"], workers=1)
    failures = [f for prop in report.properties for f in prop.failures]
    _conclude(8, "unmap o map identity, primes <= 101", failures,
              time.perf_counter() - start)


def test_criterion_9_figures(tmp_path):
    start = time.perf_counter()
    failures = []

    ctx101 = new_context(101)
    detail_expected = sum(
        1
        for n in range(1, 10202)
        if (pt := map_to_plane(ctx101, n)) and 0 <= pt.x <= 102 and -5 <= pt.y <= 0
    )
    jobs = [
        (["--p", "101", "--which", "sieve"], 10201),
        (["--p", "101", "--which", "detail", "--window", "0,102,-5,0"], detail_expected),
        (["--p", "11", "--which", "quotients"], 9),
        (["--p", "101", "--which", "qr"], 99),
    ]
    for i, (flags, expected) in enumerate(jobs):
        docs = []
        for run in range(2):
            out = tmp_path / f"fig{i}_run{run}.svg"
            code = cli_main(["figure", *flags, "--out", str(out)])
            if code != 0:
                failures.append(f"figure {flags}: exit code {code}")
                continue
            docs.append(out.read_bytes())
        if len(docs) == 2 and docs[0] != docs[1]:
            failures.append(f"figure {flags}: output not byte-identical across runs")
        if docs:
            root = ET.fromstring(docs[0].decode("utf-8"))
            if root.tag != f"{SVG_NS}svg":
                failures.append(f"figure {flags}: root element is {root.tag}")
            count = len(root.findall(f"{SVG_NS}circle"))
            if count != expected:
                failures.append(f"figure {flags}: {count} points, expected {expected}")
    _conclude(9, "four figures: well-formed, exact counts, deterministic", failures,
              time.perf_counter() - start, budget=10)
