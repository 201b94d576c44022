import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from focalsieve.plane import map_to_plane, new_context
from focalsieve.render import (
    RenderOptions,
    make_window,
    render_detail,
    render_quotient_distribution,
    render_quotient_remainder,
    render_sieve,
)

SVG_NS = "{http://www.w3.org/2000/svg}"


def parse(doc: str) -> ET.Element:
    root = ET.fromstring(doc)
    assert root.tag == f"{SVG_NS}svg"
    return root


def circles(root: ET.Element) -> list[ET.Element]:
    return root.findall(f"{SVG_NS}circle")


def labels(root: ET.Element) -> list[str]:
    return [el.text for el in root.findall(f"{SVG_NS}text")]


def test_sieve_figure_point_count_and_dimensions():
    doc = render_sieve(new_context(3), RenderOptions(width_px=400, height_px=300))
    root = parse(doc)
    assert root.get("width") == "400" and root.get("height") == "300"
    assert len(circles(root)) == 9


def test_sieve_figure_highlights_primes():
    ctx = new_context(3)
    doc = render_sieve(ctx, RenderOptions())
    root = parse(doc)
    by_fill = {}
    for c in circles(root):
        by_fill.setdefault(c.get("fill"), 0)
        by_fill[c.get("fill")] += 1
    # primes 5 and 7 in the uncrossed color, the other seven integers gray
    assert by_fill == {"black": 2, "gray": 7}


def test_sieve_figure_is_deterministic():
    ctx = new_context(11)
    opts = RenderOptions()
    assert render_sieve(ctx, opts) == render_sieve(ctx, opts)


def test_degenerate_options_are_rejected():
    ctx = new_context(11)
    with pytest.raises(ValueError):
        render_sieve(ctx, RenderOptions(width_px=0))
    with pytest.raises(ValueError):
        render_sieve(ctx, RenderOptions(height_px=63))
    with pytest.raises(ValueError):
        render_sieve(ctx, RenderOptions(stroke_width=0))
    with pytest.raises(ValueError):
        render_sieve(ctx, RenderOptions(max_lines_per_family=-1))


def test_detail_full_window_matches_sieve_point_set():
    ctx = new_context(11)
    opts = RenderOptions()
    detail_root = parse(render_detail(ctx, None, opts))
    sieve_root = parse(render_sieve(ctx, opts))
    assert len(circles(detail_root)) == len(circles(sieve_root)) == 121
    assert sorted(labels(detail_root)) == sorted(str(n) for n in range(1, 122))


def test_detail_clips_to_window():
    ctx = new_context(101)
    window = make_window(0, 102, -5, 0)
    root = parse(render_detail(ctx, window, RenderOptions()))
    expected = {
        n
        for n in range(1, 10202)
        if (lambda pt: 0 <= pt.x <= 102 and -5 <= pt.y <= 0)(map_to_plane(ctx, n))
    }
    assert {int(s) for s in labels(root)} == expected
    assert len(circles(root)) == len(expected)


def test_detail_rejects_bad_windows():
    ctx = new_context(11)
    with pytest.raises(ValueError):
        make_window(0, 0, -5, 0)  # zero area
    with pytest.raises(ValueError):
        render_detail(ctx, make_window(200, 300, -5, 0), RenderOptions())  # off-plot


def test_quotient_distribution_counts():
    doc = render_quotient_distribution(new_context(11), RenderOptions())
    root = parse(doc)
    pts = circles(root)
    assert len(pts) == 9
    assert sum(1 for c in pts if c.get("fill") == "green") == 3

    root = parse(render_quotient_distribution(new_context(13), RenderOptions()))
    pts = circles(root)
    assert len(pts) == 11
    assert sum(1 for c in pts if c.get("fill") == "green") == 4


def test_quotient_distribution_has_curves_and_bisector():
    doc = render_quotient_distribution(new_context(11), RenderOptions())
    root = parse(doc)
    assert len(root.findall(f"{SVG_NS}polyline")) == 2
    strokes = {el.get("stroke") for el in root.findall(f"{SVG_NS}line")}
    assert {"red", "orange"} <= strokes


def test_quotient_remainder_counts():
    for p, expected in ((101, 99), (11, 9), (5, 3)):
        root = parse(render_quotient_remainder(new_context(p), RenderOptions()))
        pts = circles(root)
        assert len(pts) == expected
        positions = {(c.get("cx"), c.get("cy")) for c in pts}
        assert len(positions) == expected  # all distinct


def test_palette_override():
    ctx = new_context(3)
    doc = render_sieve(ctx, RenderOptions(palette={"uncrossed": "magenta"}))
    root = parse(doc)
    fills = {c.get("fill") for c in circles(root)}
    assert fills == {"magenta", "gray"}


def test_coordinates_have_at_most_nine_significant_digits():
    doc = render_quotient_distribution(new_context(11), RenderOptions())
    for token in doc.split('"'):
        if token.replace(".", "").replace("-", "").isdigit() and "." in token:
            digits = token.replace(".", "").replace("-", "").lstrip("0")
            assert len(digits) <= 9


def test_window_validation():
    with pytest.raises(ValueError):
        make_window(0, 10, 5, 5)
    w = make_window(Fraction(1, 2), 2, -1, 0)
    assert w.x_min == Fraction(1, 2)
