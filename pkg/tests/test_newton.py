from fractions import Fraction

import pytest
from hypothesis import given, settings

from apoly import newton
from apoly.newton import (
    VERTICAL,
    convex_hull,
    edge_slopes,
    has_vertical_edge,
    newton_polygon,
    render_svg,
    support,
)
from apoly.poly import BivarPoly, parse_poly

from conftest import bivar_polys

TREFOIL = parse_poly("L^2*M^6 - L*M^6 + L - 1")


def brute_force_vertical(points):
    """Column-extremum oracle: a vertical hull edge exists iff the support
    spans more than one j value at i_min or at i_max."""
    imin = min(i for i, _ in points)
    imax = max(i for i, _ in points)
    left = {j for i, j in points if i == imin}
    right = {j for i, j in points if i == imax}
    return len(left) > 1 or len(right) > 1


class TestSupport:
    def test_unknot(self):
        assert support(parse_poly("L - 1")) == {(0, 0), (0, 1)}

    def test_trefoil_factor(self):
        assert support(parse_poly("L*M^6 + 1")) == {(0, 0), (6, 1)}

    def test_product_expansion(self):
        assert support(TREFOIL) == {(0, 0), (0, 1), (6, 1), (6, 2)}

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            support(BivarPoly.zero())


class TestConvexHull:
    def test_interior_and_collinear_points_dropped(self):
        poly = convex_hull({(0, 0), (1, 1), (2, 0), (1, 0)})
        assert poly.vertices == ((0, 0), (2, 0), (1, 1))
        assert not poly.degenerate

    def test_single_point(self):
        poly = convex_hull({(3, 4)})
        assert poly.vertices == ((3, 4),)
        assert poly.degenerate

    def test_trefoil_quadrilateral(self):
        poly = convex_hull({(0, 0), (0, 1), (6, 1), (6, 2)})
        assert set(poly.vertices) == {(0, 0), (0, 1), (6, 1), (6, 2)}
        assert len(poly.vertices) == 4

    def test_collinear_segment(self):
        poly = convex_hull({(0, 0), (1, 1), (2, 2)})
        assert poly.degenerate
        assert poly.vertices == ((0, 0), (2, 2))

    @given(bivar_polys(allow_zero=False, max_terms=10))
    @settings(max_examples=100, deadline=None)
    def test_idempotent_and_containment(self, p):
        poly = newton_polygon(p)
        again = convex_hull(set(poly.vertices))
        assert set(again.vertices) == set(poly.vertices)
        # every support point satisfies the hull's half-plane inequalities
        vs = poly.vertices
        if len(vs) >= 3:
            for pt in poly.support:
                for k in range(len(vs)):
                    a, b = vs[k], vs[(k + 1) % len(vs)]
                    assert newton._cross(a, b, pt) >= 0


class TestEdgeSlopes:
    def test_square(self):
        poly = convex_hull({(0, 0), (2, 0), (2, 2), (0, 2)})
        slopes = edge_slopes(poly)
        assert sorted(map(str, slopes)) == sorted(["0", VERTICAL, "0", VERTICAL])

    def test_triangle(self):
        poly = convex_hull({(0, 0), (2, 1), (4, 0)})
        assert sorted(map(str, edge_slopes(poly))) == sorted(["1/2", "-1/2", "0"])

    def test_vertical_segment(self):
        poly = convex_hull({(0, 0), (0, 1)})
        assert edge_slopes(poly) == [VERTICAL]

    def test_single_point_rejected(self):
        with pytest.raises(ValueError):
            edge_slopes(convex_hull({(1, 1)}))

    def test_lowest_terms(self):
        poly = convex_hull({(0, 0), (4, 2), (4, 0)})
        assert Fraction(1, 2) in edge_slopes(poly)


class TestVerticalEdge:
    def test_trefoil(self):
        assert has_vertical_edge(newton_polygon(TREFOIL))

    def test_triangle_without(self):
        assert not has_vertical_edge(convex_hull({(0, 0), (2, 1), (4, 0)}))

    def test_single_point_rejected(self):
        with pytest.raises(ValueError):
            has_vertical_edge(convex_hull({(0, 0)}))

    def test_brute_force_oracle(self, rng):
        for _ in range(300):
            pts = {
                (rng.randint(0, 8), rng.randint(0, 8))
                for _ in range(rng.randint(2, 20))
            }
            if len(pts) < 2:
                continue
            poly = convex_hull(pts)
            assert has_vertical_edge(poly) == brute_force_vertical(pts)


class TestSvg:
    def test_single_point(self):
        svg = render_svg(convex_hull({(1, 1)}))
        assert "<circle" in svg and "<path" not in svg

    def test_trefoil_outline(self):
        svg = render_svg(newton_polygon(TREFOIL), title="trefoil")
        assert svg.count('class="hull"') == 1
        assert svg.count('class="vertical"') == 2  # vertical edges at i=0 and i=6
        assert "<title>trefoil</title>" in svg

    def test_empty_title_omitted(self):
        svg = render_svg(newton_polygon(TREFOIL))
        assert "<title>" not in svg

    def test_deterministic(self):
        poly = newton_polygon(TREFOIL)
        assert render_svg(poly, "x") == render_svg(poly, "x")
