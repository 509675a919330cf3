import pytest

from twistskein import jones as J
from twistskein import laurent as L
from twistskein.jones import PlanarDiagram
from twistskein.laurent import A, ONE, ZERO, a_pow

TREFOIL_LEFT_N2 = A ** 4 + A ** 12 - A ** 16
FIGURE_EIGHT_N2 = A ** -8 - A ** -4 + 1 - A ** 4 + A ** 8


def test_bracket_of_trivial_diagrams():
    assert J.kauffman_oracle(PlanarDiagram((), ())) == ONE
    unknot = J.load_fixture("unknot")
    assert J.kauffman_oracle(unknot) == -a_pow(1) - a_pow(-1)
    assert J.normalized_bracket_invariant(unknot) == ONE


def test_fixtures():
    tre = J.load_fixture("trefoil_left")
    fig = J.load_fixture("figure_eight")
    tre.validate()
    fig.validate()
    assert (tre.writhe, fig.writhe) == (-3, 0)
    assert J.normalized_bracket_invariant(tre) == TREFOIL_LEFT_N2 == J.colored_jones(1, 2).value
    assert J.normalized_bracket_invariant(fig) == FIGURE_EIGHT_N2 == J.colored_jones(-1, 2).value


def test_figure_eight_bracket_raw():
    fig = J.load_fixture("figure_eight")
    assert J.kauffman_oracle(fig) == -A ** -10 - A ** 10


def test_mirror():
    tre = J.load_fixture("trefoil_left")
    m = tre.mirror()
    m.validate()
    assert m.writhe == 3
    assert J.normalized_bracket_invariant(m) == TREFOIL_LEFT_N2.bar()


@pytest.mark.parametrize("p", [-3, -2, -1, 1, 2, 3])
def test_twist_knot_diagrams(p):
    d = J.twist_knot_diagram(p)
    d.validate()
    assert len(d) == 2 * abs(p) + 2
    assert d.components() == 1
    assert J.normalized_bracket_invariant(d) == J.colored_jones(p, 2).value


def test_twist_knot_zero_and_range():
    assert J.normalized_bracket_invariant(J.twist_knot_diagram(0)) == ONE
    with pytest.raises(ValueError):
        J.twist_knot_diagram(11)


@pytest.mark.parametrize("bad", [
    {"crossings": [[1, 2, 3, 4]], "signs": [1]},
    {"crossings": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], "signs": [1, -1, -1]},
    {"crossings": [[1, 4, 2, 5], [3, 6, 4, 1]], "signs": [-1, -1]},
])
def test_malformed(bad):
    with pytest.raises(J.MalformedDiagram):
        PlanarDiagram.from_json(bad).validate()


def test_too_many_crossings():
    d = J.twist_knot_diagram(10)
    assert len(d) == 22
    big = J.plat_diagram(6, [(1, 6), (2, 3), (4, 5)], [(1, 1)] * 24 + [(3, 1), (5, 1)],
                         [(1, 6), (2, 3), (4, 5)])
    with pytest.raises(J.TooManyCrossings):
        J.kauffman_oracle(big)


def test_pd_json_round_trip():
    d = J.load_fixture("figure_eight")
    assert PlanarDiagram.from_json(d.to_json()) == d
    u = J.load_fixture("unknot")
    assert PlanarDiagram.from_json(u.to_json()) == u


def test_f_coefficients():
    for n in range(13):
        assert J.f_coeff(-1, n) == ONE
        assert J.f_coeff(1, n) == a_pow(n * (n + 3)) * (-1 if n % 2 else 1)
    for p in range(-3, 4):
        assert J.f_coeff(p, 0) == ONE


@pytest.mark.parametrize("N", range(1, 9))
def test_figure_eight_unit_coefficients(N):
    # independent oracle: sum of brace windows, divided by {N} at the end
    total = ZERO
    for n in range(N):
        total = total + L.prod(L.qbrace(j) for j in range(N - n, N + n + 1))
    assert J.colored_jones(-1, N).value == total.exact_div(L.qbrace(N))


def test_colored_jones_basics():
    for p in range(-3, 4):
        assert J.colored_jones(p, 1).value == ONE
        for N in range(1, 7):
            v = J.colored_jones(p, N).value
            assert v.eval(1) == 1
            assert J.colored_jones_qform(p, N) == v
    with pytest.raises(J.BadColor):
        J.colored_jones(1, 0)


def test_qform_coefficients():
    for n in range(8):
        assert J.qform_coeff(-1, n) == a_pow(-n * (n + 1)) * (-1 if n % 2 else 1)
        assert J.qform_coeff(1, n) == a_pow(2 * n)


def test_invariant_json():
    inv = J.colored_jones(2, 3)
    obj = inv.to_json()
    assert (obj["p"], obj["N"]) == (2, 3)
    assert L.LaurentPoly.from_json(obj["value"]) == inv.value
    assert len(obj["f"]) == 3
