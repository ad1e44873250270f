import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings

from enhanced_alexander.diagram import mirror
from enhanced_alexander.fixtures import fixture
from enhanced_alexander.laurent import ONE, ONE_MINUS_T, LaurentPoly
from enhanced_alexander.modalg import (
    MembershipCertificate,
    NotFound,
    PresentedModule,
    compare_enhanced,
    invariant_report,
    longitude_signature,
)
from enhanced_alexander.peripheral import longitude
from enhanced_alexander.presentation import FreeElement, presentation_matrix, relator

from conftest import random_diagrams

t = sympy.Symbol("t")


def sympy_matrix(d):
    return sympy.Matrix([[sum(c * t**k for k, c in e.terms().items()) for e in row] for row in presentation_matrix(d)])


def minor_gcd(d, size):
    """Oracle: gcd over Z[t] of all size x size minors, cleared of powers of t."""
    m = sympy_matrix(d)
    g = sympy.Integer(0)
    for rs in combinations(range(m.rows), size):
        for cs in combinations(range(m.cols), size):
            det = sympy.factor(m.extract(list(rs), list(cs)).det())
            g = sympy.gcd(g, sympy.numer(sympy.together(det)))
    if g == 0:
        return LaurentPoly()
    poly = sympy.Poly(sympy.expand(g), t)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    return LaurentPoly(coeffs).unit_normalize()


def test_trefoil_alexander_polynomial_matches_minor_oracle():
    d = fixture("trefoil")
    oracle = minor_gcd(d, 2)
    assert oracle == LaurentPoly([1, -1, 1])
    assert PresentedModule(d).alexander_polynomial == oracle


def test_hopf_first_nonzero_ideal_matches_minor_oracle():
    d = fixture("hopf")
    assert minor_gcd(d, 2) == LaurentPoly()
    assert PresentedModule(d).alexander_polynomial == minor_gcd(d, 1)


@settings(max_examples=25, deadline=None)
@given(random_diagrams(max_crossings=5, max_components=2))
def test_alexander_polynomial_matches_minor_oracle(d):
    m = PresentedModule(d)
    free, _ = m.rational_factors
    rank = d.n_arcs - free
    if rank == 0:
        return
    assert m.alexander_polynomial == minor_gcd(d, rank)


@pytest.mark.parametrize("name", ["hopf", "virtual_hopf"])
def test_hopf_decomposition(name):
    free, tors = PresentedModule(fixture(name)).rational_factors
    assert free == 1
    assert [f.to_primitive_laurent() for f in tors] == [ONE_MINUS_T.unit_normalize()]


@pytest.mark.parametrize("name", ["borromean", "borromean_prime"])
def test_borromean_decomposition(name):
    free, tors = PresentedModule(fixture(name)).rational_factors
    sq = (ONE_MINUS_T * ONE_MINUS_T).unit_normalize()
    assert free == 1
    assert [f.to_primitive_laurent() for f in tors] == [sq, sq]


def test_unknot_module_is_free_of_rank_one():
    m = PresentedModule(fixture("unknot"))
    assert m.rational_factors == (1, ())
    assert m.alexander_polynomial == ONE


def test_hopf_elementary_ideals():
    gcds = PresentedModule(fixture("hopf")).elementary_ideal_gcds
    assert [str(g.to_primitive_laurent()) if g else "0" for g in gcds] == ["0", "1 - t", "1"]


def test_specializations_against_sympy_smith():
    from sympy.matrices.normalforms import smith_normal_form

    for name, expected in [("hopf", ((2,), 1)), ("borromean", ((4, 4), 1)), ("trefoil", ((3,), 1))]:
        d = fixture(name)
        assert PresentedModule(d).specialize_integer(-1) == expected
        snf = smith_normal_form(sympy_matrix(d).subs(t, -1), domain=sympy.ZZ)
        diag = [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]
        assert tuple(x for x in diag if x > 1) == expected[0]
        assert d.n_arcs - len(diag) == expected[1]


def test_mod_p_dimension_against_sympy():
    from sympy.polys.matrices import DomainMatrix

    d = fixture("trefoil")
    m = PresentedModule(d)
    for p in (3, 5, 7):
        for a in range(2, p):
            # relator entries are polynomials in t, so substitution stays integral
            mat = sympy_matrix(d).subs(t, a)
            rank = DomainMatrix.from_Matrix(mat).convert_to(sympy.GF(p)).rank()
            assert m.specialize_mod_p(p, a) == d.n_arcs - rank


def test_membership_of_relator_combination():
    d = fixture("borromean")
    target = relator(d, 0).scale(LaurentPoly([1, 2], -2)) - relator(d, 4).scale(3)
    cert = PresentedModule(d).membership(target)
    assert isinstance(cert, MembershipCertificate)
    assert cert.verify(d, target)


def test_membership_not_found_for_free_generator():
    d = fixture("unknot")
    assert PresentedModule(d).membership(FreeElement({0: 1}), 3) == NotFound(3)


def test_element_equal_fast_path():
    d = fixture("hopf")
    x = FreeElement({0: 2})
    assert PresentedModule(d).element_equal(x, x) == MembershipCertificate({}, 0)


def test_borromean_signatures():
    s = longitude_signature(PresentedModule(fixture("borromean")), 1)
    sp = longitude_signature(PresentedModule(fixture("borromean_prime")), 1)
    assert (s.status, s.signature.lambda_part, s.signature.z_parts) == ("some", LaurentPoly(), (-1, 1))
    assert (sp.status, sp.signature.lambda_part, sp.signature.z_parts) == ("some", LaurentPoly(), (1, -1))


def test_signature_division_certificate_checks_out():
    d = fixture("borromean")
    s = longitude_signature(PresentedModule(d), 1)
    assert s.certificate.verify(d, s.quotient.scale(ONE_MINUS_T) - longitude(d, 1).lift)


@pytest.mark.parametrize("name", ["borromean", "borromean_prime", "trefoil"])
def test_signature_independent_of_solver_order(name):
    d = fixture(name)
    m = PresentedModule(d)
    n = len(m.reduced.rows) + len(m.reduced.columns)
    rng = random.Random(7)
    base = longitude_signature(m, 1)
    for _ in range(5):
        order = list(range(n))
        rng.shuffle(order)
        assert longitude_signature(m, 1, order=order) == base


def test_hopf_longitudes_not_divisible():
    m = PresentedModule(fixture("hopf"))
    assert longitude_signature(m, 1).status == "not_divisible"


@settings(max_examples=30, deadline=None)
@given(random_diagrams(max_crossings=10, max_components=1))
def test_knot_signatures_are_zero(d):
    s = longitude_signature(PresentedModule(d), 1)
    assert s.status == "some" and s.signature.lambda_part == LaurentPoly() and s.signature.z_parts == ()


def test_compare_witnesses():
    assert compare_enhanced(fixture("borromean"), fixture("borromean_prime")).witness == "longitude signature component 1"
    assert compare_enhanced(fixture("hopf"), fixture("virtual_hopf")).witness == "linking matrix"
    assert compare_enhanced(fixture("hopf"), fixture("trefoil")).witness == "mu"
    rep = compare_enhanced(fixture("trefoil"), fixture("trefoil"))
    assert not rep.distinguished
    assert rep.describe() == "not distinguished by implemented invariants"


def test_mirror_trefoil_not_distinguished():
    d = fixture("trefoil")
    assert not compare_enhanced(d, mirror(d)).distinguished


def test_report_json_is_deterministic():
    a = invariant_report(PresentedModule(fixture("borromean"))).to_json()
    b = invariant_report(PresentedModule(fixture("borromean"))).to_json()
    assert a == b and list(a) == list(b)
