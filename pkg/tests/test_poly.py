"""The exact polynomial engine: term order, minors, division, Buchberger and
saturation.  Expected values are either brute-forced in-test (permanent-style
determinant expansion, exhaustive comparisons) or hand-checked two-term
computations."""

import itertools
import random
from fractions import Fraction

import pytest

from msvkit.perm import PartialPermutation
from msvkit.detideal import fulton_generators
from msvkit.poly import (ELIMINATION,
                         IdealPresentation, PolyRing, antidiagonal_monomial,
                         buchberger, certified, compare, ideals_equal,
                         is_reduced_groebner_basis, leading_term, minor,
                         monomial_coprime, monomial_divides, monomial_lcm,
                         monomial_mul, monomial_quotient, normal_form,
                         s_polynomial, saturate, transplant)

RING = PolyRing(5, 5)


def mono(pairs):
    return RING.monomial(dict(pairs))


def rand_monomial(ring, rng, maxdeg=3):
    pairs = {}
    for _ in range(rng.randint(0, maxdeg)):
        pairs[(rng.randint(1, ring.rows), rng.randint(1, ring.cols))] = rng.randint(1, 2)
    return ring.monomial(pairs)


def rand_poly(ring, rng, nterms=4, maxdeg=3):
    terms = {}
    for _ in range(rng.randint(0, nterms)):
        terms[rand_monomial(ring, rng, maxdeg)] = rng.randint(-4, 4)
    return ring.polynomial(terms)


# ---------------------------------------------------------------------------
# Term order
# ---------------------------------------------------------------------------

def test_compare_antidiagonal_beats_diagonal():
    anti = mono({(1, 4): 1, (2, 3): 1})
    diag = mono({(1, 3): 1, (2, 4): 1})
    assert compare(anti, diag, RING.order) == 1
    assert compare(diag, anti, RING.order) == -1


def test_compare_reflexive_and_one_minimal():
    m = mono({(2, 2): 3})
    assert compare(m, m, RING.order) == 0
    one = RING.one_monomial()
    for pairs in ({(1, 1): 1}, {(5, 5): 2}, {(3, 4): 1, (4, 3): 1}):
        assert compare(one, mono(pairs), RING.order) == -1


def test_order_is_total_and_multiplicative():
    rng = random.Random(5)
    monomials = [rand_monomial(RING, rng) for _ in range(60)]
    for a, b in itertools.combinations(monomials, 2):
        c = compare(a, b)
        assert c in (-1, 0, 1)
        assert c == -compare(b, a)
        assert (c == 0) == (a == b)
    for _ in range(200):
        a, b, u = (rand_monomial(RING, rng) for _ in range(3))
        if compare(a, b) == 1:
            assert compare(monomial_mul(a, u), monomial_mul(b, u)) == 1


def test_monomial_helpers():
    a = mono({(1, 2): 2, (3, 3): 1})
    b = mono({(1, 2): 1})
    assert monomial_divides(b, a)
    assert not monomial_divides(a, b)
    assert monomial_quotient(a, b) == mono({(1, 2): 1, (3, 3): 1})
    assert monomial_lcm(a, b) == a
    assert monomial_coprime(b, mono({(3, 3): 2}))
    assert not monomial_coprime(a, b)


def test_elimination_order_puts_auxiliary_first():
    r = PolyRing(2, 2, aux="t")
    assert r.order == ELIMINATION
    t = r.monomial(aux_power=1)
    heavy = r.monomial({(1, 1): 5, (2, 2): 5})
    assert compare(t, heavy, r.order) == 1


# ---------------------------------------------------------------------------
# Minors
# ---------------------------------------------------------------------------

def test_minor_goldens():
    assert minor(RING, [1], [3]) == RING.variable(1, 3)
    m = minor(RING, [1, 2], [3, 4])
    assert m == RING.parse("x[1,3]*x[2,4] - x[1,4]*x[2,3]")
    assert str(m) == "-x[1,4]*x[2,3] + x[1,3]*x[2,4]"


def _det_by_permanent_expansion(ring, rows, cols):
    """Independent determinant: straight Leibniz sum in the test."""
    t = len(rows)
    total = ring.zero()
    for perm in itertools.permutations(range(t)):
        sign = 1
        for i in range(t):
            for j in range(i + 1, t):
                if perm[i] > perm[j]:
                    sign = -sign
        term = ring.const(sign)
        for k in range(t):
            term = term * ring.variable(rows[k], cols[perm[k]])
        total = total + term
    return total


def test_minor_matches_independent_expansion_all_sizes():
    rng = random.Random(3)
    sites = [((1, 2, 3, 4, 5), (1, 2, 3, 4, 5))]
    for _ in range(8):
        t = rng.randint(1, 4)
        rows = tuple(sorted(rng.sample(range(1, 6), t)))
        cols = tuple(sorted(rng.sample(range(1, 6), t)))
        sites.append((rows, cols))
    for rows, cols in sites:
        assert minor(RING, rows, cols) == _det_by_permanent_expansion(RING, rows, cols)


def test_minor_validation():
    for rows, cols in ([(1, 2), (3,)], [(2, 1), (1, 2)], [(1, 1), (1, 2)],
                       [(1, 6), (1, 2)]):
        with pytest.raises(ValueError):
            minor(RING, rows, cols)


def test_leading_term_goldens():
    c, m = leading_term(minor(RING, [1, 2], [3, 4]))
    assert (c, m) == (-1, mono({(1, 4): 1, (2, 3): 1}))
    assert leading_term(RING.variable(1, 1)) == (1, mono({(1, 1): 1}))
    _, m4 = leading_term(minor(RING, [1, 2, 3, 4], [1, 2, 3, 4]))
    assert m4 == mono({(1, 4): 1, (2, 3): 1, (3, 2): 1, (4, 1): 1})
    with pytest.raises(ValueError):
        leading_term(RING.zero())


def test_every_5x5_minor_leads_with_its_antidiagonal():
    for t in range(1, 6):
        for rows in itertools.combinations(range(1, 6), t):
            for cols in itertools.combinations(range(1, 6), t):
                assert minor(RING, rows, cols).leading_monomial() == \
                    antidiagonal_monomial(RING, rows, cols)


# ---------------------------------------------------------------------------
# Ring axioms (exact, both coefficient fields)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("char", [0, 32003])
def test_ring_axioms_randomized(char):
    ring = PolyRing(3, 3, char=char)
    rng = random.Random(char + 1)
    for _ in range(40):
        f, g, h = (rand_poly(ring, rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + ring.zero() == f
        assert f * ring.one() == f
        assert f - f == ring.zero()


def test_fraction_coefficients_are_exact():
    f = RING.polynomial({mono({(1, 1): 1}): Fraction(1, 3)})
    assert (f + f + f) == RING.variable(1, 1)


# ---------------------------------------------------------------------------
# Division
# ---------------------------------------------------------------------------

def test_normal_form_member_reduces_to_zero():
    gens = fulton_generators(PartialPermutation.from_one_line("35142")).generators
    assert normal_form(minor(PolyRing(5, 5), [1, 2], [3, 4]), gens).is_zero


def test_normal_form_division_identity():
    g = RING.parse("x[1,3]*x[2,4] - x[1,4]*x[2,3]")
    f = RING.variable(1, 1) * g + RING.variable(2, 2)
    assert normal_form(f, [g]) == RING.variable(2, 2)


def test_normal_form_prefers_smallest_leading_monomial_then_input_order():
    # equal leading monomials: ties break by input order
    g1 = RING.parse("x[1,2] - x[1,1]")
    g2 = RING.parse("x[1,2] - x[2,1]")
    assert normal_form(RING.variable(1, 2), [g1, g2]) == RING.variable(1, 1)
    assert normal_form(RING.variable(1, 2), [g2, g1]) == RING.variable(2, 1)
    # the reducer with the smaller leading monomial wins over input order
    a = RING.parse("x[1,2] - x[2,2]")
    b = RING.parse("x[1,1]*x[1,2] - x[3,3]")
    f = RING.variable(1, 1) * RING.variable(1, 2)
    assert normal_form(f, [b, a]) == RING.variable(1, 1) * RING.variable(2, 2)


def test_normal_form_remainder_is_in_the_coset():
    rng = random.Random(17)
    ring = PolyRing(2, 3)
    for _ in range(15):
        gens = [g for g in (rand_poly(ring, rng, 3, 2) for _ in range(2)) if g]
        if not gens:
            continue
        f = rand_poly(ring, rng, 3, 2)
        r = normal_form(f, gens)
        gb = buchberger(gens)
        assert normal_form(f - r, gb).is_zero
        for m, _ in r.terms():
            assert not any(monomial_divides(g.leading_monomial(), m) for g in gens)


def test_normal_form_rejects_zero_reducers():
    with pytest.raises(ValueError):
        normal_form(RING.one(), [RING.zero()])


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def test_buchberger_principal_monomial_ideal():
    assert buchberger([RING.variable(1, 1)]) == (RING.variable(1, 1),)


def test_buchberger_unit_ideal():
    r = PolyRing(2, 2)
    gb = buchberger([r.parse("x[1,1]*x[2,2] - 1"), r.parse("x[1,1]")])
    assert gb == (r.one(),)


def test_buchberger_fulton_35142_leads_are_antidiagonals():
    w = PartialPermutation.from_one_line("35142")
    schubert = fulton_generators(w)
    with certified():
        gb = buchberger(schubert.generators)
    assert is_reduced_groebner_basis(gb)
    leads = {g.leading_monomial() for g in gb}
    ring = schubert.ring
    assert leads == {
        ring.monomial({(1, 1): 1}), ring.monomial({(1, 2): 1}),
        ring.monomial({(2, 1): 1}), ring.monomial({(2, 2): 1}),
        ring.monomial({(1, 4): 1, (2, 3): 1}), ring.monomial({(3, 2): 1, (4, 1): 1}),
    }


def test_buchberger_is_independent_of_the_generating_set():
    w = PartialPermutation.from_one_line("35142")
    schubert = fulton_generators(w)
    assert buchberger(schubert.generators) == buchberger(schubert.raw_generators)


def test_buchberger_every_s_pair_reduces_to_zero():
    gens = fulton_generators(PartialPermutation.from_one_line("3142")).generators
    gb = buchberger(gens)
    for f, g in itertools.combinations(gb, 2):
        assert normal_form(s_polynomial(f, g), gb).is_zero
    for g in gens:
        assert normal_form(g, gb).is_zero


def test_buchberger_rejects_zero_generators():
    with pytest.raises(ValueError):
        buchberger([RING.zero()])


def test_order_argument_must_match_the_ring():
    with pytest.raises(ValueError):
        buchberger([RING.variable(1, 1)], order=ELIMINATION)
    with pytest.raises(ValueError):
        leading_term(RING.variable(1, 1), order=ELIMINATION)


def test_reduced_groebner_checker_detects_non_bases():
    bad = (RING.parse("x[1,2]^2 - x[1,1]*x[2,2]"), RING.variable(1, 2))
    with certified():
        gb = buchberger(bad)
    assert is_reduced_groebner_basis(gb)
    assert not is_reduced_groebner_basis(bad)


# ---------------------------------------------------------------------------
# Saturation
# ---------------------------------------------------------------------------

def test_saturate_principal_cases():
    r = PolyRing(2, 2)
    c = r.variable(1, 1)
    I = IdealPresentation(r, (c * r.variable(2, 2),))
    assert saturate(I, c).generators == (r.variable(2, 2),)
    J = IdealPresentation(r, (r.variable(1, 1),))
    assert saturate(J, r.variable(2, 2)).generators == (r.variable(1, 1),)


def test_saturate_strips_exactly_the_c_factors():
    r = PolyRing(2, 2)
    c = r.variable(1, 1)
    f = r.variable(2, 2)
    # I = <c * f * (1 + c f)>: saturating at c removes the c factor only
    I = IdealPresentation(r, (c * f + c * c * f * f,))
    sat = saturate(I, c)
    assert normal_form(f * (r.one() + c * f), sat.generators).is_zero
    assert not normal_form(f, sat.generators).is_zero


def test_saturate_idempotent_on_random_small_ideals():
    rng = random.Random(23)
    ring = PolyRing(2, 3)
    done = 0
    while done < 12:
        gens = tuple(g for g in (rand_poly(ring, rng, 3, 2) for _ in range(2)) if g)
        c = rand_poly(ring, rng, 2, 2)
        if not gens or c.is_zero:
            continue
        first = saturate(IdealPresentation(ring, gens), c)
        if not first.generators:
            done += 1
            continue
        second = saturate(first, c)
        assert ideals_equal(first, second)
        done += 1


def test_saturate_validation():
    with pytest.raises(ValueError):
        saturate(IdealPresentation(RING, (RING.one(),)), RING.zero())


# ---------------------------------------------------------------------------
# Rendering, parsing, transplanting
# ---------------------------------------------------------------------------

def test_render_parse_roundtrip_randomized():
    rng = random.Random(29)
    for char in (0, 32003):
        ring = PolyRing(3, 4, char=char)
        for _ in range(30):
            f = rand_poly(ring, rng)
            assert ring.parse(str(f)) == f


def test_parser_accepts_fractions_powers_and_any_term_order():
    f = RING.parse("3/2*x[1,1]^2 - 1/2 + x[2,2]*x[1,1]")
    assert f.coefficient(mono({(1, 1): 2})) == Fraction(3, 2)
    assert f.coefficient(RING.one_monomial()) == Fraction(-1, 2)
    assert RING.parse("x[1,3]*x[2,4] - x[1,4]*x[2,3]") == minor(RING, [1, 2], [3, 4])


def test_parser_rejects_garbage():
    for text in ("x[1,1] +", "y[1,1]", "x[1,1] & x[2,2]", "x[0]"):
        with pytest.raises(ValueError):
            RING.parse(text)


def test_zero_renders_as_zero():
    assert str(RING.zero()) == "0"
    assert RING.parse("0").is_zero


def test_transplant_between_grids_preserves_sparse_form():
    small = PolyRing(2, 3)
    f = minor(small, [1, 2], [1, 3]) + small.variable(2, 2)
    lifted = transplant(f, RING)
    assert lifted.sparse_terms() == f.sparse_terms()
    back = transplant(lifted, small)
    assert back == f


def test_transplant_with_relabelling():
    small = PolyRing(2, 2)
    cell_map = {(1, 1): (2, 2), (1, 2): (2, 4), (2, 1): (3, 2), (2, 2): (3, 4)}
    f = minor(small, [1, 2], [1, 2])
    moved = transplant(f, RING, cell_map)
    assert moved == minor(RING, [2, 3], [2, 4])


def test_ideal_presentation_validation():
    with pytest.raises(ValueError):
        IdealPresentation(RING, (RING.zero(),))
    other = PolyRing(2, 2)
    with pytest.raises(ValueError):
        IdealPresentation(RING, (other.variable(1, 1),))
