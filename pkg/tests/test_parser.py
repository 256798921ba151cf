from fractions import Fraction as F

import pytest

from pdmkeo.errors import ConstraintViolation, ParseError, WeightSumViolation, WrongMomentumCount
from pdmkeo.ordering import canonicalize, catalog, linear_params
from pdmkeo.parser import parse, print_canonical

TABLE_NAMES = (
    "BDD", "GW", "ZK", "MM", "W", "LK", "Lal", "YY",
    "vR(-1/4,-1/2)", "MB(-1/3)", "LKDA(-1/3)", "DA(-1/2)", "DA(1)",
)


def test_parse_bdd():
    s = parse("1/2 * p m^(-1) p")
    assert [(t.w, t.alpha, t.beta, t.gamma) for t in s.terms] == [(1, 0, -1, 0)]


def test_parse_gw():
    s = parse("1/4 * 1/m p^2 + 1/4 * p^2 1/m")
    assert linear_params(s).as_tuple() == (F(-1, 2), 0, 0)
    assert [t.w for t in s.terms] == [F(1, 2), F(1, 2)]


def test_parse_zk_sugar():
    s = parse("1/2 * 1/sqrt(m) p^2 1/sqrt(m)")
    assert [(t.alpha, t.beta, t.gamma) for t in s.terms] == [(F(-1, 2), 0, F(-1, 2))]


def test_parse_merges_adjacent_mass_powers():
    s = parse("1/2 * m^(-1/2) m^(-1/2) p p m^(0)")
    assert [(t.alpha, t.beta, t.gamma) for t in s.terms] == [(-1, 0, 0)]


def test_parse_momentum_count_errors():
    with pytest.raises(WrongMomentumCount) as exc:
        parse("1/2 * p m^(-1)")
    assert exc.value.term_index == 0
    with pytest.raises(WrongMomentumCount) as exc:
        parse("1/2 * p m^(-1) p + 1/2 * p p p m^(-1)")
    assert exc.value.term_index == 1


def test_parse_weight_sum_enforced():
    with pytest.raises(WeightSumViolation):
        parse("1/4 * p m^(-1) p")


def test_parse_per_term_constraint_enforced():
    with pytest.raises(ConstraintViolation):
        parse("1/2 * p m^(-2) p")


def test_parse_implicit_unit_coefficient():
    with pytest.raises(WeightSumViolation):
        # no coefficient means 1, so the weight is 2
        parse("p m^(-1) p")


MALFORMED = (
    "",
    "1/2 *",
    "1/2 * p m^(-1 p",
    "1/2 * p m^-1) p",
    "1/2 p m^(-1) p",
    "* p m^(-1) p",
    "1/2 * p q p",
    "1/2 * p m^() p",
    "1/2 * p m^(1/0) p",
    "1/2 * p m^(-1) p +",
    "1/2 * p m^(-1) p + * p",
    "1/2 ** p m^(-1) p",
    "-- 1/2 * p m^(-1) p",
    "1//2 * p m^(-1) p",
    "1/2 * P M^(-1) P",
    "1/2 * p 1/sqrt(x) p",
    "1/2 * p m^(-1) p 3",
    "1/2 3 * p p",
    "(1/2) * p m^(-1) p",
    "1/2 * p m p",
)


@pytest.mark.parametrize("text", MALFORMED)
def test_malformed_inputs_have_positions(text):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert 0 <= exc.value.position <= len(text)


def test_print_canonical_bdd():
    assert print_canonical(catalog("BDD")) == "1/2 * p m^(-1) p"


def test_print_canonical_weyl():
    assert (
        print_canonical(catalog("W"))
        == "1/8 * m^(-1) p p + 1/4 * p m^(-1) p + 1/8 * p p m^(-1)"
    )


def test_print_canonical_merges_duplicates():
    s = parse("1/4 * p m^(-1) p + 1/4 * p m^(-1) p")
    assert print_canonical(s) == "1/2 * p m^(-1) p"


@pytest.mark.parametrize("name", TABLE_NAMES)
def test_catalog_round_trip_byte_identical(name):
    s = catalog(name)
    text = print_canonical(s)
    assert print_canonical(parse(text)) == text
    assert parse(text).terms == canonicalize(s).terms
    assert linear_params(parse(text)) == linear_params(s)


def test_parse_canonical_is_idempotent_fixpoint():
    text = "1/8 * m^(-1) p p + 1/4 * p m^(-1) p + 1/8 * p p m^(-1)"
    assert print_canonical(parse(text)) == text


def test_negative_coefficients_round_trip():
    s = catalog("DA(-1/2)")
    text = print_canonical(s)
    assert text.startswith("-")
    assert print_canonical(parse(text)) == text
