"""Formula model, DIMACS round trip, reference semantics, generation."""

import itertools

import pytest
from hypothesis import given

from modsat.cnf import (
    Clause,
    Formula,
    Literal,
    clause_of,
    decode_assignment,
    encode_assignment,
    evaluate,
    parse_dimacs,
    random_kcnf,
    write_dimacs,
)
from modsat.errors import DimacsError

from conftest import formulas


def bitmask_evaluate(formula, assignment):
    """Independent CNF evaluation via integer masks."""
    word = 0
    for i, value in enumerate(assignment):
        if value:
            word |= 1 << i
    full = (1 << formula.num_vars) - 1
    for clause in formula.clauses:
        pos = 0
        neg = 0
        for lit in clause.literals:
            if lit.negated:
                neg |= 1 << (lit.var - 1)
            else:
                pos |= 1 << (lit.var - 1)
        if not (word & pos) and not ((word ^ full) & neg):
            return False
    return True


def test_literal_validation_and_dimacs_codes():
    assert Literal.from_dimacs(3) == Literal(3, False)
    assert Literal.from_dimacs(-3) == Literal(3, True)
    assert Literal(2, True).to_dimacs() == -2
    with pytest.raises(ValueError):
        Literal(0)
    with pytest.raises(ValueError):
        Literal.from_dimacs(0)


def test_clause_validation():
    with pytest.raises(ValueError):
        Clause(())
    with pytest.raises(ValueError):
        clause_of(1, 1)
    # Opposite polarities of one variable are two different literals.
    assert clause_of(1, -1).width == 2


def test_formula_validation():
    with pytest.raises(ValueError):
        Formula(-1, ())
    with pytest.raises(ValueError):
        Formula(2, (clause_of(3),))


def test_uniform_width():
    assert Formula(3, (clause_of(1, 2), clause_of(2, 3))).uniform_width == 2
    assert Formula(3, (clause_of(1, 2), clause_of(1, 2, 3))).uniform_width is None
    assert Formula(3, ()).uniform_width is None
    assert Formula(3, (clause_of(1, -2, 3),)).negated_occurrences == 1


def test_parse_simple():
    text = "c a comment\np cnf 3 2\n1 -2 0\n2 3 0\n"
    f = parse_dimacs(text)
    assert f.num_vars == 3
    assert f.clauses == (clause_of(1, -2), clause_of(2, 3))
    assert parse_dimacs(text.encode()) == f


def test_parse_blank_lines_and_comments():
    f = parse_dimacs("c x\n\np cnf 1 1\nc mid\n1 0\n\n")
    assert f == Formula(1, (clause_of(1),))


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("1 2 0\n", 1, "before header"),
        ("p cnf x 2\n", 1, "malformed header"),
        ("p cnf 2 1\np cnf 2 1\n", 2, "duplicate header"),
        ("p cnf 2 1\n1 2\n", 2, "end with 0"),
        ("p cnf 2 1\n1 0 2 0\n", 2, "0 inside clause"),
        ("p cnf 2 1\n0\n", 2, "empty clause"),
        ("p cnf 1 1\n1 2 0\n", 2, "exceeds declared"),
        ("p cnf 2 1\n1 1 0\n", 2, "duplicate literal"),
        ("p cnf 2 1\n1 a 0\n", 2, "non-integer"),
        ("p cnf 2 1\n1 0\n2 0\n", 3, "more clauses"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(DimacsError) as err:
        parse_dimacs(text)
    assert err.value.line == line
    assert fragment in str(err.value)


def test_parse_errors_without_line():
    with pytest.raises(DimacsError, match="missing header"):
        parse_dimacs("c nothing\n")
    with pytest.raises(DimacsError, match="declared 2 clauses but found 1"):
        parse_dimacs("p cnf 2 2\n1 2 0\n")


def test_write_canonical():
    f = Formula(3, (clause_of(1, -2), clause_of(2, 3)))
    assert write_dimacs(f) == "p cnf 3 2\n1 -2 0\n2 3 0\n"
    assert write_dimacs(Formula(0, ())) == "p cnf 0 0\n"


@given(f=formulas())
def test_dimacs_round_trip_identity(f):
    assert parse_dimacs(write_dimacs(f)) == f


def _all_clauses_3vars():
    """Every clause over variables 1..3: each variable appears positively,
    negatively, or not at all."""
    out = []
    for states in itertools.product((0, 1, 2), repeat=3):
        lits = tuple(
            Literal(v + 1, state == 2)
            for v, state in enumerate(states)
            if state
        )
        if lits:
            out.append(Clause(lits))
    return out


def test_evaluate_exhaustive_against_bitmask_oracle():
    clauses = _all_clauses_3vars()
    assert len(clauses) == 26
    assignments = list(itertools.product((False, True), repeat=3))
    checked = 0
    for size in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(clauses, size):
            f = Formula(3, combo)
            for a in assignments:
                assert evaluate(f, a) == bitmask_evaluate(f, a)
                checked += 1
    assert checked == (26 + 351 + 3276) * 8


def test_evaluate_rejects_wrong_length():
    f = Formula(2, (clause_of(1, 2),))
    with pytest.raises(ValueError):
        evaluate(f, (True,))


def test_encode_decode_conventions():
    assert encode_assignment((True, False)) == (0, 1)
    assert encode_assignment((True, False), "one-true") == (1, 0)
    assert decode_assignment((0, 1)) == (True, False)
    assert decode_assignment((0, 1), "one-true") == (False, True)
    with pytest.raises(ValueError):
        encode_assignment((True,), "other")
    with pytest.raises(ValueError):
        decode_assignment((2,))


@given(f=formulas(max_vars=5))
def test_encode_decode_round_trip(f):
    values = tuple(i % 2 == 0 for i in range(f.num_vars))
    for convention in ("zero-true", "one-true"):
        codes = encode_assignment(values, convention)
        assert set(codes) <= {0, 1}
        assert decode_assignment(codes, convention) == values


def test_random_kcnf_shape_and_determinism():
    f = random_kcnf(10, 30, 3, seed=7)
    assert f.num_vars == 10
    assert f.num_clauses == 30
    assert f.uniform_width == 3
    for clause in f.clauses:
        assert len({lit.var for lit in clause.literals}) == 3
    assert f == random_kcnf(10, 30, 3, seed=7)
    assert f != random_kcnf(10, 30, 3, seed=8)


def test_random_kcnf_polarity_balance():
    # 10**4 literal draws; the negated fraction must sit within 0.5 +/- 0.02.
    f = random_kcnf(20, 2500, 4, seed=123)
    total = 4 * 2500
    negated = f.negated_occurrences
    assert abs(negated / total - 0.5) <= 0.02


def test_random_kcnf_validation():
    with pytest.raises(ValueError):
        random_kcnf(2, 5, 3, seed=0)
    with pytest.raises(ValueError):
        random_kcnf(2, 5, 0, seed=0)
    with pytest.raises(ValueError):
        random_kcnf(2, -1, 2, seed=0)
