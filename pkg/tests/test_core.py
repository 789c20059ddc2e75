"""Algebra construction and the law/identity suites."""
from __future__ import annotations

import pytest

import oracle
from helpers import (
    ALL_FIXTURES,
    ERRATIC_FIXTURES,
    VALID_FIXTURES,
    algebra_of,
    built,
    doc_of,
    model_of,
    report_of,
)
from ilalg import (
    BuildError,
    FiniteILAlgebra,
    LawViolationError,
    NotResiduatedError,
    assemble_algebra,
    build_algebra,
    check_identities,
    check_integrality_equivalence,
    check_lattice,
    check_monoid,
    check_residuation,
    derive_arrow,
    is_idempotent,
)
from ilalg.fixtures import expectations


@pytest.mark.parametrize("name", VALID_FIXTURES)
def test_strict_build_accepts_valid_fixtures(name):
    alg, report = build_algebra(doc_of(name), mode="strict")
    assert report.ok
    assert alg.valid
    assert alg.carrier == tuple(doc_of(name).elements)


@pytest.mark.parametrize("name", ERRATIC_FIXTURES)
def test_strict_build_rejects_erratic_fixtures(name):
    with pytest.raises(LawViolationError) as err:
        build_algebra(doc_of(name), mode="strict")
    assert not err.value.report.ok


@pytest.mark.parametrize("name", ERRATIC_FIXTURES)
def test_lenient_build_report_matches_sidecar(name):
    alg, report = built(name)
    assert not alg.valid
    exp = expectations(name)["violations"]
    by_law = report.by_law()
    assert set(by_law) == set(exp)
    for law, data in exp.items():
        assert len(by_law[law]) == data["count"]
        assert list(by_law[law][0]) == data["first"]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_law_witnesses_equal_oracle(name):
    engine = {k: [tuple(w) for w in v] for k, v in report_of(name).by_law().items()}
    ref = {k: [tuple(w) for w in v] for k, v in oracle.law_failures(model_of(name)).items()}
    assert engine == ref


def test_one_element_algebra_is_degenerate():
    alg, report = build_algebra(doc_of("point"), mode="strict")
    assert report.ok
    assert alg.n == 1
    assert alg.bottom == alg.unit == alg.top == 0


def test_pentagon_printed_unit_law_witness():
    report = report_of("pentagon-printed")
    units = [v for v in report.violations if v.law == "star-unit"]
    assert [(v.witness, v.found) for v in units] == [(("a", "1"), "1")]


def test_check_lattice_reports_two_cycle():
    table = ((0, 0), (0, 0))
    alg = FiniteILAlgebra(
        carrier=("x", "y"),
        leq_table=((True, True), (True, True)),
        join_table=table, meet_table=table, star_table=table, arrow_table=table,
        bottom=0, unit=0, top=0, valid=False,
    )
    laws = check_lattice(alg).by_law()
    assert ("x", "y") in laws["order-antisymmetric"]


def test_check_monoid_exhaustive_on_chain():
    assert check_monoid(algebra_of("chain6lo")).ok
    assert check_monoid(algebra_of("point")).ok


def test_check_monoid_unit_witness_on_erratic_chain():
    laws = check_monoid(algebra_of("chain6hi-printed")).by_law()
    assert laws["star-unit"] == [("a", "1")]


def test_check_residuation_pass_and_fail():
    assert check_residuation(algebra_of("chain6lo")).ok
    assert check_residuation(algebra_of("point")).ok
    witnesses = check_residuation(algebra_of("chain6hi-printed")).by_law()["residuation"]
    assert witnesses[0] == ("a", "a", "bot")
    assert ("a", "a", "b") in witnesses


def test_derive_arrow_reproduces_stored_table():
    alg = algebra_of("chain6lo")
    derived = derive_arrow(alg.star_table, alg.leq_table)
    assert tuple(map(tuple, derived)) == alg.arrow_table


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_unit_arrow_row_is_identity(name):
    alg = algebra_of(name)
    for x in range(alg.n):
        assert alg.arrow(alg.unit, x) == x


def test_derived_arrow_on_two_chain_is_classical_implication():
    alg = algebra_of("bool2")
    assert doc_of("bool2").arrow_rows is None
    bot, one = alg.index("bot"), alg.index("1")
    assert alg.arrow(bot, bot) == one
    assert alg.arrow(bot, one) == one
    assert alg.arrow(one, bot) == bot
    assert alg.arrow(one, one) == one


def test_derive_arrow_rejects_non_residuated_star():
    alg = algebra_of("chain6lo")
    star = [list(row) for row in alg.star_table]
    star[alg.index("b")][alg.index("bot")] = alg.index("top")
    with pytest.raises(NotResiduatedError) as err:
        derive_arrow(star, alg.leq_table)
    assert (alg.index("b"), alg.index("bot")) in err.value.pairs


@pytest.mark.parametrize("name", VALID_FIXTURES)
def test_identities_pass_on_valid_fixtures(name):
    assert check_identities(algebra_of(name)).ok


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_identity_witnesses_equal_oracle(name):
    engine = {
        k: [tuple(w) for w in v]
        for k, v in check_identities(algebra_of(name)).by_law().items()
    }
    ref = {
        k: [tuple(w) for w in v]
        for k, v in oracle.identity_failures(model_of(name)).items()
    }
    assert engine == ref


def test_monotonicity_witness_on_erratic_chain():
    laws = check_identities(algebra_of("chain6hi-printed")).by_law()
    assert ("a", "a", "a", "1") in laws["star-monotone"]


def test_operation_accessors():
    alg = algebra_of("chain6lo")
    c, d, top = alg.index("c"), alg.index("d"), alg.index("top")
    assert alg.star(c, d) == top
    assert alg.join(c, d) == d
    for x in range(alg.n):
        assert alg.star(alg.unit, x) == x
    fork = algebra_of("fork")
    dd = fork.index("d")
    assert fork.star(dd, dd) == fork.index("1")
    with pytest.raises(IndexError):
        alg.star(0, alg.n)
    with pytest.raises(IndexError):
        alg.leq(-1, 0)


def test_is_idempotent():
    assert is_idempotent(algebra_of("point")) == (True, None)
    assert is_idempotent(algebra_of("bool2")) == (True, None)
    flag, witness = is_idempotent(algebra_of("chain6lo"))
    assert not flag
    assert algebra_of("chain6lo").carrier[witness] == "b"


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_integrality_equivalence(name):
    alg = algebra_of(name)
    integral = check_integrality_equivalence(alg)
    assert integral == (alg.top == alg.unit)
    assert integral == oracle.is_integral(model_of(name))


def test_carrier_size_cap():
    names = [f"e{i}" for i in range(65)]
    pairs = [(0, i) for i in range(1, 65)]
    star = [[0] * 65 for _ in range(65)]
    with pytest.raises(BuildError, match="64"):
        assemble_algebra(names, pairs, star, unit=0)


def test_full_relation_input_equals_hasse_input():
    from dataclasses import replace

    doc = doc_of("chain6lo")
    alg = algebra_of("chain6lo")
    full_pairs = [
        (doc.elements[i], doc.elements[j])
        for i in range(alg.n)
        for j in range(alg.n)
        if alg.leq_table[i][j]
    ]
    other, report = build_algebra(replace(doc, order_pairs=full_pairs))
    assert report.ok
    assert other.leq_table == alg.leq_table
    assert other.join_table == alg.join_table
    assert other.meet_table == alg.meet_table


def test_declared_top_and_bottom_crosschecks():
    from dataclasses import replace

    doc = doc_of("chain6lo")
    good, report = build_algebra(
        replace(doc, declared_bottom="bot", declared_top="top")
    )
    assert report.ok
    with pytest.raises(LawViolationError):
        build_algebra(replace(doc, declared_top="d"))
    _, lenient = build_algebra(replace(doc, declared_top="d"), mode="lenient")
    assert lenient.by_law()["top-declared"] == [("d",)]
    with pytest.raises(BuildError, match="least"):
        build_algebra(replace(doc, declared_bottom="d"))


def test_build_errors_on_malformed_structure():
    # order cycle
    with pytest.raises(BuildError, match="cycle"):
        assemble_algebra(["x", "y"], [(0, 1), (1, 0)], [[0, 0], [0, 0]], unit=0)
    # no least element
    with pytest.raises(BuildError, match="least"):
        assemble_algebra(["x", "y"], [], [[0, 0], [0, 1]], unit=1)
    # missing join: two maximal elements over a shared bottom
    with pytest.raises(BuildError, match="upper bound"):
        assemble_algebra(
            ["z", "x", "y"],
            [(0, 1), (0, 2)],
            [[0, 0, 0], [0, 1, 0], [0, 0, 2]],
            unit=0,
        )
    # dimension mismatch
    with pytest.raises(BuildError, match="entries"):
        assemble_algebra(["x", "y"], [(0, 1)], [[0], [0, 1]], unit=1)
