"""Filter decision, closure, enumeration and classification."""
from __future__ import annotations

import itertools

import pytest

import oracle
from helpers import VALID_FIXTURES, algebra_of, mask_of, model_of, upset_of_unit
from ilalg import (
    BuildError,
    NotAFilterError,
    check_idempotent_implies_implicative,
    classify_all,
    classify_filter,
    enumerate_filters,
    filter_closure,
    is_affine_filter,
    is_distributive_filter,
    is_filter,
    is_implicative_filter,
    is_maximal_filter,
    is_prime_filter,
    subset_mask,
)
from ilalg.fixtures import expectations


def names_of(alg, witness):
    return tuple(alg.carrier[i] for i in witness)


def test_is_filter_accepts_known_filters():
    alg = algebra_of("chain6lo")
    assert is_filter(alg, mask_of(alg, ["1", "b", "c", "d", "top"])).ok


@pytest.mark.parametrize("name", VALID_FIXTURES)
def test_whole_carrier_is_a_filter(name):
    alg = algebra_of(name)
    assert is_filter(alg, (1 << alg.n) - 1).ok


def test_is_filter_meet_closure_witness():
    alg = algebra_of("fork")
    check = is_filter(alg, mask_of(alg, ["c", "1", "top"]))
    assert not check.ok
    assert check.condition == "meet-closed"
    assert names_of(alg, check.witness) == ("c", "1")


def test_is_filter_star_closure_witness():
    alg = algebra_of("fork")
    check = is_filter(alg, mask_of(alg, ["b", "c", "d", "1", "top"]))
    assert not check.ok
    assert check.condition == "star-closed"
    assert names_of(alg, check.witness) == ("b", "b")


def test_is_filter_unit_and_upward_witnesses():
    alg = algebra_of("chain6lo")
    check = is_filter(alg, mask_of(alg, ["top"]))
    assert check.condition == "unit-member"
    check = is_filter(alg, mask_of(alg, ["1"]))
    assert check.condition == "upward-closed"
    assert names_of(alg, check.witness) == ("1", "b")


@pytest.mark.parametrize("name", VALID_FIXTURES)
def test_closure_of_empty_set_is_least_filter(name):
    alg = algebra_of(name)
    closed = filter_closure(alg, 0)
    ref = oracle.least_filter_containing(model_of(name), [])
    assert list(closed.member_names()) == ref
    # on every shipped fixture that least filter is the upset of the unit
    assert closed.mask == subset_mask(alg, upset_of_unit(alg))


@pytest.mark.parametrize("name", VALID_FIXTURES)
def test_closure_of_carrier_is_carrier(name):
    alg = algebra_of(name)
    full = (1 << alg.n) - 1
    assert filter_closure(alg, full).mask == full


def test_closure_blows_up_to_carrier_when_star_escapes():
    alg = algebra_of("fork")
    closed = filter_closure(alg, mask_of(alg, ["b"]))
    assert closed.mask == (1 << alg.n) - 1


@pytest.mark.parametrize("name", VALID_FIXTURES)
def test_enumeration_matches_sidecar_and_oracle(name):
    alg = algebra_of(name)
    found = enumerate_filters(alg)
    members = [list(f.member_names()) for f in found]
    assert members == expectations(name)["filters"]
    assert members == oracle.sweep_filters(model_of(name))
    masks = [f.mask for f in found]
    assert masks == sorted(masks)


def test_enumeration_counts():
    assert len(enumerate_filters(algebra_of("fork"))) == 2
    assert len(enumerate_filters(algebra_of("chain6lo"))) == 2
    assert len(enumerate_filters(algebra_of("point"))) == 1
    assert len(enumerate_filters(algebra_of("chain6hi-corrected"))) == 4
    assert len(enumerate_filters(algebra_of("wide7-corrected"))) == 5


@pytest.mark.parametrize("name", VALID_FIXTURES)
def test_enumeration_agrees_with_full_subset_sweep(name):
    alg = algebra_of(name)
    found = {f.mask for f in enumerate_filters(alg)}
    for bits in range(1 << alg.n):
        assert (bits in found) == is_filter(alg, bits).ok


def test_distributive_filter_examples():
    alg = algebra_of("chain6lo")
    ok, _ = is_distributive_filter(alg, mask_of(alg, ["1", "b", "c", "d", "top"]))
    assert ok
    assert is_distributive_filter(alg, (1 << alg.n) - 1)[0]
    pent = algebra_of("pentagon-corrected")
    ok, witness = is_distributive_filter(pent, mask_of(pent, ["1", "a", "top"]))
    assert not ok
    assert names_of(pent, witness) == ("1", "a", "b")
    # the failing value is bottom
    x, y, z = witness
    value = pent.arrow(
        pent.meet(pent.join(x, y), pent.join(x, z)), pent.join(x, pent.meet(y, z))
    )
    assert value == pent.bottom


def test_prime_filter_examples():
    alg = algebra_of("chain6lo")
    assert is_prime_filter(alg, mask_of(alg, ["b", "c", "d", "1", "top"]))[0]
    fork = algebra_of("fork")
    ok, witness = is_prime_filter(fork, mask_of(fork, ["1", "top"]))
    assert not ok
    assert names_of(fork, witness) == ("c", "d")


def test_maximal_filter_examples():
    hi = algebra_of("chain6hi-corrected")
    assert is_maximal_filter(hi, mask_of(hi, ["b", "c", "1", "top"]))
    assert not is_maximal_filter(hi, mask_of(hi, ["1", "top"]))
    assert not is_maximal_filter(hi, mask_of(hi, ["c", "1", "top"]))
    bool2 = algebra_of("bool2")
    assert is_maximal_filter(bool2, mask_of(bool2, ["1"]))
    assert not is_maximal_filter(bool2, (1 << bool2.n) - 1)
    wide = algebra_of("wide7-corrected")
    assert is_maximal_filter(wide, mask_of(wide, ["a", "b", "d", "1", "top"]))


def test_maximal_filter_rejects_non_filters():
    fork = algebra_of("fork")
    with pytest.raises(NotAFilterError):
        is_maximal_filter(fork, mask_of(fork, ["b", "c", "d", "1", "top"]))


def test_implicative_filter_oracle_resolved_verdicts():
    alg = algebra_of("chain6lo")
    assert is_implicative_filter(alg, mask_of(alg, ["b", "c", "d", "1", "top"]))[0]
    hi = algebra_of("chain6hi-corrected")
    ok, witness = is_implicative_filter(hi, mask_of(hi, ["b", "c", "1", "top"]))
    assert not ok
    assert names_of(hi, witness) == ("a", "a", "bot")
    wide = algebra_of("wide7-corrected")
    ok, witness = is_implicative_filter(
        wide, mask_of(wide, ["a", "b", "d", "1", "top"])
    )
    assert not ok
    assert names_of(wide, witness) == ("c", "c", "a")
    # the witness cited alongside the erratic source table is genuine too
    c, one = wide.index("c"), wide.index("1")
    f4 = mask_of(wide, ["a", "b", "d", "1", "top"])
    assert f4 >> wide.arrow(c, wide.arrow(c, one)) & 1
    assert f4 >> wide.arrow(c, c) & 1
    assert not f4 >> wide.arrow(c, one) & 1


def test_affine_filter_examples():
    hi = algebra_of("chain6hi-corrected")
    assert hi.carrier[hi.arrow(hi.top, hi.unit)] == "b"
    assert is_affine_filter(hi, mask_of(hi, ["b", "c", "1", "top"]))
    assert not is_affine_filter(hi, mask_of(hi, ["1", "top"]))
    point = algebra_of("point")
    assert is_affine_filter(point, 1)


@pytest.mark.parametrize("name", VALID_FIXTURES)
def test_classification_matches_sidecar_and_oracle(name):
    alg = algebra_of(name)
    rows = classify_all(alg)
    expected = expectations(name)["classification"]
    assert len(rows) == len(expected)
    for row, exp in zip(rows, expected):
        assert list(row.member_names()) == exp["members"]
        got = {
            "distributive": row.flags.distributive,
            "prime": row.flags.prime,
            "maximal": row.flags.maximal,
            "implicative": row.flags.implicative,
            "affine": row.flags.affine,
        }
        ref = oracle.classify(model_of(name), exp["members"])
        assert got == ref
        assert got == {k: exp[k] for k in got}


def test_point_classification_row():
    alg = algebra_of("point")
    (row,) = classify_all(alg)
    assert row.flags.distributive and row.flags.prime
    assert row.flags.implicative and row.flags.affine
    # the only filter is the carrier, which is not proper, hence not maximal
    assert row.flags.maximal is False


def test_idempotent_implies_implicative_scan():
    for name in ("point", "bool2"):
        result = check_idempotent_implies_implicative(algebra_of(name))
        assert result.idempotent
        assert result.all_filters_implicative
        assert result.converse_witness is None
    alg = algebra_of("chain6lo")
    result = check_idempotent_implies_implicative(alg)
    assert not result.idempotent
    assert alg.carrier[result.non_idempotent_witness] == "b"
    assert result.converse_witness is not None
    assert result.converse_witness.member_names() == ("b", "c", "d", "1", "top")
    wide = check_idempotent_implies_implicative(algebra_of("wide7-corrected"))
    assert not wide.idempotent
    assert wide.converse_witness.mask == (1 << 7) - 1


def test_lenient_algebra_classification_permissions():
    alg = algebra_of("pentagon-printed")
    assert not alg.valid
    mask = mask_of(alg, ["1", "a", "top"])
    # pure table reads are allowed
    is_prime_filter(alg, mask)
    is_distributive_filter(alg, mask)
    is_implicative_filter(alg, mask)
    is_affine_filter(alg, mask)
    assert classify_filter(alg, mask).maximal is None
    # the filter lattice is not
    with pytest.raises(BuildError):
        enumerate_filters(alg)
    with pytest.raises(BuildError):
        is_maximal_filter(alg, mask)
    with pytest.raises(BuildError):
        filter_closure(alg, mask)


def test_subset_mask_validation():
    alg = algebra_of("bool2")
    with pytest.raises(IndexError):
        subset_mask(alg, [5])
    with pytest.raises(IndexError):
        subset_mask(alg, 1 << alg.n)
    assert subset_mask(alg, [0, 1]) == 3


def test_filter_flags_attached_by_classify_all():
    for row in classify_all(algebra_of("fork")):
        assert row.flags is not None
        recomputed = classify_filter(row.algebra, row.mask)
        assert row.flags == recomputed
