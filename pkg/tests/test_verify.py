import json

import pytest

from bhdual.invertible import (TypedForm, WeightSystem, canonical_weights, classify,
                               input_polynomial, transpose)
from bhdual.series import expand, poincare_series
from bhdual.verify import (CHECKS, _hilbert_matches, check_form, default_depth, enumerate_forms,
                           partition_count_oracle, run, sample_forms, verify_bound)

from oracles import lattice_count


def test_enumeration_type_one_counts():
    assert [tf.params for tf in enumerate_forms(2) if tf.type_tag == "I"] == [(2, 2, 2)]
    assert sum(1 for tf in enumerate_forms(3) if tf.type_tag == "I") == 8
    with pytest.raises(ValueError):
        list(enumerate_forms(1))


def test_enumeration_counts_per_type():
    b = 4
    counts = {}
    for tf in enumerate_forms(b):
        counts[tf.type_tag] = counts.get(tf.type_tag, 0) + 1
    assert counts == {"I": 27, "II": 27, "III": 48, "IV": 27, "V": 64}


def test_enumeration_has_no_duplicates_and_round_trips():
    forms = list(enumerate_forms(4))
    assert len(forms) == len(set(forms))
    for tf in forms:
        back = classify(input_polynomial(tf))
        assert back.type_tag == tf.type_tag
        assert input_polynomial(back) == input_polynomial(tf)


def test_partition_count_oracle_examples():
    W = WeightSystem(21, 14, 6, 42)
    assert partition_count_oracle(W, 0) == 1
    assert partition_count_oracle(W, 42) == expand(poincare_series(W), 42)[42]
    assert partition_count_oracle(WeightSystem(1, 1, 1, 3), 3) == 9


def test_batched_hilbert_counter_matches_oracles():
    for tf in sample_forms(5, 6):
        W = canonical_weights(tf)
        depth = min(default_depth(W), 120)
        assert _hilbert_matches(W, depth)
        coeffs = expand(poincare_series(W), depth)
        for k in range(0, depth + 1, 7):
            assert coeffs[k] == partition_count_oracle(W, k)
            assert coeffs[k] == lattice_count(W.weights, k) - lattice_count(W.weights, k - W.d)


def test_default_depth():
    assert default_depth(WeightSystem(21, 14, 6, 42)) == 84
    assert default_depth(WeightSystem(100, 100, 100, 300)) == 400


def test_check_form_e12():
    rec = check_form(TypedForm("I", (2, 3, 7)))
    assert rec.ok and rec.failures == {}
    assert all(rec.results[k] is True for k in CHECKS)
    assert rec.ordered_alpha_gamma


def test_check_form_type_v_example():
    rec = check_form(TypedForm("V", (2, 3, 4)))
    assert rec.ok
    for k in "abcdefghik":
        assert rec.results[k] is True, k
    # c_f = 1 but c_{f^t} = 5
    assert canonical_weights(TypedForm("V", (2, 3, 4))).as_list() == [9, 7, 4, 25]
    assert canonical_weights(classify(transpose(input_polynomial(TypedForm("V", (2, 3, 4)))))
                             ).as_list() == [10, 5, 5, 25]


def test_check_form_respects_selected_checks():
    rec = check_form(TypedForm("II", (3, 2, 10)), checks="ab")
    assert set(rec.results) == {"a", "b"}


def test_bound_four_has_no_failures():
    report = verify_bound(4)
    assert report.ok, [r.to_json() for r in report.records if not r.ok][:3]
    s = report.summary()
    assert s["forms"] == 193
    assert sum(sum(c.values()) for c in s["checks"].values()) == 193 * len(CHECKS)


def test_report_is_deterministic_and_parallel_safe():
    forms = list(enumerate_forms(3))
    a = list(run(forms).lines())
    b = list(run(forms, workers=2).lines())
    assert a == b
    last = json.loads(a[-1])
    assert last["summary"]["forms"] == len(forms)
    first = json.loads(a[0])
    assert first["index"] == 0 and set(first["checks"]) == set(CHECKS)
