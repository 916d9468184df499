from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from debt_gauge.question_bank import DebtType, Role
from debt_gauge.scoring import (
    AnswerValue,
    DuplicateType,
    Inconsistent,
    InvalidWeight,
    TypeScorecard,
    UnknownQuestion,
    Verdict,
    debt_index,
    grand_total,
    score_answer,
    type_total,
    verdict,
)

from conftest import naive_sum, random_answers, responses_from


class TestScoreAnswer:
    # (weight, answer) -> score pairs fixed by the published worked examples
    @pytest.mark.parametrize(
        "weight,answer,expected",
        [
            (5, AnswerValue.YES, -5),
            (4, AnswerValue.NO, 4),
            (3, AnswerValue.DONT_KNOW, 3),
            (2, AnswerValue.NOT_APPLICABLE, 0),
            (1, AnswerValue.YES, -1),
            (5, AnswerValue.DONT_KNOW, 5),
        ],
    )
    def test_mapping(self, weight, answer, expected):
        assert score_answer(weight, answer) == expected

    @pytest.mark.parametrize("weight", [0, 6, -1, 7, 100])
    def test_invalid_weight(self, weight):
        with pytest.raises(InvalidWeight):
            score_answer(weight, AnswerValue.YES)

    @given(st.integers(min_value=1, max_value=5))
    def test_antisymmetry(self, weight):
        assert score_answer(weight, AnswerValue.YES) == -score_answer(
            weight, AnswerValue.NO
        )

    @given(st.integers(min_value=1, max_value=5))
    def test_dont_know_scores_like_no(self, weight):
        assert score_answer(weight, AnswerValue.DONT_KNOW) == score_answer(
            weight, AnswerValue.NO
        )


class TestTypeTotal:
    def test_accessibility_worked_example(self, bank):
        # W5 yes, w4 no, w3 don't-know -> overall rating 2
        answers = {
            66: AnswerValue.YES,
            67: AnswerValue.NO,
            68: AnswerValue.DONT_KNOW,
        }
        card = type_total(
            bank, responses_from(answers), DebtType.ACCESSIBILITY, Role.ORGANIZER
        )
        assert card.raw_total == 2
        assert card.answered_count == 3
        assert card.scoreable_weight == 12
        assert card.max_weight == 12

    def test_model_worked_example(self, bank):
        # W4 no, w5 yes, w3 don't-know -> overall rating 2
        answers = {
            35: AnswerValue.NO,
            36: AnswerValue.YES,
            37: AnswerValue.DONT_KNOW,
        }
        card = type_total(
            bank, responses_from(answers), DebtType.MODEL, Role.PARTICIPANT
        )
        assert card.raw_total == 2
        assert card.answered_count == 3

    def test_empty_type(self, bank):
        card = type_total(bank, [], DebtType.DATA)
        assert card.raw_total == 0
        assert card.answered_count == 0
        assert card.scoreable_weight == 0

    def test_other_types_ignored(self, bank):
        answers = {66: AnswerValue.NO, 35: AnswerValue.NO}
        card = type_total(bank, responses_from(answers), DebtType.ACCESSIBILITY)
        assert card.raw_total == 5
        assert card.answered_count == 1

    def test_unknown_question(self, bank):
        with pytest.raises(UnknownQuestion):
            type_total(
                bank,
                responses_from({999: AnswerValue.YES}),
                DebtType.ACCESSIBILITY,
            )

    def test_not_applicable_is_inert(self, bank):
        answers = {66: AnswerValue.YES, 67: AnswerValue.NOT_APPLICABLE}
        with_na = type_total(
            bank, responses_from(answers), DebtType.ACCESSIBILITY
        )
        without_na = type_total(
            bank,
            responses_from({66: AnswerValue.YES}),
            DebtType.ACCESSIBILITY,
        )
        assert with_na.raw_total == without_na.raw_total
        assert with_na.scoreable_weight == without_na.scoreable_weight
        assert with_na.answered_count == without_na.answered_count + 1

    def test_bounded_by_scoreable_weight(self, bank):
        rng = random.Random(7)
        for _ in range(50):
            answers = random_answers(bank, rng)
            for debt_type in DebtType:
                card = type_total(bank, responses_from(answers), debt_type)
                assert -card.scoreable_weight <= card.raw_total
                assert card.raw_total <= card.scoreable_weight


class TestGrandTotal:
    def test_sums_worked_examples(self):
        cards = [
            TypeScorecard(DebtType.ACCESSIBILITY, 2, 3, 12, 12),
            TypeScorecard(DebtType.MODEL, 2, 3, 12, 12),
        ]
        assert grand_total(cards) == 4

    def test_empty(self):
        assert grand_total([]) == 0

    def test_duplicate_type(self):
        card = TypeScorecard(DebtType.DATA, 0, 0, 0, 23)
        with pytest.raises(DuplicateType):
            grand_total([card, card])

    def test_partition_additivity_matches_naive_oracle(self, bank):
        rng = random.Random(11)
        for _ in range(100):
            answers = random_answers(bank, rng)
            per_type = [
                type_total(bank, responses_from(answers), t) for t in DebtType
            ]
            assert grand_total(per_type) == naive_sum(bank, answers)

    def test_order_independence(self, bank):
        rng = random.Random(13)
        answers = random_answers(bank, rng, full=True)
        items = list(answers.items())
        rng.shuffle(items)
        shuffled = dict(items)
        for debt_type in DebtType:
            assert type_total(
                bank, responses_from(answers), debt_type
            ) == type_total(bank, responses_from(shuffled), debt_type)


class TestVerdict:
    @pytest.mark.parametrize(
        "total,expected",
        [
            (2, Verdict.DEBT_PRESENT),
            (1, Verdict.DEBT_PRESENT),
            (0, Verdict.ZERO_DEBT),
            (-13, Verdict.ZERO_DEBT),
        ],
    )
    def test_boundary(self, total, expected):
        assert verdict(total) == expected


class TestDebtIndex:
    def test_worked_example(self):
        # Accessibility example: weights 5+4+3 = 12 scoreable, total 2
        assert debt_index(2, 12) == Fraction(7, 12)

    @given(st.integers(min_value=1, max_value=400))
    def test_all_yes_lower_bound(self, weight):
        assert debt_index(-weight, weight) == 0

    @given(st.integers(min_value=1, max_value=400))
    def test_all_no_upper_bound(self, weight):
        assert debt_index(weight, weight) == 1

    def test_undefined_when_nothing_scoreable(self):
        assert debt_index(0, 0) is None

    def test_inconsistent(self):
        with pytest.raises(Inconsistent):
            debt_index(13, 12)
        with pytest.raises(Inconsistent):
            debt_index(-13, 12)

    @given(
        st.integers(min_value=1, max_value=300).flatmap(
            lambda w: st.tuples(st.integers(min_value=-w, max_value=w), st.just(w))
        )
    )
    def test_bounds_and_verdict_agreement(self, pair):
        total, weight = pair
        index = debt_index(total, weight)
        assert 0 <= index <= 1
        # total <= 0 exactly when the index is at or below the midpoint
        assert (total <= 0) == (index <= Fraction(1, 2))


class TestDkEqualsNoProperty:
    def test_replacing_dont_know_with_no_changes_nothing(self, bank):
        rng = random.Random(17)
        for _ in range(100):
            answers = random_answers(bank, rng)
            swapped = {
                qid: AnswerValue.NO if ans is AnswerValue.DONT_KNOW else ans
                for qid, ans in answers.items()
            }
            for debt_type in DebtType:
                a = type_total(bank, responses_from(answers), debt_type)
                b = type_total(bank, responses_from(swapped), debt_type)
                assert a.raw_total == b.raw_total
                assert a.scoreable_weight == b.scoreable_weight


class TestSingleFlip:
    def test_no_to_yes_drops_total_by_twice_the_weight(self, bank):
        all_no = {q.id: AnswerValue.NO for q in bank.questions}
        base = sum(
            type_total(bank, responses_from(all_no), t).raw_total
            for t in DebtType
        )
        for question in bank.questions:
            flipped = dict(all_no)
            flipped[question.id] = AnswerValue.YES
            total = sum(
                type_total(bank, responses_from(flipped), t).raw_total
                for t in DebtType
            )
            assert total == base - 2 * question.weight

    def test_no_to_yes_never_flips_verdict_to_debt_present(self, bank):
        rng = random.Random(19)
        for _ in range(200):
            answers = random_answers(bank, rng)
            no_ids = [
                qid for qid, a in answers.items() if a is AnswerValue.NO
            ]
            if not no_ids:
                continue
            before = verdict(naive_sum(bank, answers))
            flipped = dict(answers)
            flipped[rng.choice(no_ids)] = AnswerValue.YES
            after = verdict(naive_sum(bank, flipped))
            assert not (
                before is Verdict.ZERO_DEBT and after is Verdict.DEBT_PRESENT
            )
