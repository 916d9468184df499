"""Signed-weight scoring.

Yes answers subtract the question's weight (practice followed, debt reduced);
No and Don't-Know answers add it; Not-Applicable is neutral. A total at or
below zero means the assessed platform shows no measured debt. Everything in
this module is a pure function over immutable inputs; all arithmetic is exact
(integers, plus one exact rational for the derived debt index).
"""
from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .question_bank import (
    MAX_WEIGHT,
    MIN_WEIGHT,
    DebtType,
    QuestionBank,
    Role,
)


class AnswerValue(str, Enum):
    YES = "yes"
    NO = "no"
    NOT_APPLICABLE = "not_applicable"
    DONT_KNOW = "dont_know"

    @property
    def label(self) -> str:
        return _ANSWER_LABELS[self]


_ANSWER_LABELS = {
    AnswerValue.YES: "YES",
    AnswerValue.NO: "NO",
    AnswerValue.NOT_APPLICABLE: "Not Applicable",
    AnswerValue.DONT_KNOW: "I Don't Know/I Don't Answer",
}


class Verdict(str, Enum):
    ZERO_DEBT = "zero_debt"
    DEBT_PRESENT = "debt_present"


@dataclass(frozen=True)
class Response:
    question_id: int
    answer: AnswerValue
    answered_at: datetime


@dataclass(frozen=True)
class TypeScorecard:
    """Aggregate for one debt type.

    raw_total is bounded by ±scoreable_weight; scoreable_weight excludes
    Not-Applicable answers, max_weight covers every applicable question of
    the type whether answered or not.
    """

    debt_type: DebtType
    raw_total: int
    answered_count: int
    scoreable_weight: int
    max_weight: int


class ScoringError(Exception):
    """Base for scoring failures."""


class InvalidWeight(ScoringError):
    pass


class UnknownQuestion(ScoringError):
    pass


class DuplicateType(ScoringError):
    pass


class Inconsistent(ScoringError):
    pass


def score_answer(weight: int, answer: AnswerValue) -> int:
    """Signed score of one answer: Yes -> -weight, No/Don't-Know -> +weight,
    Not-Applicable -> 0."""
    if not MIN_WEIGHT <= weight <= MAX_WEIGHT:
        raise InvalidWeight(
            f"weight {weight} outside {MIN_WEIGHT}-{MAX_WEIGHT}"
        )
    if answer is AnswerValue.YES:
        return -weight
    if answer is AnswerValue.NOT_APPLICABLE:
        return 0
    return weight  # NO and DONT_KNOW score identically


def type_total(
    bank: QuestionBank,
    responses: Iterable[Response],
    debt_type: DebtType,
    role: Role | None = None,
) -> TypeScorecard:
    """Aggregate all responses that belong to one debt type.

    Responses for other types are ignored; unanswered questions contribute
    nothing. When a role is given, max_weight counts only questions routed
    to that role, otherwise every question of the type counts.
    """
    raw_total = 0
    answered_count = 0
    scoreable_weight = 0
    for response in responses:
        question = bank.question(response.question_id)
        if question is None:
            raise UnknownQuestion(
                f"response references unknown question id {response.question_id}"
            )
        if question.debt_type is not debt_type:
            continue
        answered_count += 1
        raw_total += score_answer(question.weight, response.answer)
        if response.answer is not AnswerValue.NOT_APPLICABLE:
            scoreable_weight += question.weight
    max_weight = sum(
        q.weight
        for q in bank.questions
        if q.debt_type is debt_type and (role is None or q.applies_to(role))
    )
    return TypeScorecard(
        debt_type=debt_type,
        raw_total=raw_total,
        answered_count=answered_count,
        scoreable_weight=scoreable_weight,
        max_weight=max_weight,
    )


def grand_total(scorecards: Iterable[TypeScorecard]) -> int:
    """Sum of per-type raw totals; refuses duplicated types."""
    seen: set[DebtType] = set()
    total = 0
    for card in scorecards:
        if card.debt_type in seen:
            raise DuplicateType(f"duplicate scorecard for {card.debt_type.value}")
        seen.add(card.debt_type)
        total += card.raw_total
    return total


def verdict(total: int) -> Verdict:
    """Zero debt at or below zero, debt present above."""
    return Verdict.ZERO_DEBT if total <= 0 else Verdict.DEBT_PRESENT


def debt_index(raw_total: int, scoreable_weight: int) -> Fraction | None:
    """Affine rescaling of the raw total onto [0, 1].

    All-Yes maps to 0, all-No/Don't-Know to 1; None when nothing scoreable
    was answered (e.g. everything Not-Applicable). This is a derived metric;
    the signed raw totals remain primary.
    """
    if scoreable_weight < 0 or abs(raw_total) > scoreable_weight:
        raise Inconsistent(
            f"raw total {raw_total} impossible for scoreable weight "
            f"{scoreable_weight}"
        )
    if scoreable_weight == 0:
        return None
    return Fraction(raw_total + scoreable_weight, 2 * scoreable_weight)
