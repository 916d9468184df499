from __future__ import annotations

import random
from datetime import datetime, timezone

import pytest

from debt_gauge.question_bank import Role, applicable_questions, canonical_bank
from debt_gauge.scoring import AnswerValue, Response
from debt_gauge.session_store import SessionStore

FIXED_TS = datetime(2024, 9, 11, 12, 0, 0, tzinfo=timezone.utc)

ANSWERS = [
    AnswerValue.YES,
    AnswerValue.NO,
    AnswerValue.NOT_APPLICABLE,
    AnswerValue.DONT_KNOW,
]


@pytest.fixture(scope="session")
def bank():
    return canonical_bank()


@pytest.fixture
def store(tmp_path, bank):
    return SessionStore(tmp_path / "data", bank)


def response(question_id: int, answer: AnswerValue) -> Response:
    return Response(question_id=question_id, answer=answer, answered_at=FIXED_TS)


def responses_from(answers: dict[int, AnswerValue]) -> list[Response]:
    return [response(qid, ans) for qid, ans in answers.items()]


def random_answers(
    bank, rng: random.Random, role: Role | None = None, full: bool = False
) -> dict[int, AnswerValue]:
    """Random answer map over a role's applicable questions (random subset
    unless full)."""
    role = role or rng.choice(list(Role))
    questions = applicable_questions(bank, role)
    if not full:
        questions = [q for q in questions if rng.random() < 0.8]
    return {q.id: rng.choice(ANSWERS) for q in questions}


def naive_sum(bank, answers: dict[int, AnswerValue]) -> int:
    """Independent scoring oracle: one pass over raw responses, no use of
    the aggregation code under test."""
    total = 0
    for qid, ans in answers.items():
        weight = next(q.weight for q in bank.questions if q.id == qid)
        if ans is AnswerValue.YES:
            total -= weight
        elif ans in (AnswerValue.NO, AnswerValue.DONT_KNOW):
            total += weight
    return total


def weight_bearing_keys(node) -> list[str]:
    """Recursively collect JSON keys that would carry a weight (the wire
    weight-hiding invariant is about fields, not about question wording)."""
    found: list[str] = []
    if isinstance(node, dict):
        for key, value in node.items():
            if "weight" in key.lower() or key.lower() in ("score", "scores"):
                found.append(key)
            found.extend(weight_bearing_keys(value))
    elif isinstance(node, list):
        for item in node:
            found.extend(weight_bearing_keys(item))
    return found


def fill_session(store: SessionStore, session, answer_for):
    """Answer every applicable question of a session; answer_for maps a
    Question to an AnswerValue."""
    for q in applicable_questions(store.bank, session.role):
        session = store.record_answer(
            session.session_id, q.id, answer_for(q), session.revision
        )
    return session
