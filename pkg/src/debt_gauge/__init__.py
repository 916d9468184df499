"""Technical-debt self-assessment toolkit for AI competition platforms.

Encodes a 68-question instrument spanning 18 debt categories, scores
responses with a signed-weight rule (Yes lowers the total, No and
Don't-Know raise it, Not-Applicable is neutral), and reports per-type,
per-role, and overall results with a zero-debt/debt-present verdict.
"""

from .question_bank import (
    DebtType,
    DebtTypeDescriptor,
    Question,
    QuestionBank,
    Role,
    Stakeholder,
    applicable_questions,
    canonical_bank,
    load_bank,
    questions_by_type,
    serialize_bank,
    validate_bank,
)
from .report import Audience, AssessmentReport, ReportFormat, build_report, render
from .scoring import (
    AnswerValue,
    Response,
    TypeScorecard,
    Verdict,
    debt_index,
    grand_total,
    score_answer,
    type_total,
    verdict,
)
from .session_store import AssessmentSession, SessionDelta, SessionStore

__version__ = "0.1.0"

__all__ = [
    "AnswerValue",
    "AssessmentReport",
    "AssessmentSession",
    "Audience",
    "DebtType",
    "DebtTypeDescriptor",
    "Question",
    "QuestionBank",
    "ReportFormat",
    "Response",
    "Role",
    "SessionDelta",
    "SessionStore",
    "Stakeholder",
    "TypeScorecard",
    "Verdict",
    "applicable_questions",
    "build_report",
    "canonical_bank",
    "debt_index",
    "grand_total",
    "load_bank",
    "questions_by_type",
    "render",
    "score_answer",
    "serialize_bank",
    "type_total",
    "validate_bank",
    "verdict",
]
