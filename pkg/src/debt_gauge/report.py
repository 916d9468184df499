"""Assessment reports.

Two audiences: respondents see their answers and the outcome but never the
per-question weights; analysts see the full arithmetic (weight and signed
score per question). Rendering is deterministic: the same report always
produces byte-identical output.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from fractions import Fraction

from .question_bank import DebtType, QuestionBank, Role, applicable_questions
from .scoring import (
    AnswerValue,
    TypeScorecard,
    Verdict,
    debt_index,
    grand_total,
    score_answer,
    type_total,
)
from .scoring import verdict as compute_verdict
from .session_store import AssessmentSession, BankMismatch, to_rfc3339

DEBT_INDEX_NOTE = (
    "derived metric: signed totals rescaled to [0, 1]; "
    "0 = every followed practice, 1 = none"
)


class Audience(str, Enum):
    RESPONDENT = "respondent"
    ANALYST = "analyst"


class ReportFormat(str, Enum):
    JSON = "json"
    MARKDOWN = "markdown"
    CSV = "csv"


@dataclass(frozen=True)
class QuestionRow:
    question_id: int
    text: str
    answer: AnswerValue | None  # None while unanswered
    weight: int
    score: int | None

    @property
    def answered(self) -> bool:
        return self.answer is not None


@dataclass(frozen=True)
class TypeSection:
    scorecard: TypeScorecard
    rows: tuple[QuestionRow, ...]


@dataclass(frozen=True)
class AssessmentReport:
    session_id: str
    role: Role
    platform_label: str
    generated_at: datetime
    audience: Audience
    partial: bool
    sections: tuple[TypeSection, ...]
    grand_total: int
    debt_index: Fraction | None
    verdict: Verdict | None  # withheld (None) while the session is partial
    answered_count: int
    applicable_count: int


def build_report(
    bank: QuestionBank,
    session: AssessmentSession,
    audience: Audience,
    generated_at: datetime | None = None,
) -> AssessmentReport:
    """Aggregate one session into a report.

    generated_at defaults to the session's updated_at so that re-reporting
    an unchanged session is reproducible down to the byte.
    """
    if session.bank_hash != bank.content_hash:
        raise BankMismatch(
            f"session {session.session_id} references bank "
            f"{session.bank_hash[:12]}…, report was asked to use "
            f"{bank.content_hash[:12]}…"
        )
    applicable = applicable_questions(bank, session.role)
    sections = []
    for debt_type in DebtType:
        card = type_total(bank, session.responses.values(), debt_type, session.role)
        rows = []
        for question in applicable:
            if question.debt_type is not debt_type:
                continue
            response = session.responses.get(question.id)
            answer = response.answer if response is not None else None
            rows.append(QuestionRow(
                question_id=question.id,
                text=question.text,
                answer=answer,
                weight=question.weight,
                score=None if answer is None else score_answer(question.weight, answer),
            ))
        sections.append(TypeSection(scorecard=card, rows=tuple(rows)))
    total = grand_total(s.scorecard for s in sections)
    scoreable = sum(s.scorecard.scoreable_weight for s in sections)
    return AssessmentReport(
        session_id=session.session_id,
        role=session.role,
        platform_label=session.platform_label,
        generated_at=generated_at or session.updated_at,
        audience=audience,
        partial=not session.finalized,
        sections=tuple(sections),
        grand_total=total,
        debt_index=debt_index(total, scoreable),
        verdict=None if not session.finalized else compute_verdict(total),
        answered_count=len(session.responses),
        applicable_count=len(applicable),
    )


def _index_value(report: AssessmentReport) -> float | None:
    if report.debt_index is None:
        return None
    return round(report.debt_index.numerator / report.debt_index.denominator, 3)


def render(report: AssessmentReport, fmt: ReportFormat) -> bytes:
    if fmt is ReportFormat.JSON:
        return _render_json(report)
    if fmt is ReportFormat.MARKDOWN:
        return _render_markdown(report)
    return _render_csv(report)


def _render_json(report: AssessmentReport) -> bytes:
    analyst = report.audience is Audience.ANALYST
    per_type = []
    for section in report.sections:
        card = section.scorecard
        questions = []
        for row in section.rows:
            item: dict = {
                "id": row.question_id,
                "text": row.text,
                "answer": row.answer.value if row.answer is not None else None,
            }
            if analyst:
                item["weight"] = row.weight
                item["score"] = row.score
            questions.append(item)
        entry: dict = {
            "type": card.debt_type.value,
            "label": card.debt_type.label,
            "total": card.raw_total,
            "answered": card.answered_count,
            "questions": questions,
        }
        if analyst:
            entry["scoreable_weight"] = card.scoreable_weight
            entry["max_weight"] = card.max_weight
        per_type.append(entry)
    doc = {
        "session_id": report.session_id,
        "role": report.role.value,
        "platform_label": report.platform_label,
        "generated_at": to_rfc3339(report.generated_at),
        "audience": report.audience.value,
        "status": "in_progress" if report.partial else "finalized",
        "partial": report.partial,
        "completion": {
            "answered": report.answered_count,
            "applicable": report.applicable_count,
        },
        "per_type": per_type,
        "grand_total": report.grand_total,
        "debt_index": _index_value(report),
        "debt_index_note": DEBT_INDEX_NOTE,
        "verdict": report.verdict.value if report.verdict is not None else None,
    }
    text = json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    return text.encode("utf-8")


def _md_escape(text: str) -> str:
    return text.replace("|", "\\|")


def _verdict_line(report: AssessmentReport) -> str:
    if report.verdict is None:
        return "Verdict: withheld until the session is finalized"
    if report.verdict is Verdict.ZERO_DEBT:
        return f"Verdict: zero debt (total {report.grand_total} ≤ 0)"
    return f"Verdict: debt present (total {report.grand_total} > 0)"


def _index_line(report: AssessmentReport) -> str:
    value = _index_value(report)
    if value is None:
        return f"Debt index: N/A ({DEBT_INDEX_NOTE})"
    return f"Debt index: {value:.3f} = {value * 100:.1f}% ({DEBT_INDEX_NOTE})"


def _render_markdown(report: AssessmentReport) -> bytes:
    analyst = report.audience is Audience.ANALYST
    lines = [
        "# Technical Debt Assessment Report",
        "",
        f"- Session: `{report.session_id}`",
        f"- Role: {report.role.value}",
        f"- Platform: {_md_escape(report.platform_label)}",
        f"- Status: {'in progress (partial)' if report.partial else 'finalized'}",
        f"- Audience: {report.audience.value}",
        f"- Generated: {to_rfc3339(report.generated_at)}",
        f"- Completion: {report.answered_count}/{report.applicable_count} "
        "questions answered",
        "",
        "## Summary",
        "",
    ]
    if analyst:
        lines.append("| Debt Type | Total | Answered | Scoreable Weight | Max Weight |")
        lines.append("| --- | ---: | ---: | ---: | ---: |")
        for section in report.sections:
            card = section.scorecard
            lines.append(
                f"| {card.debt_type.label} | {card.raw_total} "
                f"| {card.answered_count} | {card.scoreable_weight} "
                f"| {card.max_weight} |"
            )
        lines.append(f"| **Grand Total** | {report.grand_total} | | | |")
    else:
        lines.append("| Debt Type | Total | Answered |")
        lines.append("| --- | ---: | ---: |")
        for section in report.sections:
            card = section.scorecard
            lines.append(
                f"| {card.debt_type.label} | {card.raw_total} "
                f"| {card.answered_count} |"
            )
        lines.append(f"| **Grand Total** | {report.grand_total} | |")
    lines += ["", _verdict_line(report), "", _index_line(report), ""]

    for section in report.sections:
        card = section.scorecard
        lines.append(f"## {card.debt_type.label}")
        lines.append("")
        if not section.rows:
            lines.append("_No applicable questions for this role._")
            lines.append("")
            continue
        if analyst:
            lines.append("| Question | Score | Answer | Calculated Score |")
            lines.append("| --- | ---: | --- | ---: |")
            for row in section.rows:
                answer = row.answer.label if row.answer is not None else "Unanswered"
                score = "" if row.score is None else str(row.score)
                lines.append(
                    f"| {_md_escape(row.text)} | {row.weight} | {answer} "
                    f"| {score} |"
                )
            lines.append(f"| Overall Rating | | | {card.raw_total} |")
        else:
            lines.append("| Question | Answer |")
            lines.append("| --- | --- |")
            for row in section.rows:
                answer = row.answer.label if row.answer is not None else "Unanswered"
                lines.append(f"| {_md_escape(row.text)} | {answer} |")
            lines.append(f"| Overall Rating | {card.raw_total} |")
        lines.append("")
    return ("\n".join(lines).rstrip("\n") + "\n").encode("utf-8")


def _render_csv(report: AssessmentReport) -> bytes:
    analyst = report.audience is Audience.ANALYST
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")  # RFC 4180
    if analyst:
        header = ["record", "debt_type", "question_id", "question", "weight",
                  "answer", "score", "value"]
    else:
        header = ["record", "debt_type", "question_id", "question", "answer",
                  "value"]
    writer.writerow(header)

    def row(record: str, debt_type: str = "", question_id: str = "",
            question: str = "", weight: str = "", answer: str = "",
            score: str = "", value: str = "") -> None:
        if analyst:
            writer.writerow([record, debt_type, question_id, question, weight,
                             answer, score, value])
        else:
            writer.writerow([record, debt_type, question_id, question, answer,
                             value])

    for section in report.sections:
        card = section.scorecard
        for qrow in section.rows:
            row(
                "question",
                debt_type=card.debt_type.value,
                question_id=str(qrow.question_id),
                question=qrow.text,
                weight=str(qrow.weight),
                answer=qrow.answer.value if qrow.answer is not None else "",
                score="" if qrow.score is None else str(qrow.score),
            )
        row("type_total", debt_type=card.debt_type.value,
            value=str(card.raw_total))
    row("grand_total", value=str(report.grand_total))
    row("verdict", value="" if report.verdict is None else report.verdict.value)
    index = _index_value(report)
    row("debt_index", value="N/A" if index is None else f"{index:.3f}")
    row("answered", value=str(report.answered_count))
    row("applicable", value=str(report.applicable_count))
    return buffer.getvalue().encode("utf-8")
