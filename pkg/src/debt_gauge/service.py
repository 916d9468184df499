"""HTTP facade over the bank, sessions, scoring, and reports.

A thin adapter: every score or report served over the wire is produced by
the same code paths the CLI uses, and report payloads are byte-identical to
the report module's output. Respondent-scoped payloads never carry question
weights; the analyst report requires an explicit audience=analyst query.
Every non-2xx body is an ApiError object: {"status", "code", "message"}.
"""
from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .question_bank import (
    DebtType,
    Question,
    QuestionBank,
    Role,
    applicable_questions,
)
from .report import Audience, ReportFormat, build_report, render
from .scoring import AnswerValue, UnknownQuestion
from .session_store import (
    AlreadyFinalized,
    AssessmentSession,
    BankMismatch,
    EmptyLabel,
    IncompleteSession,
    NotFinalized,
    QuestionNotApplicable,
    RevisionConflict,
    RoleMismatch,
    SessionFinalized,
    SessionNotFound,
    SessionStore,
    StorageError,
    StoreError,
    to_rfc3339,
)

_MEDIA_TYPES = {
    ReportFormat.JSON: "application/json",
    ReportFormat.MARKDOWN: "text/markdown; charset=utf-8",
    ReportFormat.CSV: "text/csv; charset=utf-8",
}


class CreateSessionBody(BaseModel):
    role: Role
    label: str


class AnswerBody(BaseModel):
    answer: AnswerValue
    revision: int


def _api_error(status: int, code: str, message: str, **extra) -> JSONResponse:
    body = {"status": status, "code": code, "message": message}
    body.update(extra)
    return JSONResponse(status_code=status, content=body)


def _error_response(exc: Exception) -> JSONResponse:
    if isinstance(exc, SessionNotFound):
        return _api_error(404, "session_not_found", str(exc))
    if isinstance(exc, UnknownQuestion):
        return _api_error(404, "question_not_found", str(exc))
    if isinstance(exc, RevisionConflict):
        return _api_error(409, "revision_conflict", str(exc))
    if isinstance(exc, QuestionNotApplicable):
        return _api_error(409, "question_not_applicable", str(exc))
    if isinstance(exc, (AlreadyFinalized, SessionFinalized)):
        return _api_error(409, "already_finalized", str(exc))
    if isinstance(exc, IncompleteSession):
        return _api_error(
            422, "incomplete_session", str(exc), unanswered=exc.unanswered
        )
    if isinstance(exc, RoleMismatch):
        return _api_error(409, "role_mismatch", str(exc))
    if isinstance(exc, NotFinalized):
        return _api_error(409, "not_finalized", str(exc))
    if isinstance(exc, BankMismatch):
        return _api_error(409, "bank_mismatch", str(exc))
    if isinstance(exc, EmptyLabel):
        return _api_error(400, "empty_label", str(exc))
    if isinstance(exc, StorageError):
        return _api_error(500, "storage", str(exc))
    return _api_error(500, "internal", str(exc))


def default_webapp_dir() -> Path | None:
    env = os.environ.get("DEBT_GAUGE_WEBAPP_DIR")
    if env:
        return Path(env)
    local = Path("frontend") / "dist"
    return local if local.is_dir() else None


def create_app(
    bank: QuestionBank,
    store: SessionStore,
    webapp_dir: Path | None = None,
) -> FastAPI:
    app = FastAPI(title="debt-gauge", docs_url=None, redoc_url=None)

    @app.exception_handler(StoreError)
    async def _store_error(_req: Request, exc: StoreError) -> JSONResponse:
        return _error_response(exc)

    @app.exception_handler(UnknownQuestion)
    async def _unknown_question(
        _req: Request, exc: UnknownQuestion
    ) -> JSONResponse:
        return _error_response(exc)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(
        _req: Request, exc: RequestValidationError
    ) -> JSONResponse:
        return _api_error(400, "bad_request", str(exc.errors()[:3]))

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(
        _req: Request, exc: StarletteHTTPException
    ) -> JSONResponse:
        return _api_error(exc.status_code, "http_error", str(exc.detail))

    def session_summary(session: AssessmentSession) -> dict:
        return {
            "session_id": session.session_id,
            "role": session.role.value,
            "platform_label": session.platform_label,
            "bank_hash": session.bank_hash,
            "status": session.status.value,
            "revision": session.revision,
            "created_at": to_rfc3339(session.created_at),
            "updated_at": to_rfc3339(session.updated_at),
            "answered": len(session.responses),
            "applicable": len(applicable_questions(bank, session.role)),
        }

    def question_payload(
        question: Question, session: AssessmentSession
    ) -> dict:
        response = session.responses.get(question.id)
        payload = {
            "id": question.id,
            "type": question.debt_type.value,
            "label": question.debt_type.label,
            "text": question.text,
            "justification": question.justification,
            "example": question.example,
            "answer": response.answer.value if response is not None else None,
        }
        if question.erratum_note is not None:
            payload["erratum_note"] = question.erratum_note
        return payload

    @app.get("/api/bank/meta")
    def bank_meta() -> dict:
        per_type = {t.value: 0 for t in DebtType}
        for q in bank.questions:
            per_type[q.debt_type.value] += 1
        return {
            "schema_version": bank.schema_version,
            "bank_version": bank.bank_version,
            "content_hash": bank.content_hash,
            "question_count": len(bank.questions),
            "per_type_counts": per_type,
            "applicable_counts": {
                role.value: len(applicable_questions(bank, role)) for role in Role
            },
        }

    @app.get("/api/types")
    def taxonomy() -> dict:
        return {
            "types": [
                {
                    "type": d.debt_type.value,
                    "label": d.debt_type.label,
                    "definition": d.definition,
                    "problem": d.problem,
                    "example": d.example,
                }
                for d in bank.descriptors
            ]
        }

    @app.post("/api/sessions", status_code=201)
    def create_session(body: CreateSessionBody) -> dict:
        session = store.create_session(body.role, body.label)
        return session_summary(session)

    @app.get("/api/sessions")
    def list_sessions() -> dict:
        return {
            "sessions": [
                {
                    "session_id": s.session_id,
                    "role": s.role.value,
                    "platform_label": s.platform_label,
                    "status": s.status.value,
                    "updated_at": to_rfc3339(s.updated_at),
                    "answered": s.answered,
                }
                for s in store.list_sessions()
            ]
        }

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return session_summary(store.get(session_id))

    @app.get("/api/sessions/{session_id}/questions")
    def session_questions(session_id: str) -> dict:
        session = store.get(session_id)
        return {
            "questions": [
                question_payload(q, session)
                for q in applicable_questions(bank, session.role)
            ]
        }

    @app.get("/api/sessions/{session_id}/questions/next")
    def next_question(session_id: str) -> dict:
        session = store.get(session_id)
        pending = [
            q for q in applicable_questions(bank, session.role)
            if q.id not in session.responses
        ]
        return {
            "remaining": len(pending),
            "question": question_payload(pending[0], session) if pending else None,
        }

    @app.put("/api/sessions/{session_id}/answers/{question_id}")
    def put_answer(session_id: str, question_id: int, body: AnswerBody) -> dict:
        session = store.record_answer(
            session_id, question_id, body.answer, body.revision
        )
        return session_summary(session)

    @app.post("/api/sessions/{session_id}/finalize")
    def finalize(session_id: str) -> dict:
        return session_summary(store.finalize(session_id))

    @app.get("/api/sessions/{session_id}/report")
    def session_report(
        session_id: str,
        audience: Audience = Audience.RESPONDENT,
        format: ReportFormat = ReportFormat.JSON,
    ) -> Response:
        session = store.get(session_id)
        result = build_report(bank, session, audience)
        return Response(
            content=render(result, format), media_type=_MEDIA_TYPES[format]
        )

    @app.get("/api/compare")
    def compare(a: str, b: str) -> dict:
        delta = store.compare(a, b)
        return {
            "baseline_id": delta.baseline_id,
            "comparison_id": delta.comparison_id,
            "per_type_delta": {
                t.value: d for t, d in delta.per_type_delta.items()
            },
            "total_delta": delta.total_delta,
        }

    if webapp_dir is not None and Path(webapp_dir).is_dir():
        app.mount("/", StaticFiles(directory=webapp_dir, html=True), name="webapp")
    else:
        @app.get("/", include_in_schema=False)
        def index() -> HTMLResponse:
            return HTMLResponse(
                "<!doctype html><title>debt-gauge</title>"
                "<h1>debt-gauge API</h1>"
                "<p>No webapp assets found. The JSON API lives under "
                "<code>/api/</code>.</p>"
            )

    return app
