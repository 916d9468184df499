"""File-backed assessment sessions.

One JSON file per session under <data_dir>/sessions/. Writes go to a temp
file in the same directory followed by an atomic rename, so a crash leaves
either the old or the new state, never a torn file. Concurrent writers on
the same session are detected through the revision check; distinct sessions
are fully independent.
"""
from __future__ import annotations

import json
import os
import secrets
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Callable, Union

from .question_bank import DebtType, QuestionBank, Role, applicable_questions
from .scoring import AnswerValue, Response, UnknownQuestion, type_total


class SessionStatus(str, Enum):
    IN_PROGRESS = "in_progress"
    FINALIZED = "finalized"


@dataclass(frozen=True)
class AssessmentSession:
    session_id: str
    role: Role
    platform_label: str
    bank_hash: str
    created_at: datetime
    updated_at: datetime
    responses: dict[int, Response]
    status: SessionStatus
    revision: int

    @property
    def finalized(self) -> bool:
        return self.status is SessionStatus.FINALIZED


@dataclass(frozen=True)
class SessionSummary:
    session_id: str
    role: Role
    platform_label: str
    status: SessionStatus
    updated_at: datetime
    answered: int


@dataclass(frozen=True)
class SessionDelta:
    baseline_id: str
    comparison_id: str
    per_type_delta: dict[DebtType, int]
    total_delta: int


class StoreError(Exception):
    """Base for session store failures."""


class StorageError(StoreError):
    """Underlying filesystem failure."""


class SessionNotFound(StoreError):
    pass


class EmptyLabel(StoreError):
    pass


class SessionFinalized(StoreError):
    """Mutation attempted on a finalized session."""


class AlreadyFinalized(SessionFinalized):
    """Finalize called twice."""


class QuestionNotApplicable(StoreError):
    pass


class RevisionConflict(StoreError):
    """expected_revision does not match the stored revision."""


class IncompleteSession(StoreError):
    """Finalize refused; carries the unanswered question ids."""

    def __init__(self, unanswered: list[int]):
        self.unanswered = unanswered
        super().__init__(
            f"{len(unanswered)} applicable question(s) unanswered: "
            + ", ".join(str(i) for i in unanswered)
        )


class RoleMismatch(StoreError):
    pass


class BankMismatch(StoreError):
    pass


class NotFinalized(StoreError):
    pass


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


def _new_session_id() -> str:
    """128 random bits as lowercase hex."""
    return secrets.token_hex(16)


def to_rfc3339(ts: datetime) -> str:
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc).isoformat().replace("+00:00", "Z")


def from_rfc3339(value: str) -> datetime:
    return datetime.fromisoformat(value.replace("Z", "+00:00"))


SESSION_SCHEMA_VERSION = "1"


def _session_payload(session: AssessmentSession) -> dict:
    return {
        "schema_version": SESSION_SCHEMA_VERSION,
        "session_id": session.session_id,
        "role": session.role.value,
        "platform_label": session.platform_label,
        "bank_hash": session.bank_hash,
        "created_at": to_rfc3339(session.created_at),
        "updated_at": to_rfc3339(session.updated_at),
        "status": session.status.value,
        "revision": session.revision,
        "responses": {
            str(qid): {
                "answer": r.answer.value,
                "answered_at": to_rfc3339(r.answered_at),
            }
            for qid, r in session.responses.items()
        },
    }


def _session_from_payload(doc: dict) -> AssessmentSession:
    return AssessmentSession(
        session_id=doc["session_id"],
        role=Role(doc["role"]),
        platform_label=doc["platform_label"],
        bank_hash=doc["bank_hash"],
        created_at=from_rfc3339(doc["created_at"]),
        updated_at=from_rfc3339(doc["updated_at"]),
        responses={
            int(qid): Response(
                question_id=int(qid),
                answer=AnswerValue(r["answer"]),
                answered_at=from_rfc3339(r["answered_at"]),
            )
            for qid, r in doc["responses"].items()
        },
        status=SessionStatus(doc["status"]),
        revision=doc["revision"],
    )


def _is_session_id(value: str) -> bool:
    return len(value) == 32 and all(c in "0123456789abcdef" for c in value)


class SessionStore:
    """Create, mutate, and query sessions pinned to one bank."""

    def __init__(
        self,
        data_dir: Union[str, Path],
        bank: QuestionBank,
        *,
        clock: Callable[[], datetime] | None = None,
        id_factory: Callable[[], str] | None = None,
    ):
        self.data_dir = Path(data_dir)
        self.bank = bank
        self._clock = clock or _utcnow
        self._new_id = id_factory or _new_session_id
        try:
            self.sessions_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageError(f"cannot create data directory: {exc}") from exc

    @property
    def sessions_dir(self) -> Path:
        return self.data_dir / "sessions"

    def _path(self, session_id: str) -> Path:
        return self.sessions_dir / f"{session_id}.json"

    def _save(self, session: AssessmentSession) -> None:
        payload = json.dumps(
            _session_payload(session), indent=2, sort_keys=True, ensure_ascii=False
        )
        path = self._path(session.session_id)
        tmp = path.with_suffix(".json.tmp")
        try:
            tmp.write_text(payload + "\n", encoding="utf-8")
            os.replace(tmp, path)
        except OSError as exc:
            raise StorageError(f"cannot persist session: {exc}") from exc

    def get(self, session_id: str) -> AssessmentSession:
        if not _is_session_id(session_id):
            raise SessionNotFound(f"no session {session_id!r}")
        path = self._path(session_id)
        try:
            raw = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise SessionNotFound(f"no session {session_id!r}") from None
        except OSError as exc:
            raise StorageError(f"cannot read session: {exc}") from exc
        try:
            return _session_from_payload(json.loads(raw))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise StorageError(f"corrupt session file {path.name}: {exc}") from exc

    def create_session(self, role: Role, platform_label: str) -> AssessmentSession:
        if not platform_label.strip():
            raise EmptyLabel("platform label must be non-empty")
        now = self._clock()
        session = AssessmentSession(
            session_id=self._new_id(),
            role=role,
            platform_label=platform_label,
            bank_hash=self.bank.content_hash,
            created_at=now,
            updated_at=now,
            responses={},
            status=SessionStatus.IN_PROGRESS,
            revision=0,
        )
        self._save(session)
        return session

    def _check_bank(self, session: AssessmentSession) -> None:
        if session.bank_hash != self.bank.content_hash:
            raise BankMismatch(
                f"session {session.session_id} was created against bank "
                f"{session.bank_hash[:12]}…, store holds "
                f"{self.bank.content_hash[:12]}…"
            )

    def record_answer(
        self,
        session_id: str,
        question_id: int,
        answer: AnswerValue,
        expected_revision: int,
    ) -> AssessmentSession:
        """Upsert one answer; refuses stale revisions without mutating."""
        session = self.get(session_id)
        if session.finalized:
            raise SessionFinalized(f"session {session_id} is finalized")
        self._check_bank(session)
        question = self.bank.question(question_id)
        if question is None:
            raise UnknownQuestion(f"no question with id {question_id}")
        if not question.applies_to(session.role):
            raise QuestionNotApplicable(
                f"question {question_id} is not routed to {session.role.value}s"
            )
        if expected_revision != session.revision:
            raise RevisionConflict(
                f"expected revision {expected_revision}, session is at "
                f"{session.revision}"
            )
        now = self._clock()
        responses = dict(session.responses)
        responses[question_id] = Response(
            question_id=question_id, answer=answer, answered_at=now
        )
        session = replace(
            session,
            responses=responses,
            revision=session.revision + 1,
            updated_at=now,
        )
        self._save(session)
        return session

    def unanswered(self, session: AssessmentSession) -> list[int]:
        return [
            q.id
            for q in applicable_questions(self.bank, session.role)
            if q.id not in session.responses
        ]

    def finalize(self, session_id: str) -> AssessmentSession:
        session = self.get(session_id)
        if session.finalized:
            raise AlreadyFinalized(f"session {session_id} is already finalized")
        self._check_bank(session)
        missing = self.unanswered(session)
        if missing:
            raise IncompleteSession(missing)
        session = replace(
            session,
            status=SessionStatus.FINALIZED,
            revision=session.revision + 1,
            updated_at=self._clock(),
        )
        self._save(session)
        return session

    def list_sessions(self) -> list[SessionSummary]:
        """Scan the data directory and rebuild the index file."""
        summaries = []
        for path in sorted(self.sessions_dir.glob("*.json")):
            if not _is_session_id(path.stem):
                continue
            session = self.get(path.stem)
            summaries.append(SessionSummary(
                session_id=session.session_id,
                role=session.role,
                platform_label=session.platform_label,
                status=session.status,
                updated_at=session.updated_at,
                answered=len(session.responses),
            ))
        summaries.sort(key=lambda s: (s.updated_at, s.session_id))
        self._write_index(summaries)
        return summaries

    def _write_index(self, summaries: list[SessionSummary]) -> None:
        index = {
            "generated_at": to_rfc3339(self._clock()),
            "sessions": [
                {
                    "session_id": s.session_id,
                    "role": s.role.value,
                    "platform_label": s.platform_label,
                    "status": s.status.value,
                    "updated_at": to_rfc3339(s.updated_at),
                    "answered": s.answered,
                }
                for s in summaries
            ],
        }
        path = self.data_dir / "index.json"
        tmp = path.with_suffix(".json.tmp")
        try:
            tmp.write_text(
                json.dumps(index, indent=2, ensure_ascii=False) + "\n",
                encoding="utf-8",
            )
            os.replace(tmp, path)
        except OSError:
            pass  # the index is a rebuildable cache, never authoritative

    def compare(self, baseline_id: str, comparison_id: str) -> SessionDelta:
        """Per-type raw-total deltas between two finalized same-role sessions."""
        baseline = self.get(baseline_id)
        comparison = self.get(comparison_id)
        for session in (baseline, comparison):
            if not session.finalized:
                raise NotFinalized(f"session {session.session_id} is not finalized")
        if baseline.role is not comparison.role:
            raise RoleMismatch(
                f"cannot compare {baseline.role.value} session with "
                f"{comparison.role.value} session"
            )
        if baseline.bank_hash != comparison.bank_hash:
            raise BankMismatch("sessions reference different banks")
        self._check_bank(baseline)
        per_type = {}
        for debt_type in DebtType:
            base = type_total(
                self.bank, baseline.responses.values(), debt_type, baseline.role
            )
            comp = type_total(
                self.bank, comparison.responses.values(), debt_type, comparison.role
            )
            per_type[debt_type] = comp.raw_total - base.raw_total
        return SessionDelta(
            baseline_id=baseline_id,
            comparison_id=comparison_id,
            per_type_delta=per_type,
            total_delta=sum(per_type.values()),
        )
