from __future__ import annotations

import json
import os
import random

import pytest

from conftest import fill_session, random_answers

from debt_gauge.question_bank import DebtType, Role, applicable_questions
from debt_gauge.report import Audience, ReportFormat, build_report, render
from debt_gauge.scoring import AnswerValue, UnknownQuestion
from debt_gauge.session_store import (
    AlreadyFinalized,
    BankMismatch,
    EmptyLabel,
    IncompleteSession,
    NotFinalized,
    QuestionNotApplicable,
    RevisionConflict,
    RoleMismatch,
    SessionFinalized,
    SessionNotFound,
    SessionStatus,
    SessionStore,
    StorageError,
    from_rfc3339,
    to_rfc3339,
)


class TestCreate:
    def test_fresh_session(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame-2024")
        assert session.responses == {}
        assert session.status is SessionStatus.IN_PROGRESS
        assert session.revision == 0
        assert session.bank_hash == store.bank.content_hash
        assert len(session.session_id) == 32

    def test_empty_label_rejected(self, store):
        with pytest.raises(EmptyLabel):
            store.create_session(Role.PARTICIPANT, "")
        with pytest.raises(EmptyLabel):
            store.create_session(Role.PARTICIPANT, "   ")

    def test_distinct_ids(self, store):
        a = store.create_session(Role.ORGANIZER, "x")
        b = store.create_session(Role.ORGANIZER, "x")
        assert a.session_id != b.session_id


class TestRecordAnswer:
    def test_answer_and_reanswer(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        session = store.record_answer(
            session.session_id, 66, AnswerValue.YES, session.revision
        )
        assert len(session.responses) == 1
        assert session.revision == 1
        session = store.record_answer(
            session.session_id, 66, AnswerValue.NO, session.revision
        )
        assert len(session.responses) == 1  # upsert, not append
        assert session.responses[66].answer is AnswerValue.NO
        assert session.revision == 2

    def test_participant_question_refused_for_organizer(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        with pytest.raises(QuestionNotApplicable):
            store.record_answer(session.session_id, 13, AnswerValue.YES, 0)

    def test_unknown_question(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        with pytest.raises(UnknownQuestion):
            store.record_answer(session.session_id, 999, AnswerValue.YES, 0)

    def test_stale_revision_conflict_leaves_state_untouched(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        store.record_answer(session.session_id, 66, AnswerValue.YES, 0)
        with pytest.raises(RevisionConflict):
            store.record_answer(session.session_id, 67, AnswerValue.NO, 0)
        reloaded = store.get(session.session_id)
        assert reloaded.revision == 1
        assert set(reloaded.responses) == {66}

    def test_unknown_session(self, store):
        with pytest.raises(SessionNotFound):
            store.record_answer("f" * 32, 66, AnswerValue.YES, 0)

    def test_revision_increments_by_one_per_mutation(self, store):
        session = store.create_session(Role.PARTICIPANT, "RLGame")
        for i, q in enumerate(
            applicable_questions(store.bank, Role.PARTICIPANT)[:10]
        ):
            session = store.record_answer(
                session.session_id, q.id, AnswerValue.YES, session.revision
            )
            assert session.revision == i + 1


class TestFinalize:
    def test_complete_session_finalizes(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        session = fill_session(store, session, lambda q: AnswerValue.YES)
        session = store.finalize(session.session_id)
        assert session.finalized
        # enumerate coverage: every applicable question carries a response
        applicable = {q.id for q in applicable_questions(store.bank, session.role)}
        assert set(session.responses) == applicable

    def test_incomplete_lists_missing_ids(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        questions = applicable_questions(store.bank, Role.ORGANIZER)
        for q in questions[:-1]:
            session = store.record_answer(
                session.session_id, q.id, AnswerValue.NO, session.revision
            )
        with pytest.raises(IncompleteSession) as excinfo:
            store.finalize(session.session_id)
        assert excinfo.value.unanswered == [questions[-1].id]

    def test_finalize_twice(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        session = fill_session(store, session, lambda q: AnswerValue.NO)
        store.finalize(session.session_id)
        with pytest.raises(AlreadyFinalized):
            store.finalize(session.session_id)

    def test_finalized_session_is_immutable(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        session = fill_session(store, session, lambda q: AnswerValue.NO)
        session = store.finalize(session.session_id)
        with pytest.raises(SessionFinalized):
            store.record_answer(
                session.session_id, 66, AnswerValue.YES, session.revision
            )


class TestPersistence:
    def test_reload_across_store_instances(self, store, bank, tmp_path):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        session = store.record_answer(
            session.session_id, 66, AnswerValue.YES, session.revision
        )
        other = SessionStore(store.data_dir, bank)
        reloaded = other.get(session.session_id)
        assert reloaded == session

    def test_save_load_report_bytes_identical(self, store, bank):
        rng = random.Random(23)
        for _ in range(10):
            session = store.create_session(Role.PARTICIPANT, "RLGame")
            session = fill_session(
                store,
                session,
                lambda q: rng.choice(list(AnswerValue)),
            )
            session = store.finalize(session.session_id)
            reloaded = store.get(session.session_id)
            for audience in Audience:
                for fmt in ReportFormat:
                    direct = render(build_report(bank, session, audience), fmt)
                    via_disk = render(build_report(bank, reloaded, audience), fmt)
                    assert direct == via_disk

    def test_timestamps_are_rfc3339_utc(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        raw = json.loads(
            (store.sessions_dir / f"{session.session_id}.json").read_text()
        )
        assert raw["created_at"].endswith("Z")
        assert from_rfc3339(raw["created_at"]) == session.created_at
        assert to_rfc3339(from_rfc3339(raw["updated_at"])) == raw["updated_at"]

    def test_crash_between_write_and_rename_leaves_old_state(
        self, store, monkeypatch
    ):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        session = store.record_answer(
            session.session_id, 66, AnswerValue.YES, session.revision
        )
        before = (store.sessions_dir / f"{session.session_id}.json").read_bytes()

        def crash(src, dst):
            raise OSError("injected crash before rename")

        monkeypatch.setattr(os, "replace", crash)
        with pytest.raises(StorageError):
            store.record_answer(
                session.session_id, 67, AnswerValue.NO, session.revision
            )
        monkeypatch.undo()
        after = (store.sessions_dir / f"{session.session_id}.json").read_bytes()
        assert after == before  # old state intact, not torn
        reloaded = store.get(session.session_id)
        assert set(reloaded.responses) == {66}

    def test_corrupt_file_reported_as_storage_error(self, store):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        path = store.sessions_dir / f"{session.session_id}.json"
        path.write_text(path.read_text()[: 40])
        with pytest.raises(StorageError):
            store.get(session.session_id)


class TestBankPinning:
    def test_answering_against_a_different_bank_is_rejected(
        self, store, bank, tmp_path
    ):
        session = store.create_session(Role.ORGANIZER, "RLGame")
        # same data dir, different bank content (one weight tweaked)
        from debt_gauge.question_bank import canonical_bank_bytes, load_bank
        import debt_gauge.question_bank as qb

        doc = json.loads(canonical_bank_bytes())
        doc["questions"][0]["weight"] = 4
        doc["content_hash"] = qb.compute_content_hash(doc)
        other_bank = load_bank(json.dumps(doc, ensure_ascii=False).encode())
        other_store = SessionStore(store.data_dir, other_bank)
        with pytest.raises(BankMismatch):
            other_store.record_answer(
                session.session_id, 66, AnswerValue.YES, session.revision
            )
        with pytest.raises(BankMismatch):
            other_store.finalize(session.session_id)


class TestListing:
    def test_list_and_index_rebuild(self, store):
        a = store.create_session(Role.ORGANIZER, "alpha")
        b = store.create_session(Role.PARTICIPANT, "beta")
        summaries = store.list_sessions()
        assert {s.session_id for s in summaries} == {a.session_id, b.session_id}
        index = json.loads((store.data_dir / "index.json").read_text())
        assert len(index["sessions"]) == 2
        # the index is a cache: deleting it changes nothing
        (store.data_dir / "index.json").unlink()
        assert len(store.list_sessions()) == 2


class TestCompare:
    def _finalized(self, store, role, answer_for):
        session = store.create_session(role, "RLGame")
        session = fill_session(store, session, answer_for)
        return store.finalize(session.session_id)

    def test_identical_sessions_all_zero(self, store):
        a = self._finalized(store, Role.ORGANIZER, lambda q: AnswerValue.NO)
        b = self._finalized(store, Role.ORGANIZER, lambda q: AnswerValue.NO)
        delta = store.compare(a.session_id, b.session_id)
        assert delta.total_delta == 0
        assert all(v == 0 for v in delta.per_type_delta.values())

    def test_single_flip_delta(self, store, bank):
        # Q66 has weight 5; flipping No -> Yes moves the total by -2w = -10
        a = self._finalized(store, Role.ORGANIZER, lambda q: AnswerValue.NO)
        b = self._finalized(
            store,
            Role.ORGANIZER,
            lambda q: AnswerValue.YES if q.id == 66 else AnswerValue.NO,
        )
        delta = store.compare(a.session_id, b.session_id)
        assert delta.per_type_delta[DebtType.ACCESSIBILITY] == -10
        assert delta.total_delta == -10
        assert delta.total_delta == sum(delta.per_type_delta.values())

    def test_role_mismatch(self, store):
        a = self._finalized(store, Role.ORGANIZER, lambda q: AnswerValue.NO)
        b = self._finalized(store, Role.PARTICIPANT, lambda q: AnswerValue.NO)
        with pytest.raises(RoleMismatch):
            store.compare(a.session_id, b.session_id)

    def test_not_finalized(self, store):
        a = self._finalized(store, Role.ORGANIZER, lambda q: AnswerValue.NO)
        b = store.create_session(Role.ORGANIZER, "RLGame")
        with pytest.raises(NotFinalized):
            store.compare(a.session_id, b.session_id)


class TestRandomizedRoundTrips:
    def test_hundred_sessions_roundtrip(self, store, bank):
        rng = random.Random(29)
        for _ in range(25):
            answers = random_answers(bank, rng, full=True, role=Role.ORGANIZER)
            session = store.create_session(Role.ORGANIZER, "RLGame")
            for qid, ans in answers.items():
                session = store.record_answer(
                    session.session_id, qid, ans, session.revision
                )
            session = store.finalize(session.session_id)
            assert store.get(session.session_id) == session
