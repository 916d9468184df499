from __future__ import annotations

import json
from pathlib import Path

import pytest

from debt_gauge.question_bank import (
    PUBLISHED_TYPE_COUNTS,
    DebtType,
    Finding,
    HashMismatch,
    ParseError,
    Role,
    Severity,
    Stakeholder,
    ValidationError,
    applicable_questions,
    canonical_bank,
    canonical_bank_bytes,
    compute_content_hash,
    descriptor_for,
    load_bank,
    questions_by_type,
    serialize_bank,
    validate_bank,
)

# Frozen regression values, derived by enumerating the canonical bank's
# stakeholder routing (see test_routing_counts_by_enumeration).
ORGANIZER_APPLICABLE = 46
PARTICIPANT_APPLICABLE = 43
ORGANIZER_WEIGHT_SUM = 191
PARTICIPANT_WEIGHT_SUM = 170


def _doc() -> dict:
    return json.loads(canonical_bank_bytes().decode("utf-8"))


def _rehash_bytes(doc: dict) -> bytes:
    doc["content_hash"] = compute_content_hash(doc)
    return json.dumps(doc, ensure_ascii=False).encode("utf-8")


class TestCanonicalBank:
    def test_has_68_questions(self, bank):
        assert len(bank.questions) == 68
        assert [q.id for q in bank.questions] == list(range(1, 69))

    def test_per_type_counts(self, bank):
        counts = {t: len(questions_by_type(bank, t)) for t in DebtType}
        for debt_type, count in counts.items():
            if debt_type is DebtType.REQUIREMENTS:
                # Known deviation from the published distribution (3 vs 5)
                assert count == 3
            else:
                assert count == PUBLISHED_TYPE_COUNTS[debt_type], debt_type

    def test_every_type_has_questions(self, bank):
        assert all(questions_by_type(bank, t) for t in DebtType)

    def test_partition_property(self, bank):
        total = sum(len(questions_by_type(bank, t)) for t in DebtType)
        assert total == len(bank.questions)

    def test_validation_yields_warnings_only(self, bank):
        findings = validate_bank(bank)
        assert findings, "expected the two known warnings"
        assert all(f.severity is Severity.WARNING for f in findings)
        messages = " | ".join(f.message for f in findings)
        assert "question 4" in messages and "weight 2" in messages
        assert "Requirements" in messages

    def test_descriptors_cover_all_types(self, bank):
        assert len(bank.descriptors) == 18
        for debt_type in DebtType:
            descriptor = descriptor_for(bank, debt_type)
            assert descriptor is not None
            assert descriptor.definition.strip()
            assert descriptor.problem.strip()
            assert descriptor.example.strip()

    def test_weights_in_range(self, bank):
        assert all(1 <= q.weight <= 5 for q in bank.questions)

    def test_erratum_notes_on_duplicated_wordings(self, bank):
        noted = {q.id for q in bank.questions if q.erratum_note}
        assert noted == {7, 8, 10, 11, 12}
        assert bank.by_id[7].text == bank.by_id[8].text
        assert bank.by_id[10].text == bank.by_id[11].text == bank.by_id[12].text

    def test_hash_recomputes_identically(self, bank):
        doc = _doc()
        assert doc["content_hash"] == bank.content_hash
        assert compute_content_hash(doc) == bank.content_hash

    def test_shipped_bank_file_matches_embedded_bank(self):
        shipped = Path(__file__).parent.parent / "bank" / "canonical.json"
        assert shipped.read_bytes() == canonical_bank_bytes()


class TestRouting:
    def test_routing_counts_by_enumeration(self, bank):
        # Independent enumeration straight off the stakeholder fields
        organizer = [
            q for q in bank.questions
            if q.stakeholder in (Stakeholder.ORGANIZER, Stakeholder.BOTH)
        ]
        participant = [
            q for q in bank.questions
            if q.stakeholder in (Stakeholder.PARTICIPANT, Stakeholder.BOTH)
        ]
        assert len(organizer) == ORGANIZER_APPLICABLE
        assert len(participant) == PARTICIPANT_APPLICABLE
        assert sum(q.weight for q in organizer) == ORGANIZER_WEIGHT_SUM
        assert sum(q.weight for q in participant) == PARTICIPANT_WEIGHT_SUM
        assert applicable_questions(bank, Role.ORGANIZER) == organizer
        assert applicable_questions(bank, Role.PARTICIPANT) == participant

    def test_union_and_intersection(self, bank):
        organizer = {q.id for q in applicable_questions(bank, Role.ORGANIZER)}
        participant = {q.id for q in applicable_questions(bank, Role.PARTICIPANT)}
        both = {q.id for q in bank.questions if q.stakeholder is Stakeholder.BOTH}
        assert organizer | participant == {q.id for q in bank.questions}
        assert organizer & participant == both

    def test_participant_gets_data_questions_not_code(self, bank):
        participant_ids = {
            q.id for q in applicable_questions(bank, Role.PARTICIPANT)
        }
        assert {13, 14, 15, 16, 17, 18} <= participant_ids  # participant data debt
        assert 9 not in participant_ids  # organizer-routed code debt

    def test_id_order_preserved(self, bank):
        for role in Role:
            ids = [q.id for q in applicable_questions(bank, role)]
            assert ids == sorted(ids)

    def test_both_only_bank_routes_to_everyone(self, bank):
        doc = _doc()
        doc["questions"] = [
            dict(q, stakeholder=Stakeholder.BOTH.value) for q in doc["questions"]
        ]
        loaded = load_bank(_rehash_bytes(doc))
        for role in Role:
            assert len(applicable_questions(loaded, role)) == 68


class TestQueriesByType:
    def test_accessibility(self, bank):
        assert [q.id for q in questions_by_type(bank, DebtType.ACCESSIBILITY)] == [
            66, 67, 68,
        ]

    def test_self_admitted(self, bank):
        assert [q.id for q in questions_by_type(bank, DebtType.SELF_ADMITTED)] == (
            list(range(46, 56))
        )

    def test_algorithm_single_question(self, bank):
        assert [q.id for q in questions_by_type(bank, DebtType.ALGORITHM)] == [1]


class TestLoadAndValidate:
    def test_round_trip(self, bank):
        assert load_bank(serialize_bank(bank)) == bank

    def test_weight_out_of_range_rejected(self):
        doc = _doc()
        doc["questions"][0]["weight"] = 7
        with pytest.raises(ValidationError) as excinfo:
            load_bank(_rehash_bytes(doc))
        assert any("weight 7" in f.message for f in excinfo.value.findings)

    def test_duplicate_id_rejected(self):
        doc = _doc()
        doc["questions"][5]["id"] = 12
        with pytest.raises(ValidationError) as excinfo:
            load_bank(_rehash_bytes(doc))
        assert any("duplicate" in f.message for f in excinfo.value.findings)

    def test_empty_bank_rejected(self):
        doc = _doc()
        doc["questions"] = []
        with pytest.raises(ValidationError) as excinfo:
            load_bank(_rehash_bytes(doc))
        assert any("no questions" in f.message for f in excinfo.value.findings)

    def test_empty_text_rejected(self):
        doc = _doc()
        doc["questions"][3]["text"] = "   "
        with pytest.raises(ValidationError):
            load_bank(_rehash_bytes(doc))

    def test_unknown_type_rejected(self):
        doc = _doc()
        doc["questions"][0]["type"] = "Gremlins"
        with pytest.raises(ValidationError) as excinfo:
            load_bank(_rehash_bytes(doc))
        assert any("unknown debt type" in f.message for f in excinfo.value.findings)

    def test_unknown_stakeholder_rejected(self):
        doc = _doc()
        doc["questions"][0]["stakeholder"] = "Organizer"  # singular: not accepted
        with pytest.raises(ValidationError):
            load_bank(_rehash_bytes(doc))

    def test_hash_mismatch(self):
        doc = _doc()
        doc["content_hash"] = "0" * 64
        with pytest.raises(HashMismatch):
            load_bank(json.dumps(doc).encode("utf-8"))

    def test_tampered_content_fails_hash_check(self):
        doc = _doc()
        doc["questions"][0]["text"] += " (edited)"
        with pytest.raises(HashMismatch):
            load_bank(json.dumps(doc, ensure_ascii=False).encode("utf-8"))

    def test_malformed_json(self):
        with pytest.raises(ParseError):
            load_bank(b"{not json")

    def test_truncated_file(self):
        raw = canonical_bank_bytes()
        with pytest.raises(ParseError):
            load_bank(raw[: len(raw) // 2])

    def test_missing_field(self):
        doc = _doc()
        del doc["bank_version"]
        with pytest.raises(ParseError):
            load_bank(json.dumps(doc).encode("utf-8"))

    def test_padded_requirements_shifts_warnings(self):
        doc = _doc()
        template = next(
            q for q in doc["questions"] if q["type"] == "Requirements"
        )
        for offset in range(2):
            extra = dict(template)
            extra["id"] = 69 + offset
            extra["text"] = f"Synthetic requirements check {offset + 1}?"
            doc["questions"].append(extra)
        loaded = load_bank(_rehash_bytes(doc))
        messages = [f.message for f in validate_bank(loaded)]
        assert not any("Requirements" in m for m in messages)
        assert any("70 questions" in m for m in messages)

    def test_findings_render_with_severity(self):
        finding = Finding(Severity.WARNING, "something odd")
        assert str(finding) == "warning: something odd"
