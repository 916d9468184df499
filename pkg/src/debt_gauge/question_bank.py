"""Question bank: taxonomy types, canonical data access, loading, validation.

The bank is a versioned, hash-pinned collection of questions plus one
descriptor per debt type. Banks are immutable after load and safe to share
across threads; all mutation-free queries live here.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import IO, Union

from . import bank_data


class DebtType(str, Enum):
    """Closed set of 18 debt categories; values are the wire identifiers."""

    ACCESSIBILITY = "Accessibility"
    ALGORITHM = "Algorithm"
    ARCHITECTURAL_DESIGN = "ArchitecturalDesign"
    BUILD = "Build"
    CODE = "Code"
    CONFIGURATION = "Configuration"
    DATA = "Data"
    DEFECT = "Defect"
    DOCUMENTATION = "Documentation"
    ETHICS = "Ethics"
    INFRASTRUCTURE = "Infrastructure"
    MODEL = "Model"
    PEOPLE_SOCIAL = "PeopleSocial"
    PROCESS = "Process"
    REQUIREMENTS = "Requirements"
    SELF_ADMITTED = "SelfAdmitted"
    TEST = "Test"
    VERSIONING = "Versioning"

    @property
    def label(self) -> str:
        """Human-facing label used in rendered reports."""
        return _TYPE_LABELS[self]


_TYPE_LABELS = {
    DebtType.ACCESSIBILITY: "Accessibility",
    DebtType.ALGORITHM: "Algorithm",
    DebtType.ARCHITECTURAL_DESIGN: "Architectural – Design",
    DebtType.BUILD: "Build",
    DebtType.CODE: "Code",
    DebtType.CONFIGURATION: "Configuration",
    DebtType.DATA: "Data",
    DebtType.DEFECT: "Defect",
    DebtType.DOCUMENTATION: "Documentation",
    DebtType.ETHICS: "Ethics",
    DebtType.INFRASTRUCTURE: "Infrastructure",
    DebtType.MODEL: "Model",
    DebtType.PEOPLE_SOCIAL: "People – Social",
    DebtType.PROCESS: "Process",
    DebtType.REQUIREMENTS: "Requirements",
    DebtType.SELF_ADMITTED: "Self-Admitted (SATD)",
    DebtType.TEST: "Test",
    DebtType.VERSIONING: "Versioning",
}

# Published per-type distribution the validator cross-checks. The shipped
# bank intentionally deviates for Requirements (3 shipped vs 5 published);
# validation surfaces that as a warning, never an error.
PUBLISHED_TYPE_COUNTS = {
    DebtType.ACCESSIBILITY: 3,
    DebtType.ALGORITHM: 1,
    DebtType.ARCHITECTURAL_DESIGN: 5,
    DebtType.BUILD: 2,
    DebtType.CODE: 1,
    DebtType.CONFIGURATION: 3,
    DebtType.DATA: 6,
    DebtType.DEFECT: 5,
    DebtType.DOCUMENTATION: 5,
    DebtType.ETHICS: 2,
    DebtType.INFRASTRUCTURE: 4,
    DebtType.MODEL: 3,
    DebtType.PEOPLE_SOCIAL: 2,
    DebtType.PROCESS: 3,
    DebtType.REQUIREMENTS: 5,
    DebtType.SELF_ADMITTED: 10,
    DebtType.TEST: 7,
    DebtType.VERSIONING: 3,
}
PUBLISHED_TOTAL = 68

MIN_WEIGHT = 1
MAX_WEIGHT = 5
# Questionnaire design targets weights of 3+; lower weights are legal but
# flagged so bank authors notice them.
LOW_WEIGHT_THRESHOLD = 3


class Stakeholder(str, Enum):
    """Respondent group a question is routed to; values are the only
    accepted bank-file strings."""

    ORGANIZER = "Organizers"
    PARTICIPANT = "Participants"
    BOTH = "Organizers & Participants"


class Role(str, Enum):
    """A concrete respondent role (sessions never run as Both)."""

    ORGANIZER = "organizer"
    PARTICIPANT = "participant"

    @property
    def stakeholder(self) -> Stakeholder:
        return (
            Stakeholder.ORGANIZER
            if self is Role.ORGANIZER
            else Stakeholder.PARTICIPANT
        )


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    severity: Severity
    message: str

    def __str__(self) -> str:
        return f"{self.severity.value}: {self.message}"


class BankError(Exception):
    """Base for bank loading/validation failures."""


class ParseError(BankError):
    """Bank file is not well-formed (syntax or structure)."""


class ValidationError(BankError):
    """Bank content violates an invariant; carries the findings."""

    def __init__(self, findings: list[Finding]):
        self.findings = findings
        errors = [f.message for f in findings if f.severity is Severity.ERROR]
        super().__init__("; ".join(errors) or "bank validation failed")


class HashMismatch(BankError):
    """Declared content_hash does not match the recomputed digest."""


@dataclass(frozen=True)
class Question:
    id: int
    debt_type: DebtType
    stakeholder: Stakeholder
    weight: int
    text: str
    justification: str
    example: str
    erratum_note: str | None = None

    def applies_to(self, role: Role) -> bool:
        return self.stakeholder in (role.stakeholder, Stakeholder.BOTH)


@dataclass(frozen=True)
class DebtTypeDescriptor:
    debt_type: DebtType
    definition: str
    problem: str
    example: str


@dataclass(frozen=True)
class QuestionBank:
    schema_version: str
    bank_version: str
    questions: tuple[Question, ...]
    descriptors: tuple[DebtTypeDescriptor, ...]
    content_hash: str

    @cached_property
    def by_id(self) -> dict[int, Question]:
        return {q.id: q for q in self.questions}

    def question(self, question_id: int) -> Question | None:
        return self.by_id.get(question_id)


SUPPORTED_SCHEMA_VERSION = "1"

_QUESTION_KEYS = {
    "id", "type", "stakeholder", "weight", "text", "justification",
    "example", "erratum_note",
}
_DESCRIPTOR_KEYS = {"type", "definition", "problem", "example"}


def _question_payload(q: Question) -> dict:
    payload = {
        "id": q.id,
        "type": q.debt_type.value,
        "stakeholder": q.stakeholder.value,
        "weight": q.weight,
        "text": q.text,
        "justification": q.justification,
        "example": q.example,
    }
    if q.erratum_note is not None:
        payload["erratum_note"] = q.erratum_note
    return payload


def _bank_payload(bank: QuestionBank) -> dict:
    """Bank document without the content_hash field."""
    return {
        "schema_version": bank.schema_version,
        "bank_version": bank.bank_version,
        "questions": [_question_payload(q) for q in bank.questions],
        "descriptors": [
            {
                "type": d.debt_type.value,
                "definition": d.definition,
                "problem": d.problem,
                "example": d.example,
            }
            for d in bank.descriptors
        ],
    }


def compute_content_hash(payload: dict) -> str:
    """SHA-256 over the canonical serialization: content_hash omitted, keys
    sorted, no insignificant whitespace, UTF-8."""
    payload = {k: v for k, v in payload.items() if k != "content_hash"}
    canonical = json.dumps(
        payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def serialize_bank(bank: QuestionBank) -> bytes:
    """Deterministic on-disk form: pretty-printed UTF-8 JSON."""
    doc = _bank_payload(bank)
    doc["content_hash"] = bank.content_hash
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _structural_error(message: str) -> ParseError:
    return ParseError(f"bank file structure: {message}")


def _check_string(obj: dict, key: str, where: str) -> str:
    value = obj.get(key)
    if not isinstance(value, str):
        raise _structural_error(f"{where}: field '{key}' must be a string")
    return value


def _parse_document(raw: bytes | str) -> dict:
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"bank file is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bank file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise _structural_error("top level must be an object")
    for field_name in ("schema_version", "bank_version", "content_hash"):
        _check_string(doc, field_name, "top level")
    for field_name in ("questions", "descriptors"):
        if not isinstance(doc.get(field_name), list):
            raise _structural_error(f"top level: field '{field_name}' must be an array")
    if doc["schema_version"] != SUPPORTED_SCHEMA_VERSION:
        raise _structural_error(
            f"unsupported schema_version {doc['schema_version']!r} "
            f"(supported: {SUPPORTED_SCHEMA_VERSION!r})"
        )
    for i, item in enumerate(doc["questions"]):
        where = f"questions[{i}]"
        if not isinstance(item, dict):
            raise _structural_error(f"{where}: must be an object")
        unknown = set(item) - _QUESTION_KEYS
        if unknown:
            raise _structural_error(f"{where}: unknown fields {sorted(unknown)}")
        if not isinstance(item.get("id"), int) or isinstance(item.get("id"), bool):
            raise _structural_error(f"{where}: field 'id' must be an integer")
        if not isinstance(item.get("weight"), int) or isinstance(item.get("weight"), bool):
            raise _structural_error(f"{where}: field 'weight' must be an integer")
        for key in ("type", "stakeholder", "text", "justification", "example"):
            _check_string(item, key, where)
        if "erratum_note" in item and not isinstance(item["erratum_note"], str):
            raise _structural_error(f"{where}: field 'erratum_note' must be a string")
    for i, item in enumerate(doc["descriptors"]):
        where = f"descriptors[{i}]"
        if not isinstance(item, dict):
            raise _structural_error(f"{where}: must be an object")
        unknown = set(item) - _DESCRIPTOR_KEYS
        if unknown:
            raise _structural_error(f"{where}: unknown fields {sorted(unknown)}")
        for key in _DESCRIPTOR_KEYS:
            _check_string(item, key, where)
    return doc


def _raw_findings(doc: dict) -> list[Finding]:
    """Semantic checks that must run before enum conversion."""
    findings: list[Finding] = []
    valid_types = {t.value for t in DebtType}
    valid_stakeholders = {s.value for s in Stakeholder}
    for item in doc["questions"]:
        qid = item["id"]
        if item["type"] not in valid_types:
            findings.append(Finding(
                Severity.ERROR, f"question {qid}: unknown debt type {item['type']!r}"
            ))
        if item["stakeholder"] not in valid_stakeholders:
            findings.append(Finding(
                Severity.ERROR,
                f"question {qid}: unknown stakeholder {item['stakeholder']!r}",
            ))
    for item in doc["descriptors"]:
        if item["type"] not in valid_types:
            findings.append(Finding(
                Severity.ERROR, f"descriptor: unknown debt type {item['type']!r}"
            ))
    return findings


def validate_bank(bank: QuestionBank) -> list[Finding]:
    """Integrity findings for a parsed bank. Errors make the bank unusable;
    warnings record known deviations from the published distribution."""
    findings: list[Finding] = []
    if not bank.questions:
        return [Finding(Severity.ERROR, "no questions")]

    seen_ids: set[int] = set()
    for q in bank.questions:
        if q.id < 1:
            findings.append(Finding(
                Severity.ERROR, f"question {q.id}: id must be a positive integer"
            ))
        if q.id in seen_ids:
            findings.append(Finding(Severity.ERROR, f"duplicate question id {q.id}"))
        seen_ids.add(q.id)
        if not MIN_WEIGHT <= q.weight <= MAX_WEIGHT:
            findings.append(Finding(
                Severity.ERROR,
                f"question {q.id}: weight {q.weight} outside "
                f"{MIN_WEIGHT}-{MAX_WEIGHT}",
            ))
        elif q.weight < LOW_WEIGHT_THRESHOLD:
            findings.append(Finding(
                Severity.WARNING,
                f"question {q.id}: weight {q.weight} is below the intended "
                f"minimum of {LOW_WEIGHT_THRESHOLD}",
            ))
        if not q.text.strip():
            findings.append(Finding(Severity.ERROR, f"question {q.id}: empty text"))
        if not q.justification.strip():
            findings.append(Finding(
                Severity.ERROR, f"question {q.id}: empty justification"
            ))

    counts = {t: 0 for t in DebtType}
    for q in bank.questions:
        counts[q.debt_type] += 1
    for debt_type in DebtType:
        if counts[debt_type] == 0:
            findings.append(Finding(
                Severity.ERROR, f"no questions for debt type {debt_type.value}"
            ))
        elif counts[debt_type] != PUBLISHED_TYPE_COUNTS[debt_type]:
            findings.append(Finding(
                Severity.WARNING,
                f"{debt_type.value}: {counts[debt_type]} question(s) in bank, "
                f"published distribution says {PUBLISHED_TYPE_COUNTS[debt_type]}",
            ))
    if len(bank.questions) != PUBLISHED_TOTAL:
        findings.append(Finding(
            Severity.WARNING,
            f"bank has {len(bank.questions)} questions, published total "
            f"is {PUBLISHED_TOTAL}",
        ))

    described = [d.debt_type for d in bank.descriptors]
    for debt_type in DebtType:
        n = described.count(debt_type)
        if n > 1:
            findings.append(Finding(
                Severity.ERROR, f"duplicate descriptor for {debt_type.value}"
            ))
        elif n == 0:
            findings.append(Finding(
                Severity.WARNING, f"no descriptor for {debt_type.value}"
            ))
    for d in bank.descriptors:
        if not d.definition.strip():
            findings.append(Finding(
                Severity.ERROR, f"descriptor {d.debt_type.value}: empty definition"
            ))
    return findings


def has_errors(findings: list[Finding]) -> bool:
    return any(f.severity is Severity.ERROR for f in findings)


def _build_bank(doc: dict, content_hash: str) -> QuestionBank:
    questions = tuple(
        Question(
            id=item["id"],
            debt_type=DebtType(item["type"]),
            stakeholder=Stakeholder(item["stakeholder"]),
            weight=item["weight"],
            text=item["text"],
            justification=item["justification"],
            example=item["example"],
            erratum_note=item.get("erratum_note"),
        )
        for item in doc["questions"]
    )
    descriptors = tuple(
        DebtTypeDescriptor(
            debt_type=DebtType(item["type"]),
            definition=item["definition"],
            problem=item["problem"],
            example=item["example"],
        )
        for item in doc["descriptors"]
    )
    return QuestionBank(
        schema_version=doc["schema_version"],
        bank_version=doc["bank_version"],
        questions=questions,
        descriptors=descriptors,
        content_hash=content_hash,
    )


def load_bank(source: Union[bytes, str, IO[bytes]]) -> QuestionBank:
    """Parse, validate, and hash-check a bank document.

    Raises ParseError for malformed input, ValidationError when any
    error-severity finding exists, and HashMismatch when the declared
    content_hash differs from the recomputed one.
    """
    if hasattr(source, "read"):
        source = source.read()
    doc = _parse_document(source)
    findings = _raw_findings(doc)
    if has_errors(findings):
        raise ValidationError(findings)
    recomputed = compute_content_hash(doc)
    bank = _build_bank(doc, recomputed)
    findings.extend(validate_bank(bank))
    if has_errors(findings):
        raise ValidationError(findings)
    declared = doc["content_hash"]
    if declared != recomputed:
        raise HashMismatch(
            f"declared content_hash {declared} does not match recomputed "
            f"{recomputed}"
        )
    return bank


@lru_cache(maxsize=1)
def canonical_bank() -> QuestionBank:
    """The embedded canonical bank (always validates without errors)."""
    doc = {
        "schema_version": bank_data.SCHEMA_VERSION,
        "bank_version": bank_data.BANK_VERSION,
        "questions": bank_data.QUESTIONS,
        "descriptors": bank_data.DESCRIPTORS,
    }
    bank = _build_bank(doc, compute_content_hash(doc))
    findings = validate_bank(bank)
    if has_errors(findings):  # pragma: no cover - would be a packaging bug
        raise ValidationError(findings)
    return bank


def canonical_bank_bytes() -> bytes:
    """On-disk form of the embedded bank (what bank/canonical.json holds)."""
    return serialize_bank(canonical_bank())


def applicable_questions(bank: QuestionBank, role: Role) -> list[Question]:
    """Questions routed to the given role (its own plus Both), in id order."""
    return sorted(
        (q for q in bank.questions if q.applies_to(role)), key=lambda q: q.id
    )


def questions_by_type(bank: QuestionBank, debt_type: DebtType) -> list[Question]:
    """All questions of one debt type, in id order."""
    return sorted(
        (q for q in bank.questions if q.debt_type is debt_type),
        key=lambda q: q.id,
    )


def descriptor_for(bank: QuestionBank, debt_type: DebtType) -> DebtTypeDescriptor | None:
    for d in bank.descriptors:
        if d.debt_type is debt_type:
            return d
    return None
