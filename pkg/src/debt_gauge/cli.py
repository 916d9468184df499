"""`debt-gauge` command line.

Exit codes: 0 ok, 1 I/O or unreadable bank, 2 bank invalid, 3 not found,
4 precondition failure (conflicts, mismatches, incomplete sessions).
"""
from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from .question_bank import (
    HashMismatch,
    ParseError,
    QuestionBank,
    Question,
    Role,
    ValidationError,
    applicable_questions,
    canonical_bank,
    canonical_bank_bytes,
    load_bank,
    validate_bank,
)
from .report import Audience, ReportFormat, build_report, render
from .scoring import AnswerValue
from .session_store import (
    AssessmentSession,
    SessionDelta,
    SessionNotFound,
    SessionStore,
    StorageError,
    StoreError,
    to_rfc3339,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_BANK_INVALID = 2
EXIT_NOT_FOUND = 3
EXIT_PRECONDITION = 4

DEFAULT_DATA_DIR = "debt-gauge-data"

_ANSWER_KEYS = {
    "y": AnswerValue.YES,
    "n": AnswerValue.NO,
    "a": AnswerValue.NOT_APPLICABLE,
    "d": AnswerValue.DONT_KNOW,
}

_PROMPT = (
    "Answer [Y]es / [N]o / [A] not applicable / [D] don't know / "
    "[J] justification / [E] example / [S]kip / [Q] save and quit"
)


@dataclass
class CliConfig:
    data_dir: Path
    bank_path: Path | None


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _exit_code_for(exc: StoreError) -> int:
    if isinstance(exc, SessionNotFound):
        return EXIT_NOT_FOUND
    if isinstance(exc, StorageError):
        return EXIT_IO
    return EXIT_PRECONDITION


def _read_bank_bytes(config: CliConfig) -> bytes:
    if config.bank_path is None:
        return canonical_bank_bytes()
    try:
        return config.bank_path.read_bytes()
    except OSError as exc:
        _fail(f"cannot read bank file: {exc}", EXIT_IO)
        raise AssertionError  # unreachable


def _load_bank(config: CliConfig) -> QuestionBank:
    if config.bank_path is None:
        return canonical_bank()
    raw = _read_bank_bytes(config)
    try:
        return load_bank(raw)
    except ParseError as exc:
        _fail(str(exc), EXIT_IO)
    except ValidationError as exc:
        for finding in exc.findings:
            click.echo(str(finding), err=True)
        _fail("bank is invalid", EXIT_BANK_INVALID)
    except HashMismatch as exc:
        _fail(str(exc), EXIT_BANK_INVALID)
    raise AssertionError  # unreachable


def _store(config: CliConfig, bank: QuestionBank) -> SessionStore:
    try:
        return SessionStore(config.data_dir, bank)
    except StorageError as exc:
        _fail(str(exc), EXIT_IO)
        raise AssertionError  # unreachable


@click.group()
@click.option(
    "--data-dir",
    type=click.Path(file_okay=False, path_type=Path),
    envvar="DEBT_GAUGE_DATA_DIR",
    default=DEFAULT_DATA_DIR,
    show_default=True,
    help="Directory holding session files (env: DEBT_GAUGE_DATA_DIR).",
)
@click.option(
    "--bank",
    "bank_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Bank file to use instead of the embedded canonical bank.",
)
@click.pass_context
def cli(ctx: click.Context, data_dir: Path, bank_path: Path | None) -> None:
    """Self-assessment tool for technical debt on AI competition platforms."""
    ctx.obj = CliConfig(data_dir=data_dir, bank_path=bank_path)


@cli.group()
def bank() -> None:
    """Question bank commands."""


@bank.command("validate")
@click.pass_obj
def bank_validate(config: CliConfig) -> None:
    """Validate the bank file; warnings are permitted, errors are not."""
    raw = _read_bank_bytes(config)
    try:
        loaded = load_bank(raw)
    except ParseError as exc:
        _fail(str(exc), EXIT_IO)
        return
    except ValidationError as exc:
        for finding in exc.findings:
            click.echo(str(finding), err=True)
        sys.exit(EXIT_BANK_INVALID)
    except HashMismatch as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BANK_INVALID)
    for finding in validate_bank(loaded):
        click.echo(str(finding), err=True)
    click.echo(
        f"bank ok: {len(loaded.questions)} questions, version "
        f"{loaded.bank_version}, hash {loaded.content_hash[:12]}…"
    )
    sys.exit(EXIT_OK)


def _show_question(
    question: Question, position: int, total: int
) -> None:
    click.echo()
    click.echo(f"[{position}/{total}] {question.debt_type.label} · Q{question.id}")
    click.echo(question.text)


def _interactive_loop(
    store: SessionStore, session: AssessmentSession
) -> AssessmentSession:
    """One-question-at-a-time wizard. The prompt never shows weights."""
    questions = applicable_questions(store.bank, session.role)
    total = len(questions)
    for question in questions:
        if question.id in session.responses:
            continue
        _show_question(question, len(session.responses) + 1, total)
        while True:
            choice = click.prompt(_PROMPT, prompt_suffix=": ").strip().lower()
            if choice == "j":
                click.echo(f"Justification: {question.justification}")
                if question.erratum_note:
                    click.echo(f"Note: {question.erratum_note}")
                continue
            if choice == "e":
                click.echo(f"Example: {question.example}")
                continue
            if choice == "s":
                break
            if choice == "q":
                click.echo(
                    f"Saved. Resume with: debt-gauge resume {session.session_id}"
                )
                return session
            if choice in _ANSWER_KEYS:
                session = store.record_answer(
                    session.session_id,
                    question.id,
                    _ANSWER_KEYS[choice],
                    session.revision,
                )
                break
            click.echo("Please answer Y, N, A, D, J, E, S or Q.")
    return session


def _apply_answer_file(
    store: SessionStore, session: AssessmentSession, answers_path: Path
) -> AssessmentSession:
    """Scripted answers: one of Y/N/A/D per line, applied to the unanswered
    applicable questions in id order."""
    try:
        lines = answers_path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        _fail(f"cannot read answers file: {exc}", EXIT_IO)
    tokens = [
        line.strip().lower()
        for line in lines
        if line.strip() and not line.lstrip().startswith("#")
    ]
    pending = [
        q for q in applicable_questions(store.bank, session.role)
        if q.id not in session.responses
    ]
    for token, question in zip(tokens, pending):
        if token not in _ANSWER_KEYS:
            _fail(
                f"invalid answer {token!r} (expected one of y, n, a, d)",
                EXIT_PRECONDITION,
            )
        session = store.record_answer(
            session.session_id, question.id, _ANSWER_KEYS[token], session.revision
        )
    return session


def _finish_session(
    store: SessionStore,
    session: AssessmentSession,
    output_format: ReportFormat,
    interactive: bool,
) -> None:
    missing = store.unanswered(session)
    if not missing and not session.finalized:
        if not interactive or click.confirm(
            "All questions answered. Finalize now?", default=True
        ):
            session = store.finalize(session.session_id)
    elif missing:
        click.echo(
            f"{len(missing)} question(s) unanswered "
            f"({', '.join(str(i) for i in missing[:8])}"
            f"{'…' if len(missing) > 8 else ''}). "
            f"Resume with: debt-gauge resume {session.session_id}",
            err=True,
        )
    report = build_report(store.bank, session, Audience.RESPONDENT)
    sys.stdout.buffer.write(render(report, output_format))
    sys.stdout.flush()


@cli.command()
@click.option(
    "--role",
    type=click.Choice([r.value for r in Role]),
    required=True,
    help="Respondent role the session is scoped to.",
)
@click.option("--label", required=True, help="Platform label, e.g. RLGame-2024.")
@click.option(
    "--answers",
    "answers_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Non-interactive mode: file with one of Y/N/A/D per line.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in ReportFormat]),
    default=ReportFormat.MARKDOWN.value,
    show_default=True,
)
@click.pass_obj
def assess(
    config: CliConfig,
    role: str,
    label: str,
    answers_path: Path | None,
    output_format: str,
) -> None:
    """Start a new assessment session and answer its questions."""
    loaded = _load_bank(config)
    store = _store(config, loaded)
    try:
        session = store.create_session(Role(role), label)
        click.echo(f"Session {session.session_id} created.", err=True)
        if answers_path is not None:
            session = _apply_answer_file(store, session, answers_path)
        else:
            session = _interactive_loop(store, session)
        _finish_session(store, session, ReportFormat(output_format),
                        interactive=answers_path is None)
    except StoreError as exc:
        _fail(str(exc), _exit_code_for(exc))


@cli.command()
@click.argument("session_id")
@click.option(
    "--answers",
    "answers_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Non-interactive mode: file with one of Y/N/A/D per line.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in ReportFormat]),
    default=ReportFormat.MARKDOWN.value,
    show_default=True,
)
@click.pass_obj
def resume(
    config: CliConfig, session_id: str, answers_path: Path | None,
    output_format: str,
) -> None:
    """Continue an in-progress session at its first unanswered question."""
    loaded = _load_bank(config)
    store = _store(config, loaded)
    try:
        session = store.get(session_id)
        if answers_path is not None:
            session = _apply_answer_file(store, session, answers_path)
        else:
            session = _interactive_loop(store, session)
        _finish_session(store, session, ReportFormat(output_format),
                        interactive=answers_path is None)
    except StoreError as exc:
        _fail(str(exc), _exit_code_for(exc))


@cli.command("report")
@click.argument("session_id")
@click.option(
    "--audience",
    type=click.Choice([a.value for a in Audience]),
    default=Audience.RESPONDENT.value,
    show_default=True,
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in ReportFormat]),
    default=ReportFormat.MARKDOWN.value,
    show_default=True,
)
@click.pass_obj
def report_cmd(
    config: CliConfig, session_id: str, audience: str, output_format: str
) -> None:
    """Render a session report."""
    loaded = _load_bank(config)
    store = _store(config, loaded)
    try:
        session = store.get(session_id)
        result = build_report(loaded, session, Audience(audience))
    except StoreError as exc:
        _fail(str(exc), _exit_code_for(exc))
        return
    sys.stdout.buffer.write(render(result, ReportFormat(output_format)))
    sys.stdout.flush()


def _render_delta(delta: SessionDelta, fmt: ReportFormat) -> bytes:
    if fmt is ReportFormat.JSON:
        doc = {
            "baseline_id": delta.baseline_id,
            "comparison_id": delta.comparison_id,
            "per_type_delta": {
                t.value: d for t, d in delta.per_type_delta.items()
            },
            "total_delta": delta.total_delta,
        }
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if fmt is ReportFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\r\n")
        writer.writerow(["debt_type", "delta"])
        for debt_type, value in delta.per_type_delta.items():
            writer.writerow([debt_type.value, value])
        writer.writerow(["total", delta.total_delta])
        return buffer.getvalue().encode("utf-8")
    lines = [
        "# Session Comparison",
        "",
        f"- Baseline: `{delta.baseline_id}`",
        f"- Comparison: `{delta.comparison_id}`",
        "",
        "| Debt Type | Delta |",
        "| --- | ---: |",
    ]
    for debt_type, value in delta.per_type_delta.items():
        lines.append(f"| {debt_type.label} | {value} |")
    lines.append(f"| **Total** | {delta.total_delta} |")
    return ("\n".join(lines) + "\n").encode("utf-8")


@cli.command()
@click.argument("baseline_id")
@click.argument("comparison_id")
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in ReportFormat]),
    default=ReportFormat.MARKDOWN.value,
    show_default=True,
)
@click.pass_obj
def compare(
    config: CliConfig, baseline_id: str, comparison_id: str, output_format: str
) -> None:
    """Per-type score deltas between two finalized sessions of one role."""
    loaded = _load_bank(config)
    store = _store(config, loaded)
    try:
        delta = store.compare(baseline_id, comparison_id)
    except StoreError as exc:
        _fail(str(exc), _exit_code_for(exc))
        return
    sys.stdout.buffer.write(_render_delta(delta, ReportFormat(output_format)))
    sys.stdout.flush()


@cli.command("list")
@click.pass_obj
def list_cmd(config: CliConfig) -> None:
    """List stored sessions."""
    loaded = _load_bank(config)
    store = _store(config, loaded)
    try:
        summaries = store.list_sessions()
    except StoreError as exc:
        _fail(str(exc), _exit_code_for(exc))
        return
    if not summaries:
        click.echo("no sessions")
        return
    for s in summaries:
        click.echo(
            f"{s.session_id}  {s.role.value:<11}  {s.status.value:<11}  "
            f"{to_rfc3339(s.updated_at)}  {s.platform_label}"
        )


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8080, show_default=True, type=int)
@click.option(
    "--webapp-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Directory with built webapp assets to serve at /.",
)
@click.pass_obj
def serve(config: CliConfig, host: str, port: int, webapp_dir: Path | None) -> None:
    """Run the HTTP API (and webapp, when assets are available)."""
    import uvicorn

    from .service import create_app, default_webapp_dir

    loaded = _load_bank(config)
    store = _store(config, loaded)
    app = create_app(loaded, store, webapp_dir=webapp_dir or default_webapp_dir())
    uvicorn.run(app, host=host, port=port)


def main() -> None:
    cli(prog_name="debt-gauge")


if __name__ == "__main__":
    main()
