"""Session-oriented HTTP API for interactive decision support.

A session accumulates choice statements over time; the derived and simplified
assessment plus its consistency verdict are cached per session and rebuilt
lazily after every mutation.  Sessions persist as single JSON documents whose
source of truth is the statement log alone.  Queries run against the cached
simplified assessment; long queries return a poll token instead of blocking
past the configured budget.
"""

from __future__ import annotations

import argparse
import os
import threading
import uuid
from concurrent.futures import Future, ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeout
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from fastapi import Body, FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .assessment import Assessment, ChoiceStatement, derive_assessment, validate_statement
from .extension import (
    ConsistencyResult,
    InconsistentAssessmentError,
    choose,
    is_consistent,
    is_in_extension,
)
from .serialize import (
    ProblemFormatError,
    assessment_to_json,
    canonical_dumps,
    choice_to_json,
    consistency_to_json,
    load_problem,
    membership_to_json,
    parse_option_set,
    parse_space,
    parse_statement,
    report_to_json,
    statement_to_json,
)
from .simplify import SimplificationReport, simplify
from .space import OutcomeSpace

DEFAULT_BUDGET_SECONDS = 30.0


@dataclass
class Session:
    """One decision maker's statement log plus derived caches."""

    id: str
    space: OutcomeSpace
    statements: list[ChoiceStatement] = field(default_factory=list)
    lock: threading.RLock = field(default_factory=threading.RLock)
    _derived: Assessment | None = None
    _report: SimplificationReport | None = None
    _consistency: ConsistencyResult | None = None

    def invalidate(self) -> None:
        self._derived = None
        self._report = None
        self._consistency = None

    def derived(self) -> Assessment:
        with self.lock:
            if self._derived is None:
                self._derived = derive_assessment(self.statements, self.space)
            return self._derived

    def report(self) -> SimplificationReport:
        with self.lock:
            if self._report is None:
                self._report = simplify(self.derived())
            return self._report

    def simplified(self) -> Assessment:
        return self.report().output

    def consistency(self) -> ConsistencyResult:
        with self.lock:
            if self._consistency is None:
                self._consistency = is_consistent(self.simplified())
            return self._consistency

    def consistency_state(self) -> str:
        with self.lock:
            if self._consistency is None:
                return "unknown"
            return "consistent" if self._consistency.consistent else "inconsistent"


class SessionStore:
    """In-memory session map with one on-disk document per session."""

    def __init__(self, directory: Path | None) -> None:
        self.directory = directory
        if directory is not None:
            directory.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, space: OutcomeSpace) -> Session:
        session = Session(id=uuid.uuid4().hex[:12], space=space)
        with self._lock:
            self._sessions[session.id] = session
        self.save(session)
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is not None:
            return session
        return self._load(session_id)

    def save(self, session: Session) -> None:
        if self.directory is None:
            return
        doc = {
            "outcomes": list(session.space.labels),
            "statements": [statement_to_json(st) for st in session.statements],
        }
        path = self.directory / f"{session.id}.json"
        tmp = path.with_suffix(".tmp")
        tmp.write_text(canonical_dumps(doc), encoding="utf-8")
        tmp.replace(path)

    def _load(self, session_id: str) -> Session | None:
        if self.directory is None:
            return None
        path = self.directory / f"{session_id}.json"
        if not path.exists():
            return None
        problem = load_problem(path.read_text(encoding="utf-8"))
        session = Session(
            id=session_id,
            space=problem.space,
            statements=list(problem.statements or ()),
        )
        with self._lock:
            return self._sessions.setdefault(session_id, session)


class QueryRunner:
    """Runs engine calls with a wall-clock budget; slow ones become pollable."""

    def __init__(self, budget: float) -> None:
        self.budget = budget
        self._pool = ThreadPoolExecutor(max_workers=8)
        self._pending: dict[str, Future] = {}
        self._lock = threading.Lock()

    def run(self, fn: Callable[[], Any]) -> tuple[str, Any]:
        future = self._pool.submit(fn)
        if self.budget > 0:
            try:
                return "done", future.result(timeout=self.budget)
            except FutureTimeout:
                pass
        token = uuid.uuid4().hex
        with self._lock:
            self._pending[token] = future
        return "pending", token

    def poll(self, token: str) -> tuple[str, Any]:
        with self._lock:
            future = self._pending.get(token)
        if future is None:
            return "unknown", None
        if not future.done():
            return "pending", token
        with self._lock:
            self._pending.pop(token, None)
        return "done", future.result()


def _not_found(what: str) -> JSONResponse:
    return JSONResponse(status_code=404, content={"error": f"unknown {what}"})


def _violations_response(violations: list[dict[str, str]]) -> JSONResponse:
    return JSONResponse(status_code=422, content={"violations": violations})


def _structured_violations(messages: list[str]) -> list[dict[str, str]]:
    out = []
    for message in messages:
        field_name = message.split(" ", 1)[0]
        if field_name not in ("context", "chosen"):
            field_name = "statement"
        out.append({"field": field_name, "message": message})
    return out


def _session_view(session: Session) -> dict[str, Any]:
    return {
        "id": session.id,
        "outcomes": list(session.space.labels),
        "statements": [statement_to_json(st) for st in session.statements],
        "consistency": session.consistency_state(),
    }


def create_app(
    session_dir: Path | str | None = None,
    budget: float = DEFAULT_BUDGET_SECONDS,
) -> FastAPI:
    store = SessionStore(Path(session_dir) if session_dir is not None else None)
    runner = QueryRunner(budget)
    app = FastAPI(title="choicekit service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.store = store
    app.state.runner = runner

    def _query_response(session: Session, fn: Callable[[], dict[str, Any]]) -> JSONResponse:
        try:
            state, payload = runner.run(fn)
        except InconsistentAssessmentError as exc:
            return JSONResponse(
                status_code=409,
                content={
                    "error": "inconsistent assessment",
                    **consistency_to_json(exc.result),
                },
            )
        if state == "pending":
            return JSONResponse(
                status_code=202,
                content={
                    "status": "computing",
                    "token": payload,
                    "poll": f"/sessions/{session.id}/results/{payload}",
                },
            )
        return JSONResponse(status_code=200, content=payload)

    @app.post("/sessions", status_code=201)
    def create_session(body: dict = Body(...)) -> Any:
        try:
            space = parse_space(body.get("outcomes"))
        except ProblemFormatError as exc:
            return _violations_response([{"field": "outcomes", "message": str(exc)}])
        session = store.create(space)
        return _session_view(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> Any:
        session = store.get(session_id)
        if session is None:
            return _not_found("session")
        return _session_view(session)

    @app.post("/sessions/{session_id}/statements", status_code=201)
    def add_statement(session_id: str, body: dict = Body(...)) -> Any:
        session = store.get(session_id)
        if session is None:
            return _not_found("session")
        try:
            statement = parse_statement(session.space, body)
        except ProblemFormatError as exc:
            return _violations_response([{"field": "statement", "message": str(exc)}])
        violations = validate_statement(statement)
        if violations:
            return _violations_response(_structured_violations(violations))
        with session.lock:
            session.statements.append(statement)
            session.invalidate()
            store.save(session)
            index = len(session.statements) - 1
        return {"index": index, "statement": statement_to_json(statement)}

    @app.delete("/sessions/{session_id}/statements/{index}")
    def delete_statement(session_id: str, index: int) -> Any:
        session = store.get(session_id)
        if session is None:
            return _not_found("session")
        with session.lock:
            if index < 0 or index >= len(session.statements):
                return _violations_response(
                    [{"field": "index", "message": f"no statement at index {index}"}]
                )
            removed = session.statements.pop(index)
            session.invalidate()
            store.save(session)
            return {
                "removed": statement_to_json(removed),
                "statements": [statement_to_json(st) for st in session.statements],
            }

    @app.get("/sessions/{session_id}/assessment")
    def get_assessment(session_id: str, simplified: bool = False) -> Any:
        session = store.get(session_id)
        if session is None:
            return _not_found("session")
        if simplified:
            return report_to_json(session.report(), include_steps=True)
        return {"assessment": assessment_to_json(session.derived())}

    @app.get("/sessions/{session_id}/consistency")
    def get_consistency(session_id: str) -> Any:
        session = store.get(session_id)
        if session is None:
            return _not_found("session")
        return consistency_to_json(session.consistency(), include_witnesses=True)

    @app.post("/sessions/{session_id}/choose")
    def post_choose(session_id: str, body: dict = Body(...)) -> Any:
        session = store.get(session_id)
        if session is None:
            return _not_found("session")
        try:
            options = parse_option_set(session.space, body.get("options"), "options")
        except ProblemFormatError as exc:
            return _violations_response([{"field": "options", "message": str(exc)}])
        if len(options) == 0:
            return _violations_response(
                [{"field": "options", "message": "options must be non-empty"}]
            )
        verdict = session.consistency()
        if not verdict.consistent:
            return JSONResponse(
                status_code=409,
                content={
                    "error": "inconsistent assessment",
                    **consistency_to_json(verdict),
                },
            )
        assessment = session.simplified()
        return _query_response(
            session,
            lambda: choice_to_json(choose(assessment, options), include_witnesses=True),
        )

    @app.post("/sessions/{session_id}/member")
    def post_member(session_id: str, body: dict = Body(...)) -> Any:
        session = store.get(session_id)
        if session is None:
            return _not_found("session")
        try:
            options = parse_option_set(session.space, body.get("options"), "options")
        except ProblemFormatError as exc:
            return _violations_response([{"field": "options", "message": str(exc)}])
        assessment = session.simplified()
        return _query_response(
            session,
            lambda: membership_to_json(
                is_in_extension(options, assessment), include_witnesses=True
            ),
        )

    @app.get("/sessions/{session_id}/results/{token}")
    def poll_result(session_id: str, token: str) -> Any:
        session = store.get(session_id)
        if session is None:
            return _not_found("session")
        try:
            state, payload = runner.poll(token)
        except InconsistentAssessmentError as exc:
            return JSONResponse(
                status_code=409,
                content={
                    "error": "inconsistent assessment",
                    **consistency_to_json(exc.result),
                },
            )
        if state == "unknown":
            return _not_found("result token")
        if state == "pending":
            return JSONResponse(
                status_code=202,
                content={
                    "status": "computing",
                    "token": token,
                    "poll": f"/sessions/{session_id}/results/{token}",
                },
            )
        return JSONResponse(status_code=200, content=payload)

    ui_dir = os.environ.get("CHOICEKIT_UI_DIR", "frontend/dist")
    if Path(ui_dir).is_dir():  # pragma: no cover - optional static mount
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="choicekit-serve")
    parser.add_argument(
        "--host", default=os.environ.get("CHOICEKIT_HOST", "127.0.0.1")
    )
    parser.add_argument(
        "--port", type=int, default=int(os.environ.get("CHOICEKIT_PORT", "8080"))
    )
    parser.add_argument(
        "--session-dir",
        default=os.environ.get("CHOICEKIT_SESSION_DIR", "./sessions"),
    )
    parser.add_argument(
        "--budget",
        type=float,
        default=float(os.environ.get("CHOICEKIT_BUDGET", str(DEFAULT_BUDGET_SECONDS))),
        help="seconds a query may run before returning a poll token",
    )
    args = parser.parse_args(argv)

    import uvicorn

    uvicorn.run(
        create_app(session_dir=args.session_dir, budget=args.budget),
        host=args.host,
        port=args.port,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
