"""Stateless JSON-over-HTTP facade for the pipeline and check suites.

Compute endpoints are pure; the only state is the optional flat-file
problem store, one JSON document per id, with writes serialized per id.
Responses for identical bodies are identical regardless of request order.
"""

from __future__ import annotations

import json
import os
import re
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Optional
from urllib.parse import urlparse

from .core import ValidationError
from .mcgdm import DecisionProblem, build_collective, run_pipeline, sensitivity
from .ndim_agg import NDIM_FAMILIES, OrderCompatibilityError
from .orders import ORDER_KINDS
from .sampling import DEFAULT_SEED
from .scalar_agg import SCALAR_FAMILIES

MAX_SIDE = 64
MAX_TRIALS = 100_000
PROBLEM_ID = re.compile(r"^[A-Za-z0-9._~-]{1,64}$")


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, detail=None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "detail": self.detail}


class ProblemStore:
    """Flat JSON files under one directory; last write wins, one writer per id."""

    def __init__(self, data_dir: str):
        self.data_dir = data_dir
        os.makedirs(data_dir, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def _lock_for(self, problem_id: str) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(problem_id, threading.Lock())

    def _path(self, problem_id: str) -> str:
        if not PROBLEM_ID.match(problem_id):
            raise ApiError(400, "VALIDATION", "problem id must be 1-64 URL-safe characters")
        return os.path.join(self.data_dir, problem_id + ".json")

    def put(self, problem_id: str, doc: dict) -> None:
        path = self._path(problem_id)
        with self._lock_for(problem_id):
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, sort_keys=True)
            os.replace(tmp, path)

    def get(self, problem_id: str) -> dict:
        path = self._path(problem_id)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return json.load(fh)
        except FileNotFoundError:
            raise ApiError(404, "NOT_FOUND", f"no problem stored under {problem_id!r}") from None

    def delete(self, problem_id: str) -> None:
        path = self._path(problem_id)
        with self._lock_for(problem_id):
            try:
                os.remove(path)
            except FileNotFoundError:
                raise ApiError(404, "NOT_FOUND", f"no problem stored under {problem_id!r}") from None


def _guard_size(problem: DecisionProblem) -> None:
    if problem.p > MAX_SIDE or problem.m > MAX_SIDE or problem.n > MAX_SIDE:
        raise ApiError(400, "VALIDATION",
                       f"problem sides are capped at {MAX_SIDE} alternatives/criteria/experts")


def _parse_problem(doc, require_pipeline: bool) -> DecisionProblem:
    if not isinstance(doc, dict):
        raise ApiError(400, "VALIDATION", "request body must be a JSON object")
    try:
        problem = DecisionProblem.from_json(doc, require_pipeline=require_pipeline)
    except ValidationError as exc:
        raise ApiError(400, "VALIDATION", str(exc)) from exc
    _guard_size(problem)
    return problem


class App:
    def __init__(self, data_dir: str, seed: int = DEFAULT_SEED):
        self.store = ProblemStore(data_dir)
        self.seed = seed

    def catalog(self) -> dict:
        return {
            "orders": [{"kind": k} for k in ORDER_KINDS],
            "aggregators": [{"name": name, "params": params} for name, params in NDIM_FAMILIES.items()],
            "scalar_aggregations": [{"name": name, "params": params}
                                    for name, params in SCALAR_FAMILIES.items()],
        }

    def collective(self, body) -> dict:
        problem = _parse_problem(body, require_pipeline=False)
        return {"alternatives": problem.alternatives, "criteria": problem.criteria,
                "entries": build_collective(problem).to_json()}

    def rank(self, body) -> dict:
        problem = _parse_problem(body, require_pipeline=True)
        try:
            return run_pipeline(problem, seed=self.seed).to_json()
        except OrderCompatibilityError as exc:
            raise ApiError(422, "VALIDATION", str(exc),
                           {"axiom": exc.axiom, "report": exc.report.to_json()}) from exc

    def sensitivity(self, body) -> dict:
        if not isinstance(body, dict) or "problem" not in body:
            raise ApiError(400, "VALIDATION", "body must carry 'problem' and 'edits'")
        problem = _parse_problem(body["problem"], require_pipeline=True)
        edits = body.get("edits", [])
        if not isinstance(edits, list) or len(edits) > MAX_TRIALS:
            raise ApiError(400, "VALIDATION", f"edits must be a list of at most {MAX_TRIALS}")
        try:
            return sensitivity(problem, edits, seed=self.seed)
        except OrderCompatibilityError as exc:
            raise ApiError(422, "VALIDATION", str(exc),
                           {"axiom": exc.axiom, "report": exc.report.to_json()}) from exc
        except ValidationError as exc:
            raise ApiError(400, "VALIDATION", str(exc)) from exc


def make_handler(app: App, cors_origin: Optional[str]):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, status: int, payload, content_type="application/json") -> None:
            body = payload if isinstance(payload, bytes) else json.dumps(payload, sort_keys=True).encode()
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            if cors_origin:
                self.send_header("Access-Control-Allow-Origin", cors_origin)
                self.send_header("Access-Control-Allow-Methods", "GET, POST, PUT, DELETE, OPTIONS")
                self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()
            self.wfile.write(body)

        def _body(self):
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            if not raw:
                raise ApiError(400, "VALIDATION", "request body is required")
            try:
                return json.loads(raw)
            except json.JSONDecodeError as exc:
                raise ApiError(400, "VALIDATION", f"malformed JSON: {exc}") from exc

        def _dispatch(self, method: str) -> None:
            path = urlparse(self.path).path
            try:
                self._route(method, path)
            except ApiError as exc:
                self._send(exc.status, exc.to_json())
            except Exception as exc:  # noqa: BLE001 - surface as structured 500
                self._send(500, {"code": "INTERNAL", "message": str(exc), "detail": None})

        def _route(self, method: str, path: str) -> None:
            if method == "OPTIONS":
                self._send(204, b"")
                return
            if method == "GET" and path == "/healthz":
                self._send(200, b"ok", content_type="text/plain")
                return
            if method == "GET" and path == "/api/v1/catalog":
                self._send(200, app.catalog())
                return
            if method == "POST" and path == "/api/v1/collective":
                self._send(200, app.collective(self._body()))
                return
            if method == "POST" and path == "/api/v1/rank":
                self._send(200, app.rank(self._body()))
                return
            if method == "POST" and path == "/api/v1/sensitivity":
                self._send(200, app.sensitivity(self._body()))
                return
            m = re.match(r"^/api/v1/problems/([^/]+)$", path)
            if m:
                problem_id = m.group(1)
                if method == "PUT":
                    body = self._body()
                    _parse_problem(body, require_pipeline=False)
                    app.store.put(problem_id, body)
                    self._send(200, {"id": problem_id})
                    return
                if method == "GET":
                    self._send(200, app.store.get(problem_id))
                    return
                if method == "DELETE":
                    app.store.delete(problem_id)
                    self._send(204, b"")
                    return
            raise ApiError(404, "NOT_FOUND", f"no route for {method} {path}")

        def do_GET(self):
            self._dispatch("GET")

        def do_POST(self):
            self._dispatch("POST")

        def do_PUT(self):
            self._dispatch("PUT")

        def do_DELETE(self):
            self._dispatch("DELETE")

        def do_OPTIONS(self):
            self._dispatch("OPTIONS")

    return Handler


def make_server(host: str = "127.0.0.1", port: int = 0, data_dir: str = "./ndagg-problems",
                cors_origin: Optional[str] = None, seed: Optional[int] = None) -> ThreadingHTTPServer:
    if cors_origin is None:
        cors_origin = os.environ.get("NDAGG_CORS_ORIGIN")
    if seed is None:
        seed = int(os.environ.get("NDAGG_SEED", DEFAULT_SEED))
    app = App(data_dir, seed=seed)
    return ThreadingHTTPServer((host, port), make_handler(app, cors_origin))


def run(host: str = "127.0.0.1", port: Optional[int] = None, data_dir: str = "./ndagg-problems") -> None:
    if port is None:
        port = int(os.environ.get("NDAGG_PORT", 8080))
    server = make_server(host, port, data_dir)
    host_shown, port_shown = server.server_address[0], server.server_address[1]
    print(f"ndagg service on http://{host_shown}:{port_shown} (problems in {data_dir})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
