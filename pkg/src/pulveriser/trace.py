"""Structured step-by-step derivation traces.

A trace is a sequence of :class:`TraceEvent` records, one per algorithm
step, numbered consecutively from 1.  Algorithms accept an optional
``sink``; when it is ``None`` nothing is built or serialized.

Wire format is JSON lines.  A stream opens with a ``{"v":1}`` header line,
then one object per event with keys in the order algorithm, step, state,
note.  State values are always decimal strings so that arbitrarily large
integers survive readers that parse numbers as doubles.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Iterable, Mapping, NamedTuple, TextIO

from .errors import SinkClosed

FORMAT_VERSION = 1


class TraceEvent(NamedTuple):
    algorithm: str
    step: int
    state: Mapping[str, Any]
    note: str | None = None

    def rendered(self) -> TraceEvent:
        """The same event with every state value as its decimal string."""
        return self._replace(state={k: render(v) for k, v in self.state.items()},
                             note=self.note or None)


def render(value: Any) -> str:
    """Exact decimal text for an int, Fraction, bool or string state value."""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class ListSink:
    """Collects events in memory, in emission order."""

    def __init__(self) -> None:
        self.events: list[TraceEvent] = []
        self.closed = False

    def emit(self, event: TraceEvent) -> None:
        if self.closed:
            raise SinkClosed("sink is closed")
        self.events.append(event)

    def close(self) -> None:
        self.closed = True

    def __iter__(self):
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)


class NullSink:
    """Accepts and discards events."""

    closed = False

    def emit(self, event: TraceEvent) -> None:
        if self.closed:
            raise SinkClosed("sink is closed")

    def close(self) -> None:
        self.closed = True


class JsonLinesSink:
    """Writes events to a text stream as JSON lines.

    The version header is written lazily before the first line so that an
    unused sink produces no output unless :meth:`start` is called.  Every
    line is prefixed with ``prefix`` (the CLI uses ``"TRACE "`` when the
    trace is interleaved with stdout).
    """

    def __init__(self, stream: TextIO, prefix: str = "", owns_stream: bool = False) -> None:
        self.stream = stream
        self.prefix = prefix
        self.owns_stream = owns_stream
        self.closed = False
        self._started = False

    def start(self) -> None:
        if self.closed:
            raise SinkClosed("sink is closed")
        if not self._started:
            self._started = True
            self.stream.write(self.prefix + header() + "\n")

    def emit(self, event: TraceEvent) -> None:
        self.start()
        self.stream.write(self.prefix + serialize(event) + "\n")

    def close(self) -> None:
        if self.closed:
            return
        self.closed = True
        if self.owns_stream:
            self.stream.close()
        else:
            self.stream.flush()


def emit(sink, event: TraceEvent) -> None:
    sink.emit(event)


def header() -> str:
    return json.dumps({"v": FORMAT_VERSION}, separators=(",", ":"))


def serialize(event: TraceEvent) -> str:
    obj: dict[str, Any] = {
        "algorithm": event.algorithm,
        "step": event.step,
        "state": {k: render(v) for k, v in event.state.items()},
    }
    if event.note:
        obj["note"] = event.note
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def parse(line: str) -> TraceEvent:
    """Inverse of :func:`serialize`; state values come back as strings."""
    obj = json.loads(line)
    return TraceEvent(obj["algorithm"], obj["step"], dict(obj["state"]), obj.get("note"))


def read_stream(lines: Iterable[str], prefix: str = "") -> list[TraceEvent]:
    """Parse a JSON-lines trace stream, checking the version header.

    Lines not starting with ``prefix`` are skipped, which lets callers pull
    a trace out of stdout where it is interleaved with ordinary output.
    """
    events = []
    seen_header = False
    for raw in lines:
        line = raw.rstrip("\n")
        if not line.startswith(prefix):
            continue
        line = line[len(prefix):]
        if not line:
            continue
        if not seen_header:
            head = json.loads(line)
            if head != {"v": FORMAT_VERSION}:
                raise ValueError(f"unsupported trace header: {line}")
            seen_header = True
            continue
        events.append(parse(line))
    return events


def recorder(sink, algorithm: str) -> Callable[..., None] | None:
    """Return a callable that emits numbered events for one algorithm run.

    ``rec(state, note=None)`` assigns the next step number.  Returns None
    when ``sink`` is None so callers can guard with a cheap truth test.
    """
    if sink is None:
        return None
    step = 0
    put = sink.emit

    def rec(state: Mapping[str, Any], note: str | None = None) -> None:
        nonlocal step
        step += 1
        put(TraceEvent(algorithm, step, state, note))

    return rec
