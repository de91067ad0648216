"""Logging utilities for sunrisesim.

Every record carries the invocation's ``run_id`` and ``command`` plus any
fields bound with :func:`log_context` (the table being reconciled, the sweep
point being simulated), so concurrent sweep output can be told apart.
"""

import json
import logging
import sys
import uuid
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any

_RESERVED = frozenset((
    "name", "msg", "args", "created", "filename", "funcName",
    "levelname", "levelno", "lineno", "module", "msecs",
    "pathname", "process", "processName", "relativeCreated",
    "stack_info", "exc_info", "exc_text", "thread", "threadName",
    "message", "asctime", "taskName",
))

# Leading keys of every JSON record, in this order.
_RUN_FIELDS = ("run_id", "command")

_context: ContextVar[dict[str, Any]] = ContextVar("sunrisesim_log_context")


@contextmanager
def log_context(**fields: Any) -> Iterator[None]:
    """Attach ``fields`` to every record logged inside the block.

    Context follows ``asyncio`` tasks and ``asyncio.to_thread`` calls.
    """
    token = _context.set({**_context.get({}), **fields})
    try:
        yield
    finally:
        _context.reset(token)


class RunContextFilter(logging.Filter):
    """Stamps run id, command and bound context onto each record."""

    def __init__(self, run_id: str, command: str | None = None) -> None:
        super().__init__()
        self.run_id = run_id
        self.command = command or "-"

    def filter(self, record: logging.LogRecord) -> bool:
        record.__dict__.update(run_id=self.run_id, command=self.command)
        for key, value in _context.get({}).items():
            # explicit extra= wins over bound context
            if not hasattr(record, key):
                setattr(record, key, value)
        return True


class JSONFormatter(logging.Formatter):
    """JSON log formatter for structured logging."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: dict[str, Any] = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        for key in _RUN_FIELDS:
            if hasattr(record, key):
                log_data[key] = getattr(record, key)

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        # extra= and log_context fields
        for key, value in record.__dict__.items():
            if key not in _RESERVED and key not in log_data:
                log_data[key] = value

        return json.dumps(log_data, default=str)


def setup_logging(
    level: str = "WARNING",
    format_type: str = "text",
    *,
    run_id: str | None = None,
    command: str | None = None,
) -> str:
    """Configure logging for one sunrisesim invocation.

    Logs go to stderr; stdout is reserved for emitted tables and results.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_type: "json" for structured logging, "text" for human-readable
        run_id: Identifier stamped on every record; generated when omitted
        command: CLI subcommand being run

    Returns:
        The run id in use.
    """
    run_id = run_id or uuid.uuid4().hex[:8]
    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, level.upper(), logging.WARNING))

    root_logger.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    handler.addFilter(RunContextFilter(run_id, command))

    if format_type == "json":
        handler.setFormatter(JSONFormatter())
    else:
        handler.setFormatter(
            logging.Formatter(
                "%(asctime)s | %(levelname)-8s | %(run_id)s %(command)s | %(name)s | %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )

    root_logger.addHandler(handler)

    # simpy and asyncio are chatty at DEBUG
    for logger_name in ["asyncio", "simpy"]:
        logging.getLogger(logger_name).setLevel(logging.WARNING)

    return run_id


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)
