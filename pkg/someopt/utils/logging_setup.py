"""JSON event logging for runs, batches and experiments.

Every record is one JSON object on stderr; key/value fields given to
``log_kv`` become top-level keys so logs can be filtered with jq or loaded
straight into pandas.
"""

import json
import logging
import sys
import time
from functools import wraps
from typing import Any, Callable, Dict, Optional

import numpy as np

_LEVEL = logging.INFO
_LOGGERS: Dict[str, logging.Logger] = {}

# attributes every LogRecord carries; anything else came in through ``extra``
_RECORD_FIELDS = frozenset(logging.makeLogRecord({}).__dict__) | {"message", "asctime", "taskName"}


def _to_json(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return str(value)


class JsonFormatter(logging.Formatter):
    """One JSON object per record: time, level, logger, event, then the event's fields."""

    def format(self, record: logging.LogRecord) -> str:
        payload: Dict[str, Any] = {
            "t": round(record.created * 1000),
            "level": record.levelname,
            "logger": record.name,
            "event": getattr(record, "event", record.getMessage()),
        }
        payload.update(
            (key, value) for key, value in record.__dict__.items()
            if key not in _RECORD_FIELDS and key not in payload
        )
        if record.exc_info:
            payload["exc"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=_to_json)


def get_logger(name: str) -> logging.Logger:
    """
    Logger writing JSON lines to stderr at the level set through ``set_level``.

    Repeated calls with the same name return the same logger with one handler.
    """
    if name in _LOGGERS:
        return _LOGGERS[name]

    logger = logging.getLogger(name)
    logger.handlers.clear()
    # stdout belongs to the CLI tables
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JsonFormatter())
    logger.addHandler(handler)
    logger.setLevel(_LEVEL)
    logger.propagate = False

    _LOGGERS[name] = logger
    return logger


def set_level(level: str) -> None:
    """Apply a level name (DEBUG, INFO, ...) to every logger made here and to later ones."""
    global _LEVEL
    resolved = logging.getLevelName(str(level).upper())
    if not isinstance(resolved, int):
        raise ValueError(f"Unknown log level: {level}")
    _LEVEL = resolved
    for logger in _LOGGERS.values():
        logger.setLevel(resolved)


def log_kv(logger: logging.Logger, event: str, level: int = logging.INFO, **fields):
    """
    Emit one named event with flat key/value fields.

    Args:
        logger: Logger from ``get_logger``
        event: Dotted event name, e.g. "batch.complete"
        level: Logging level of the record
        **fields: Event fields; names clashing with LogRecord attributes get a ``kv_`` prefix
    """
    extra = {(f"kv_{key}" if key in _RECORD_FIELDS else key): value for key, value in fields.items()}
    extra["event"] = event
    logger.log(level, event, extra=extra)


def instrument(stage_name: str, logger: Optional[logging.Logger] = None) -> Callable:
    """
    Decorator logging ``<stage>.success`` or ``<stage>.error`` with the stage's wall time.

    Exceptions are logged and re-raised unchanged.

    Args:
        stage_name: Stage label, e.g. "experiment" or "stats"
        logger: Logger to report to; defaults to one named after the stage
    """
    stage_logger = logger or get_logger(stage_name)

    def decorator(fn):
        @wraps(fn)
        def wrapper(*args, **kwargs) -> Any:
            started = time.perf_counter()
            try:
                result = fn(*args, **kwargs)
            except Exception as e:
                log_kv(
                    stage_logger, f"{stage_name}.error", level=logging.ERROR, stage=stage_name,
                    error=str(e), error_type=type(e).__name__,
                    latency_ms=int((time.perf_counter() - started) * 1000)
                )
                raise
            log_kv(
                stage_logger, f"{stage_name}.success", stage=stage_name,
                latency_ms=int((time.perf_counter() - started) * 1000)
            )
            return result

        return wrapper
    return decorator
