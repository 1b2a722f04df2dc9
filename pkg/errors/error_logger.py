import traceback
import logging
import os
import sys
from errors.exceptions import FramesError

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

logger = logging.getLogger(__name__)


def setup_logging(error_log, level="WARNING"):
    """Configure the root logger once: a file for errors, stderr at `level`."""
    root = logging.getLogger()
    if getattr(root, "_frames_configured", False):
        return
    root.setLevel(logging.DEBUG)

    folder = os.path.dirname(error_log)
    if folder and not os.path.exists(folder):
        os.makedirs(folder)
    file_handler = logging.FileHandler(error_log, mode="a", encoding="utf-8")
    file_handler.setLevel(logging.ERROR)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(file_handler)

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    console.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(console)
    root._frames_configured = True


def error_send(error, stream=None):
    """Write a one-line message to stderr and return exit code 1.

    Unexpected errors are logged with their traceback at ERROR; known ones only
    at DEBUG.
    """
    stream = stream or sys.stderr
    ## Notify user
    try:
        if isinstance(error, FramesError):
            stream.write(f"error: {error}\n")
        else:
            stream.write(f"error: unexpected {type(error).__name__}: {error}\n")
        stream.flush()
    except Exception:
        traceback.print_exc()
    ## Log error
    details = "".join(traceback.format_exception(type(error), error, error.__traceback__))
    level = logging.DEBUG if isinstance(error, FramesError) else logging.ERROR
    logger.log(level, f"Error: {details}\n" + "=" * 50 + "\n")
    return 1
