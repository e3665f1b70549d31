import json
import sys
from typing import Dict, List, Optional, Union

from loguru import logger

HANDLERS: Dict[str, Union[int, None]] = {
    'json': None,
    'stderr': None,
    'file': None
}


def formatter(record) -> str:
    """Renders a record as one JSON line, escaped for loguru's format pass"""
    message = {
        "timestamp": record["time"].isoformat(),
        "level": record["level"].name,
        "message": record["message"],
        "module": record["module"],
        "function": record["function"],
        "pid": record["process"].id,
        "process_name": record["process"].name
    }
    record["extra"]["serialized"] = json.dumps(message, sort_keys=True)
    return "{extra[serialized]}\n"


def setup_logging(log_path="drinfeld_forms.log",
                  rotation=1,
                  retention=10,
                  handlers: Optional[List[str]] = None, level="INFO", init=False):
    """Sets up logging for the command line tool and the library modules

    Args:
        log_path (str, optional): The path to the log file. Defaults to "drinfeld_forms.log".
        rotation (int, optional): The number of MBs to rotate the log file. Defaults to 1.
        retention (int, optional): The number of days to retain the log file. Defaults to 10.
        handlers (list, optional): The handlers to use. Defaults to ['stderr'].
        level (str, optional): The logging level. Defaults to "INFO".
        init (bool, optional): Whether or not to drop existing handlers first. Defaults to False.
    """

    if handlers is None:
        handlers = ['stderr']

    if init:
        logger.remove()
        for name in HANDLERS:
            HANDLERS[name] = None


    # Results go to stdout, so diagnostics never share it
    for handler in handlers:
        if handler == 'file' and HANDLERS['file'] is None:
            HANDLERS['file'] = logger.add(log_path,
                                          rotation=f"{rotation} MB",
                                          retention=retention,
                                          compression="zip",
                                          enqueue=True,
                                          encoding='utf-8',
                                          level=level
                                          )
        if handler == 'stderr' and HANDLERS['stderr'] is None:
            HANDLERS['stderr'] = logger.add(sys.stderr, enqueue=True, level=level)
        if handler == 'json' and HANDLERS['json'] is None:
            HANDLERS['json'] = logger.add(sys.stderr, format=formatter,
                                          enqueue=True, level=level)
