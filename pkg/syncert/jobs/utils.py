import functools
import time
from pathlib import Path

import pandas as pd
from loguru import logger

from syncert.configs.jobs.common import JobConfig
from syncert.constants import SYNCERT_RESULTS_PATH

CSV_FLOAT_FORMAT = "%.17g"


def timer(func):
    """Decorator which times the execution of the wrapped func.
    Execution time is logged and also returned together with func's returned value
    (output will be a tuple).
    """

    @functools.wraps(func)
    def wrapper_timer(*args, **kwargs):
        tic = time.perf_counter()
        value = func(*args, **kwargs)
        toc = time.perf_counter()
        elapsed_time = toc - tic
        logger.info(f"Elapsed time for {func.__name__}: {elapsed_time:0.4f} seconds")
        return value, elapsed_time

    return wrapper_timer


def output_path(config: JobConfig, default_name: str) -> Path:
    """Configured output path, else `$SYNCERT_RESULTS/<job name>/<default_name>`."""
    if config.output_path is not None:
        return Path(config.output_path)
    return Path(SYNCERT_RESULTS_PATH) / config.name / default_name


def save_table(table: pd.DataFrame, path: Path) -> Path:
    logger.info(f"Storing into {path}...")
    try:
        path.parent.mkdir(exist_ok=True, parents=True)
        table.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)
    except OSError as e:
        logger.error(e)
        raise
    return path


def save_text(text: str, path: Path) -> Path:
    logger.info(f"Storing into {path}...")
    try:
        path.parent.mkdir(exist_ok=True, parents=True)
        path.write_text(text + "\n")
    except OSError as e:
        logger.error(e)
        raise
    return path
