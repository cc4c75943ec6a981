import functools
import logging
import os
import pathlib
import sys
import time

import shortuuid
from termcolor import colored

_LEVEL_TAGS = {
    logging.WARNING: colored('WARNING', 'yellow', attrs=['bold']),
    logging.ERROR: colored('ERROR', 'red', attrs=['bold']),
    logging.CRITICAL: colored('CRITICAL', 'red', attrs=['bold', 'underline']),
}


class _ColorfulFormatter(logging.Formatter):
    """Shortens ``qdoppler.<pkg>.<module>`` to ``<pkg>.<module>`` and tags warnings and errors.

    ``run_tag`` (the spec hash prefix during a sweep) is shown in every stdout line
    so interleaved runs stay apart.
    """

    def __init__(self, fmt, datefmt=None, *, root_name='qdoppler', run_tag=None):
        super().__init__(fmt, datefmt=datefmt)
        self._root_prefix = root_name + '.'
        self._run_tag = run_tag

    def formatMessage(self, record):
        name = record.name
        if name.startswith(self._root_prefix):
            name = name[len(self._root_prefix):]
        if self._run_tag:
            name = f'{self._run_tag} {name}'
        record.short_name = name
        log = super().formatMessage(record)
        tag = _LEVEL_TAGS.get(record.levelno)
        return f'{tag} {log}' if tag else log


# so that calling setup_logger multiple times won't add many handlers
@functools.lru_cache()
def setup_logger(output=None, *, color=True, name='qdoppler', run_tag=None, level=logging.INFO):
    """Stdout logger for the ``qdoppler`` package, plus a plain log file when ``output`` is set.

    Args:
        output (str): a ``.log``/``.txt`` file name, or a directory receiving ``log.txt``.
        run_tag (str): short tag prefixed to stdout lines, e.g. the first digits of the spec hash.

    Returns:
        logging.Logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.propagate = False

    plain_formatter = logging.Formatter('[%(asctime)s] %(name)s %(levelname)s: %(message)s',
                                        datefmt='%m/%d %H:%M:%S')
    ch = logging.StreamHandler(stream=sys.stdout)
    ch.setLevel(level)
    if color:
        ch.setFormatter(_ColorfulFormatter(colored('[%(asctime)s %(short_name)s]: ', 'green') + '%(message)s',
                                           datefmt='%m/%d %H:%M:%S', root_name=name, run_tag=run_tag))
    else:
        ch.setFormatter(plain_formatter)
    logger.addHandler(ch)

    if output is not None:
        filename = output if output.endswith(('.txt', '.log')) else os.path.join(output, 'log.txt')
        os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
        fh = logging.StreamHandler(_cached_log_stream(filename))
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(plain_formatter)
        logger.addHandler(fh)
    logging.root = logger
    return logger


# cache the opened file object, so that different calls to `setup_logger`
# with the same file name can safely write to the same file.
@functools.lru_cache(maxsize=None)
def _cached_log_stream(filename):
    return open(filename, "a")


# ================ run folder ==================
def generate_run_directory(cfg, exp_name=None, run_name=None, out_dir=None):
    """Create the folder a sweep writes into and record its paths on cfg.
    Args:
        cfg: configuration dict
        cfg.output.root_dir: where auto-named runs are created.
        exp_name: tag for the run (usually the config file stem)
        run_name: the name for the current run. auto generated if None
        out_dir: explicit output folder; overrides the generated one
    """
    output = cfg.setdefault('output', type(cfg)())
    if out_dir is not None:
        run_dir = out_dir
        run_name = run_name or os.path.basename(os.path.normpath(out_dir))
    else:
        if run_name is None:
            expid = time.strftime('%Y%m%d-%H%M%S-') + str(shortuuid.uuid())
            if isinstance(exp_name, (list, tuple)):
                exp_name = '-'.join(exp_name)
            run_name = '-'.join([exp_name, expid]) if exp_name else expid
        run_dir = os.path.join(output.get('root_dir', 'log/'), run_name)
    output.run_name = run_name
    output.run_dir = run_dir
    output.log_path = os.path.join(run_dir, run_name + '.log')
    output.csv_path = os.path.join(run_dir, 'results.csv')
    output.plot_dir = os.path.join(run_dir, 'plots')
    pathlib.Path(run_dir).mkdir(parents=True, exist_ok=True)
    return run_dir
