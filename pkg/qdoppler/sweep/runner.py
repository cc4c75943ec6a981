import logging
import math
import multiprocessing as mp
import time

import numpy as np
from tqdm import tqdm

from ..errors import ConsistencyError, SweepPointError
from ..oracle import audit_row
from ..radar import ScenarioParams, matched_pair, xi_for_photons
from ..spectral import schmidt_spectrum
from ..utils import AverageMeter, set_random_seed
from .spec import SweepRow


def build_point(point, settings):
    """Matched pair and scenario for one grid point."""
    scenario = ScenarioParams(settings['v'], settings['omega_c'], point['eta'], point['n_b'])
    spectrum = schmidt_spectrum(point['sigma_p'], point['eps'], settings['tail_tol'], settings['min_order'])
    if settings['order'] is not None:
        spectrum = spectrum.truncated(settings['order'])
    if 'n_s' in point:
        xi = xi_for_photons(spectrum, point['n_s'])
    else:
        xi = point['c_xi'] * spectrum.K
    pair = matched_pair(point['sigma_p'], point['eps'], xi, scenario,
                        tail_tol=settings['tail_tol'], min_order=settings['min_order'], order=settings['order'],
                        duration_convention=settings['duration_convention'],
                        purity_margin=settings['purity_margin'], direct_max_dim=settings['direct_max_dim'])
    return scenario, pair


def evaluate_point(point, settings):
    start = time.perf_counter()
    scenario, pair = build_point(point, settings)
    qdr = pair.qdr
    # photon-number axes have no configured c_xi
    c_xi = point['c_xi'] if 'c_xi' in point else qdr.xi / qdr.K
    row = SweepRow(sigma_p=point['sigma_p'], eps=point['eps'], c_xi=c_xi, xi=qdr.xi,
                   eta=scenario.eta, n_b=scenario.n_b, v=scenario.v, mu=scenario.mu,
                   omega_c=scenario.omega_c, K=qdr.K, M_used=qdr.order, n_s=qdr.n_s,
                   duration=qdr.duration, jc=pair.jc, jq=pair.jq, ratio=pair.ratio,
                   ratio_db=pair.ratio_db, wall_time=0.)
    if not (row.jq > 0 and row.jc > 0 and math.isfinite(row.ratio_db)):
        raise ConsistencyError(f'row has jc={row.jc!r}, jq={row.jq!r}, ratio_db={row.ratio_db!r}')
    return row._replace(wall_time=time.perf_counter() - start)


def _evaluate(task):
    index, point, settings = task
    try:
        return index, evaluate_point(point, settings), None
    except Exception as e:  # re-raised with its point in the parent
        return index, None, e


def run_points(spec, *, threads=None, progress=True):
    """Evaluate every grid point of ``spec`` in row order.

    Raises:
        SweepPointError: the first failing point, with its parameters.
    """
    logger = logging.getLogger(__name__)
    settings = spec.settings()
    tasks = [(index, point, settings) for index, point in enumerate(spec.points())]
    threads = min(threads or spec.threads, len(tasks))
    logger.info('evaluating %d points on %d worker(s)', len(tasks), threads)
    meter = AverageMeter()
    rows = [None] * len(tasks)
    pool = mp.Pool(threads) if threads > 1 else None
    try:
        results = pool.imap(_evaluate, tasks) if pool is not None else map(_evaluate, tasks)
        for index, row, error in tqdm(results, total=len(tasks), desc='sweep', disable=not progress):
            if error is not None:
                raise SweepPointError(tasks[index][1], error) from error
            rows[index] = row
            meter.update(row.wall_time)
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
    logger.info('wall time per point: mean %.3fs, max %.3fs, total %.1fs', meter.avg, meter.max, meter.sum)
    return rows


def audit_rows(spec, rows):
    """Re-check ``ceil(audit * len(rows))`` rows, chosen with the spec seed, against the oracle.

    Raises:
        ConsistencyError: some audited row disagrees with its oracle value.
    """
    logger = logging.getLogger(__name__)
    count = int(math.ceil(spec.audit * len(rows)))
    if count == 0:
        return []
    rng = set_random_seed(spec.seed)
    chosen = np.sort(rng.choice(len(rows), size=count, replace=False))
    points = list(spec.points())
    settings = spec.settings()
    results, failures, skipped = [], [], []
    for index in chosen:
        scenario, pair = build_point(points[index], settings)
        result = audit_row(pair.qdr, scenario)
        results.append((int(index), result))
        if result.skipped:
            skipped.append(int(index))
            continue
        logger.info('audit row %d: pipeline %.10g oracle %.10g rel. error %.2e',
                    index, result.pipeline, result.oracle, result.rel_error)
        if not result.passed:
            failures.append(f'row {index} {points[index]}: rel. error {result.rel_error:.3e}')
    logger.info('audit: %d checked, %d failed, %d not resolvable by the oracle%s',
                len(results) - len(skipped), len(failures), len(skipped),
                f' (rows {skipped})' if skipped else '')
    if failures:
        raise ConsistencyError('audit failed:\n' + '\n'.join(failures))
    return results


def run_sweep(spec, *, threads=None, progress=True, plots=None):
    """Evaluate, audit and write a sweep; returns the rows.

    Files go to ``spec.cfg.output.csv_path`` and, when plotting, ``plot_dir``.
    """
    from .plots import write_plots
    from .writer import write_csv

    rows = run_points(spec, threads=threads, progress=progress)
    if spec.audit > 0:
        audit_rows(spec, rows)
    output = spec.cfg.output
    if output.get('csv_path'):
        write_csv(rows, output.csv_path, spec.hash)
        logging.getLogger(__name__).info('wrote %s', output.csv_path)
    plots = output.plots if plots is None else plots
    if plots and output.get('plot_dir'):
        write_plots(rows, spec, output.plot_dir)
    return rows
