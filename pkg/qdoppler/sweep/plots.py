"""Static SVG maps of ``ratio_db`` over the varying grid axes."""
import itertools
import logging
import os

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

plt.rcParams['svg.hashsalt'] = 'qdoppler'
plt.rcParams['savefig.bbox'] = 'tight'

LABELS = dict(sigma_p=r'$\sigma_p$ (rad/s)', c_xi=r'$\xi / K$', n_s=r'$N_S$', eta=r'$\eta$', n_b=r'$N_B$')


def _tag(fixed):
    return '_'.join(f'{name}={value:.4g}' for name, value in fixed.items()) or 'all'


def _save(fig, path):
    fig.savefig(path, format='svg', metadata={'Date': None})
    plt.close(fig)
    logging.getLogger(__name__).info('wrote %s', path)
    return path


def heatmap(values, x, y, x_name, y_name, title=''):
    """``values[i, j]`` at ``(x[j], y[i])``; log axes when every coordinate is positive."""
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    mesh = ax.pcolormesh(x, y, values, cmap='viridis', shading='nearest')
    fig.colorbar(mesh, ax=ax, label=r'$10\log_{10}(J_q / J_c)$ (dB)')
    if np.all(x > 0) and len(x) > 1:
        ax.set_xscale('log')
    if np.all(y > 0) and len(y) > 1:
        ax.set_yscale('log')
    ax.set_xlabel(LABELS[x_name])
    ax.set_ylabel(LABELS[y_name])
    ax.set_title(title, fontsize=9)
    return fig


def line_plot(x, curves, x_name):
    fig, ax = plt.subplots(figsize=(5.5, 4.))
    for label, y in curves:
        ax.plot(x, y, marker='o', markersize=3, label=label)
    if np.all(x > 0):
        ax.set_xscale('log')
    ax.set_xlabel(LABELS[x_name])
    ax.set_ylabel(r'$10\log_{10}(J_q / J_c)$ (dB)')
    ax.grid(True, alpha=0.3, linestyle='--', linewidth=0.5)
    if len(curves) > 1:
        ax.legend(fontsize=7)
    return fig


def write_plots(rows, spec, plot_dir):
    """One heatmap per combination of the non-plotted axes (the last two varying
    axes are plotted), or one line plot when a single axis varies."""
    os.makedirs(plot_dir, exist_ok=True)
    axes = spec.axes
    names = list(axes)
    shape = [len(values) for values in axes.values()]
    ratio_db = np.array([row.ratio_db for row in rows]).reshape(shape)
    varying = [k for k, n in enumerate(shape) if n > 1]
    paths = []
    if not varying:
        logging.getLogger(__name__).info('single grid point, no plot written')
        return paths
    if len(varying) == 1:
        k = varying[0]
        path = os.path.join(plot_dir, f'ratio_db_vs_{names[k]}.svg')
        paths.append(_save(line_plot(axes[names[k]], [('', ratio_db.reshape(-1))], names[k]), path))
        return paths
    y_axis, x_axis = varying[-2:]
    others = [k for k in range(len(shape)) if k not in (x_axis, y_axis)]
    for index in itertools.product(*[range(shape[k]) for k in others]):
        selector = [slice(None)] * len(shape)
        fixed = {}
        for k, i in zip(others, index):
            selector[k] = i
            if shape[k] > 1 or names[k] == 'sigma_p':
                fixed[names[k]] = float(axes[names[k]][i])
        values = ratio_db[tuple(selector)]
        title = ', '.join(f'{name} = {value:.4g}' for name, value in fixed.items())
        fig = heatmap(values, axes[names[x_axis]], axes[names[y_axis]], names[x_axis], names[y_axis], title)
        path = os.path.join(plot_dir, f'ratio_db_{names[y_axis]}_{names[x_axis]}_{_tag(fixed)}.svg')
        paths.append(_save(fig, path))
    return paths
