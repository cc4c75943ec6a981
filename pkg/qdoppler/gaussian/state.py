"""Gaussian states, Gaussian channels and the channel action on moments."""
import numpy as np

from ..errors import InvalidArgumentError, InvalidChannelError
from .layout import ModeLayout, make_symplectic_form
from .symplectic import (PHYSICALITY_TOL, is_physical, physicality_gap, symmetrized,
                         symplectic_eigenvalues)


def _frozen(array):
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


def _as_layout(layout):
    if isinstance(layout, ModeLayout):
        return layout
    if isinstance(layout, int):
        return ModeLayout.canonical(0, (), n_aux=layout) if layout > 0 else ModeLayout(())
    return ModeLayout(layout)


class GaussianState:
    """First moments and covariance over a :class:`ModeLayout`.

    Vacuum has covariance equal to the identity. Arrays are read-only after
    construction, so instances can be shared between workers.
    """

    def __init__(self, layout, mean, cov, *, check=True):
        layout = _as_layout(layout)
        mean = np.asarray(mean, dtype=float).reshape(-1)
        cov = symmetrized(cov, 'cov')
        if mean.shape[0] != layout.dim or cov.shape[0] != layout.dim:
            raise InvalidArgumentError(
                f'layout has dimension {layout.dim} but mean/cov have {mean.shape[0]}/{cov.shape[0]}')
        if check and not is_physical(cov):
            raise InvalidArgumentError(
                f'covariance is unphysical: min-eig(cov + i Omega) = {physicality_gap(cov):.3e}')
        self._layout = layout
        self._mean = _frozen(mean)
        self._cov = _frozen(cov)

    @classmethod
    def vacuum(cls, layout):
        layout = _as_layout(layout)
        return cls(layout, np.zeros(layout.dim), np.eye(layout.dim), check=False)

    @classmethod
    def thermal(cls, layout, n_b):
        layout = _as_layout(layout)
        if n_b < 0:
            raise InvalidArgumentError(f'thermal occupation must be >= 0, got {n_b}')
        return cls(layout, np.zeros(layout.dim), (2. * n_b + 1.) * np.eye(layout.dim), check=False)

    @classmethod
    def coherent(cls, layout, mean):
        layout = _as_layout(layout)
        return cls(layout, mean, np.eye(layout.dim), check=False)

    @property
    def layout(self):
        return self._layout

    @property
    def mean(self):
        return self._mean

    @property
    def cov(self):
        return self._cov

    @property
    def dim(self):
        return self._layout.dim

    def symplectic_eigenvalues(self):
        return symplectic_eigenvalues(self._cov)

    def is_pure(self, tol=1e-9):
        return bool(np.all(self.symplectic_eigenvalues() <= 1. + tol))

    def reduced(self, labels):
        """Partial trace keeping ``labels`` in the given order."""
        idx = self._layout.quadrature_indices(labels)
        return GaussianState(self._layout.sub_layout(labels), self._mean[idx],
                             self._cov[np.ix_(idx, idx)], check=False)

    def permuted(self, layout):
        """Same state expressed in another ordering of the same modes."""
        layout = _as_layout(layout)
        if sorted(layout.labels) != sorted(self._layout.labels):
            raise InvalidArgumentError(f'{layout} is not a reordering of {self._layout}')
        idx = self._layout.quadrature_indices(layout.labels)
        return GaussianState(layout, self._mean[idx], self._cov[np.ix_(idx, idx)], check=False)

    def canonical(self):
        return self.permuted(ModeLayout([self._layout.labels[k // 2]
                                         for k in self._layout.signal_first_permutation()[::2]]))

    def transformed(self, matrix):
        """Conjugate by a fixed real matrix: ``mean -> S mean``, ``cov -> S cov S^T``."""
        matrix = np.asarray(matrix, dtype=float)
        return GaussianState(self._layout, matrix @ self._mean, matrix @ self._cov @ matrix.T)

    def __repr__(self):
        return f'GaussianState({self._layout!r})'


class GaussianChannel:
    """``mean -> X mean``, ``cov -> X cov X^T + Y``; completely positive by construction."""

    def __init__(self, X, Y, *, check=True, tol=PHYSICALITY_TOL):
        X = np.asarray(X, dtype=float)
        Y = symmetrized(Y, 'Y')
        if X.shape != Y.shape:
            raise InvalidArgumentError(f'X {X.shape} and Y {Y.shape} must have the same shape')
        if check:
            gap = self.cp_gap(X, Y)
            scale = max(1., float(np.max(np.abs(Y))), float(np.max(np.abs(X))) ** 2)
            if gap < -max(tol, 1e-14 * scale):
                raise InvalidChannelError(
                    f'channel is not completely positive: min-eig(Y + i Omega - i X Omega X^T) = {gap:.3e}')
        self._X = _frozen(X)
        self._Y = _frozen(Y)

    @staticmethod
    def cp_gap(X, Y):
        omega = make_symplectic_form(X.shape[0] // 2)
        return float(np.linalg.eigvalsh(Y + 1j * omega - 1j * (X @ omega @ X.T))[0])

    @classmethod
    def identity(cls, mode_count):
        dim = 2 * mode_count
        return cls(np.eye(dim), np.zeros((dim, dim)), check=False)

    @classmethod
    def thermal_loss(cls, mode_count, eta, n_b, *, unitary=None, rescaled_noise=True):
        """Lossy thermal channel on ``mode_count`` modes, optionally after a passive unitary.

        ``rescaled_noise`` keeps the received noise at ``2 N_B + 1`` regardless of
        ``eta``: ``Y = (2 N_B + 1) I - eta T T^T``, i.e. ``(2 N_B + 1 - eta) I`` for an
        orthogonal transfer ``T``; a truncated (contracting) ``T`` stays completely
        positive this way. Otherwise the beam-splitter form
        ``Y = (1 - eta)(2 N_B + 1) I`` is used.
        """
        if not 0. < eta <= 1.:
            raise InvalidArgumentError(f'eta must be in (0, 1], got {eta}')
        if n_b < 0:
            raise InvalidArgumentError(f'n_b must be >= 0, got {n_b}')
        dim = 2 * mode_count
        transfer = np.eye(dim) if unitary is None else np.asarray(unitary, dtype=float)
        if transfer.shape != (dim, dim):
            raise InvalidArgumentError(f'unitary must be {dim}x{dim}, got {transfer.shape}')
        if rescaled_noise:
            noise = (2. * n_b + 1.) * np.eye(dim) - eta * (transfer @ transfer.T)
        else:
            noise = (1. - eta) * (2. * n_b + 1.) * np.eye(dim)
        return cls(np.sqrt(eta) * transfer, noise)

    @property
    def X(self):
        return self._X

    @property
    def Y(self):
        return self._Y

    @property
    def dim(self):
        return self._X.shape[0]

    def is_unitary(self, tol=1e-10):
        omega = make_symplectic_form(self.dim // 2)
        return (np.max(np.abs(self._Y)) <= tol
                and np.max(np.abs(self._X @ omega @ self._X.T - omega)) <= tol)

    def embed(self, layout, labels):
        """Act on ``labels`` of ``layout`` and as the identity elsewhere."""
        layout = _as_layout(layout)
        idx = layout.quadrature_indices(labels)
        if idx.shape[0] != self.dim:
            raise InvalidArgumentError(f'channel acts on {self.dim // 2} modes, got {len(labels)} labels')
        X = np.eye(layout.dim)
        Y = np.zeros((layout.dim, layout.dim))
        X[np.ix_(idx, idx)] = self._X
        Y[np.ix_(idx, idx)] = self._Y
        return GaussianChannel(X, Y, check=False)


def apply_channel(state: GaussianState, channel: GaussianChannel, *, check=True) -> GaussianState:
    if not isinstance(channel, GaussianChannel):
        raise InvalidArgumentError(f'expected a GaussianChannel, got {type(channel).__name__}')
    if channel.dim != state.dim:
        raise InvalidArgumentError(f'channel dimension {channel.dim} does not match state dimension {state.dim}')
    X = channel.X
    cov = X @ state.cov @ X.T + channel.Y
    return GaussianState(state.layout, X @ state.mean, 0.5 * (cov + cov.T), check=check)
