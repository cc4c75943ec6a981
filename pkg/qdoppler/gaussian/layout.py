"""Mode bookkeeping and the symplectic form.

Quadratures are interleaved: ``[Q_1, P_1, ..., Q_M, P_M]`` with vacuum
covariance equal to the identity and ``Q = (a + a^dagger) / sqrt(2)``.
"""
from collections import namedtuple
from typing import Iterable, List, Sequence

import numpy as np

from ..errors import InvalidArgumentError

ROLES = ('signal', 'idler', 'aux')
_ROLE_RANK = {role: rank for rank, role in enumerate(ROLES)}

ModeLabel = namedtuple('ModeLabel', ['role', 'index'])

OMEGA_1 = np.array([[0., 1.], [-1., 0.]])


def make_symplectic_form(mode_count: int) -> np.ndarray:
    """Block-diagonal direct sum of ``[[0, 1], [-1, 0]]``, one block per mode."""
    if isinstance(mode_count, bool) or int(mode_count) != mode_count or mode_count < 1:
        raise InvalidArgumentError(f'mode_count must be a positive integer, got {mode_count!r}')
    return np.kron(np.eye(int(mode_count)), OMEGA_1)


class ModeLayout:
    """Ordered list of labelled modes."""

    def __init__(self, labels: Iterable):
        labels = tuple(ModeLabel(*label) for label in labels)
        if not labels:
            raise InvalidArgumentError('a layout needs at least one mode')
        for label in labels:
            if label.role not in _ROLE_RANK:
                raise InvalidArgumentError(f'unknown mode role {label.role!r}')
        if len(set(labels)) != len(labels):
            raise InvalidArgumentError(f'duplicate mode labels in {labels}')
        self._labels = labels
        self._position = {label: k for k, label in enumerate(labels)}

    @classmethod
    def canonical(cls, n_signal: int, idler_indices=None, n_aux: int = 0):
        """Signal modes first, then idlers, then auxiliary modes.

        ``idler_indices`` defaults to one idler per signal mode.
        """
        if idler_indices is None:
            idler_indices = range(n_signal)
        labels = [ModeLabel('signal', m) for m in range(n_signal)]
        labels += [ModeLabel('idler', m) for m in idler_indices]
        labels += [ModeLabel('aux', m) for m in range(n_aux)]
        return cls(labels)

    @property
    def labels(self):
        return self._labels

    @property
    def count(self) -> int:
        return len(self._labels)

    @property
    def dim(self) -> int:
        return 2 * len(self._labels)

    def roles(self, role: str) -> List[ModeLabel]:
        return [label for label in self._labels if label.role == role]

    def is_canonical(self) -> bool:
        ranks = [_ROLE_RANK[label.role] for label in self._labels]
        return ranks == sorted(ranks)

    def index_of(self, label) -> int:
        label = ModeLabel(*label)
        if label not in self._position:
            raise InvalidArgumentError(f'{label} is not part of this layout')
        return self._position[label]

    def quadrature_indices(self, labels: Sequence) -> np.ndarray:
        """Row indices of ``[Q, P]`` for each label, in the order given."""
        modes = [self.index_of(label) for label in labels]
        return np.array([[2 * k, 2 * k + 1] for k in modes], dtype=int).reshape(-1)

    def signal_first_permutation(self) -> np.ndarray:
        """Quadrature permutation taking this layout to its canonical ordering."""
        order = sorted(self._labels, key=lambda label: (_ROLE_RANK[label.role], self._position[label]))
        return self.quadrature_indices(order)

    def sub_layout(self, labels: Sequence) -> 'ModeLayout':
        for label in labels:
            self.index_of(label)
        return ModeLayout(labels)

    def __len__(self):
        return self.count

    def __eq__(self, other):
        return isinstance(other, ModeLayout) and self._labels == other._labels

    def __hash__(self):
        return hash(self._labels)

    def __repr__(self):
        text = ', '.join(f'{label.role[0]}{label.index}' for label in self._labels)
        return f'ModeLayout([{text}])'
