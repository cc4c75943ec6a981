from .layout import ModeLabel, ModeLayout, make_symplectic_form
from .state import GaussianState, GaussianChannel, apply_channel
from .symplectic import (symplectic_eigenvalues, pair_symplectic_eigenvalues, tmsv_block,
                         passive_symplectic, random_passive_symplectic, is_physical, is_symplectic)
from .qfi import qfi_gaussian
from .fidelity import gaussian_fidelity
