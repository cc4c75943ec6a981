from .finite_difference import FdConfig, FdResult, qfi_finite_difference, require_mixed, richardson
from .generator import generator_by_quadrature, generator_matrix_by_quadrature
from .schmidt_svd import schmidt_by_svd, boundary_mass
from .pipelines import qdr_state_family, cdr_state_family, audit_config, audit_row, AuditResult
