from .hermite import (HermiteGaussBasis, hermite_functions, hermite_gauss_eval,
                      hermite_function_derivatives, gauss_hermite_rule, default_quad_order)
from .doppler import (DopplerGenerator, doppler_unitary_matrix, doppler_generator,
                      generator_closed_form, embed_quadratures)
from .schmidt import (SchmidtSpectrum, schmidt_spectrum, truncation_order, jsa_eval,
                      jsa_marginal, jsa_marginal_variance)
