from .scenario import ScenarioParams, SPEED_OF_LIGHT, doppler_factor, speed_from_factor
from .classical import CdrProbe, jc_exact, jc_approx, jc_via_gaussian_machinery
from .quantum import QdrProbe, build_qdr_received, jq, pruned_pairs, xi_for_photons
from .matched import MatchedPair, matched_pair
