"""Variable screening: the fused Kolmogorov filter and marginal baselines."""
from .core import FilterConfig, VariableScore, ScreeningResult, default_dn, rank_by_score
from .kfilter import khat_single, khat_single_bruteforce, khat_fused, scheme_statistics, screen, validate_design
from .baselines import BaselineMethod, sis_screen, rcs_screen, dcs_screen
from .methods import MethodSpec, run_method, FUSED, KOLMOGOROV
