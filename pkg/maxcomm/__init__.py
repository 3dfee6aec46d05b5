"""__init__.py
This file is part of maxcomm
Licensed under MIT License
"""

from . import maxcomm_main
from .centralizer import commutant, end_algebra, hom_lift, is_maximal_commutative
from .maxcomm_main import case_table, verify_all, verify_case
from .modules import ModuleRep, filtration, sample_module, socle
from .normal_form import appendix_replay, structured_end_solver, triple_normal_form

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"
__version__ = "1.0"
