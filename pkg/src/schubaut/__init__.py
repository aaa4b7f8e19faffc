"""Automorphism groups and tangent cohomology of Schubert varieties in G/B."""

from .autreport import AutVerdict, criterion, kernel_structure, report, verdict
from .bmod import (GSubspace, borel, decompose_bgamma, h0_module, h0_step, h0_tangent_char,
                   h1_module_char, h1_step_char, h1_tangent_char, whole)
from .charring import SignedCharacter, demazure_char, demazure_op, euler_char_module, weyl_char_oracle
from .errors import InvalidInput, InvariantViolation, Refused, ResourceLimit, SchubautError
from .rootsys import RootSystem, build, dot_action
from .schubert import is_smooth, poincare_polynomial, stabilizer_parabolic, tangent_dim_at_base
from .weyl import WeylElement, bruhat_leq, from_word, interval_below, inversions, longest, support

__version__ = "0.1.0"
