"""Exact partition distributions, Krawtchouk coefficients and MacWilliams
transforms for matrix codes over finite fields."""

from .budget import enumeration_budget, get_budget, set_budget
from .codes import (MatrixCode, code_span, distribution, dual_code, full_code, is_mrd,
                    min_rank_distance, mrd_field_embedding, pad_code, random_codes, zero_code)
from .errors import (BoundViolation, BudgetExceeded, EmptyCode, InexactDivision, NonIntegerResult,
                     NonMonotone, NonPrime, QpartError, ReducibleModulus, ShapeMismatch,
                     UnsupportedSize)
from .ferrers import FerrersBoard, board_new, parse_board, rank_dist, rook_poly_closed
from .gf import FieldCtx, field_new, field_of_order
from .kraw import DUAL_KIND, KINDS, dual_partition, kraw_table, macwilliams_transform
from .laurent import LaurentPolyZ
from .matgf import MatGF, PivotList, Subspace, piv, rank, rpiv, rref

__version__ = "0.1.0"
