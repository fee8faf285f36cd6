"""Exact tools for skew matrices of linear forms on P4, their Pfaffians, and
matrix factorizations of cubic threefolds by skew 8x8 matrices."""

from .classify import (Fingerprint, StabilityLabel, TableClass, classify_table,
                       curve_ideal_generators, fingerprint, stability_of)
from .congruence import (BlockSquareRoot, JordanData, congruence_instance, jordan_form,
                         nilpotent_sqrt, skew_congruence_witness, verify_block_vanishing)
from .field import QuadraticNumber, sqrt_in_field
from .mf import (GammaElement, MFTriple, VerifyReport, gamma_apply, gamma_invert,
                 mf_caseB_check, mf_from_pfaffian, mf_normalize_caseA, mf_verify, psi)
from .ring import Poly, QMatrix, parse_poly, qmat_kernel, span_dimension, variables
from .skew import (PolyMatrix, SkewPolyMatrix, congruence_transform, determinant, pf_adjoint,
                   pfaffian, sub_pfaffians)
from .syzygy import (GradedMap, SyzygyBasis, all_minors_2x2, graded_kernel, ideal_contains,
                     ideal_equal_in_degree, linear_syzygy_matrix)
from .table import table1_matrix, table1_pair, table1_syzygy

__version__ = "0.1.0"
