"""Exact computer algebra for multiple zeta values over F_q[T].

The package computes in GF(q)((1/T)) with precision tracking, carries
the harmonic and q-shuffle index algebras over F_q(T), rewrites values
into Thakur-basis coordinates, builds the weight-graded quotients by
the weight-(q-1) zeta value, realizes the dagger involution as exact
matrices, and cross-checks all of it numerically, plus a small
characteristic-zero companion.
"""

from .algebra import (FieldElem, FieldSpec, LaurentSeries, Poly, RatFunc,
                      carlitz_bracket, carlitz_l, field, poly_lucas_binom,
                      rat_to_laurent)
from .charzero import RealValue, dual_index, mzdv_num, mzv_num
from .dependence import DependenceProblem, find_dependence, recommended_precision
from .errors import (DivisionByZero, EmptyIndex, FFMZVError, InsufficientPrecision,
                     InvalidInput, NotAdmissible, PrecisionTooExpensive,
                     ReductionDiverged)
from .evaluate import EvalBudget, Evaluator, ValueFamily, default_precision
from .indices import (EMPTY, Index, IndexAlgebra, IndexPoly, ProductKind, classify,
                      compositions, parse_index, repeat, thakur_indices)
from .reduction import (BasisVector, IotaMatrix, QuotientSpace, Reducer,
                        TDecomposition)
from .reports import Case, Report

__version__ = "0.1.0"
