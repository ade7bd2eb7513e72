"""Finite fields, matrices, cyclotomic cosets and polynomials"""

from .gf import Field, SubfieldEmbedding, build_field, hermitian_field
from .linalg import Matrix
from .cosets import CosetTable, DefiningSet, coset_table
from .polyring import BigFieldContext, FactorSplit, Poly, big_field_context, factor_split
