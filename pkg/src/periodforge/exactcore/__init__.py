from .gaussian import QQ, GQ, GaussianRational, qq
from .hpoly import HPoly, grevlex_key, monomials_of_degree, num_monomials
from .lattice import (IntegerLattice, det, elementary_divisors, hnf, imat,
                      ident, integer_rank, izeros, lattice_complement,
                      right_kernel, snf, solve_left, unimodular_inverse)
from .lll import integer_row_relations, lll_reduce, lll_relations
from .unipoly import RationalFunction
