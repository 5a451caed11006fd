"""Exact linear algebra over Z/p^mZ, cyclic-subgroup conjugacy, and small finite groups.

The central question: when are two relative holomorphs V x| <a> and V x| <b>
isomorphic?  Over a field the answer is a normal-form computation
(``holomorph_isomorphic``); everything else here supports checking that
answer against brute force and reproducing the worked examples.
"""

from .conjugacy import ConjugacyDecision, Verdict, cyclic_conjugate_field, cyclic_conjugate_ring, holomorph_isomorphic
from .howell import AbelianInvariants, howell_span
from .matrix import Matrix, det, mat_inv, mat_mul, matrix_order, reduce_mod_p
from .normal_forms import InvariantFactorList, UnipotentPartition, invariant_factors, is_similar, rcf, unipotent_partition
from .poly import Polynomial, charpoly, is_squarefree, minpoly
from .ring import RingSpec

__version__ = "0.1.0"
