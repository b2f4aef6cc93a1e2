"""Combinatorics of the permutations in left-normed long commutators."""

from .permutations import (
    Permutation, all_permutations, compose, descending_cycle, embed,
    format_one_line, format_two_row, identity, inverse, parse_one_line,
    parse_two_row, reverse_perm,
)
from .tm_set import (
    NotInTmError, TmMembershipWitness, count_tm, count_tm_t, enumerate_tm,
    enumerate_tm_t, fixed_block_product, fixed_block_subset, is_member_block,
    is_member_cycles, is_member_descent, is_member_tau, recompose_tau,
    recompose_witness, sign, tau_decomposition, tm_record, witness,
)
from .commutator_algebra import (
    GroupAlgebraElement, NCPolynomial, apply_ga_to_word, commutator,
    commutator_recursive, commutator_via_tm, ga_add, ga_mul, ga_one, ga_sub,
    nc_add, nc_mul, nc_sub, variable, vm_cycles, vm_definition, vm_tau,
)
from .matrix_oracle import (
    SparseIntMatrix, evaluate_polynomial, permuted_commutator,
    permuted_product, permuted_product_is_nonzero, random_unit_chain, unit,
    unit_chain,
)
from .sequence_action import (
    INFINITY, CoincidencePair, SpectrumSequence, act, classify_symbol,
    e_term, find_coincidence, is_special_pair, level_values, m_levels,
    mirror_witnesses, mirrored_bruteforce, mirrored_fast, occurrence_index,
    occurrence_profile, parse_sequence, project, restrict, rev, spectrum,
    tm_orbit,
)

__version__ = "0.1.0"
