"""Exact arithmetic for integral quadratic forms: genus theory, the rank-4
surface lattice model, and classification of imprimitive ternary forms as
refined Humbert invariants."""

from .forms import (
    QuadForm, RepVector, SearchExhausted, UnimodularMap,
    is_equivalent, reduce_form, represent, represented_values, short_vectors,
)
from .binary import (
    CHI_8, CHI_M4, CHI_M4_8, Character, SeedTriple, binary_characters,
    build_qs, char_of_form, chi_ell, coprime_residue, enumerate_P,
    genus_equal_binary, principal_genus_test, prime_represented,
    recognize_qs, two_residues,
)
from .ternary import (
    GenusProfile, LocalSplitting, adjoint, brandt_invariants,
    brandt_reciprocal, find_binary_rep, genus_equal_brandt,
    genus_equal_smith, jordan_odd, locally_equivalent, smith_data, vp_check,
)
from .surface import (
    NSElement, SurfaceModel, complete_primitive, enumerate_even_polarizations,
    f_q, genus_census, is_polarization, make_even_polarization, pairing,
    refined_humbert,
)
from .classify import (
    Certificate, check_condition1, check_condition2, classify,
    construct_witness, enumerate_forms_with_disc, verify_theorem1,
)
