"""Exact finite Radon transforms, finite ghosts and limited-angle reconstruction.

All arithmetic is done with residues modulo a prime, so every transform,
convolution and reconstruction in this package is bit exact.
"""
from .deghost import (DeghostPlan, InconsistentDataError, RedundancyError, build_deconv_ghost,
                      deghost_rows, lift_residues, reconstruct_space, reversed_angles)
from .frt import (FrtSpace, cbp_partial, circulant, embed, frt_forward, frt_inverse,
                  place_slice, slice_coordinates, transpose_space)
from .ghost import (GhostSpec, build_ghost_1d, build_ghost_2d_oracle, build_operator_table,
                    ghost_zero_check, kernel_translate, operator_table)
from .modring import (ModRing, find_primitive_root, mod_inverse, prime_factorize,
                      select_modulus)
from .mojette import (MojetteProjection, RationalAngle, generate_angle_set, katz_check,
                      map_angle_to_frt, mapping_multiplicity, mojette_project,
                      mojette_to_frt_row)
from .ntt import intt, ntt, ntt_direct, ntt_pow2, ntt_rader
from .pipeline import PipelineConfig, benchmark, reconstruct

__version__ = "0.1.0"
