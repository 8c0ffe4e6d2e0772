"""Exact combinatorial toolkit for the Rouquier dimension of normal
toric varieties: fans and Cox data, the Bondal-Ruan map and its
stratification of the torus, incidence algebras of CW posets with their
quadratic duals, and FLTZ skeleton membership/inclusion checks.

All computation is exact (integers and fractions); reports and renders
are byte-for-byte deterministic.
"""

__version__ = "0.1.0"

from .exact import (GClass, QuotientGroup, SmithDecomposition,
                    elementary_divisors, kernel_basis, lattice_contains,
                    saturation, smith_normal_form)
from .fan import Fan, FanFormatError, cone_lattices, cox_data, validate_fan
from .bondal_ruan import (arrangement_faces, br_stratification,
                          frobenius_level_set, image_phi, phi_eval)
from .incidence import (CWPoset, chain_cw, circle_cw, cw_product, diamond_cw,
                        generation_time_bounds, incidence_algebra,
                        interval_homology, koszul_hilbert_check,
                        loewy_profile, quadratic_dual, torus_cohomology_loewy,
                        torus_cw, validate_cw)
from .skeleton import (CotangentPoint, coarsening_check, skeleton_member,
                       skeleton_strata, skeleton_subset)
from .report import Report, run_report
