"""2D digital topology toolkit.

Neighborhood metrics on 3x3 configurations (topological numbers,
Hilditch crossing number, Yokoi numbers), simple-point classification
for both (4,8) and (8,4) connectivity pairs with an exhaustive
brute-force oracle, sequential topology-preserving thinning, PBM image
I/O and a command-line interface.
"""

from ._kernels import BACKEND
from .grid import (BLACK, OFFSETS, WHITE, Labeling, as_grid, complement_config,
                   count_components, extract_config, get_pixel,
                   label_components, neighbors, opposite_adjacency,
                   paint_config)
from .metrics import (HILDITCH_TABLE, T4_TABLE, T8_TABLE, Y4_TABLE, Y8_TABLE,
                      hilditch_number, is_interior, is_isolated,
                      topological_number, topological_number_complement,
                      yokoi_number)
from .simple import (Characterization, build_lut, image_is_simple, is_simple,
                     locality_mismatches, lut_to_bitstring, lut_to_hex,
                     oracle_is_simple, simple_point_map, simplicity_lut)
from .enumeration import (EXPECTED_DISTRIBUTIONS, EXPECTED_SIMPLE_COUNT,
                          DeletabilityRate, EquivalenceReport,
                          PropositionCheck, deletability_rate, distribution,
                          duality_check, equivalence_report, write_tables_csv)
from .thinning import (ThinningPolicy, ThinningReport, audit, is_endpoint,
                       remaining_deletable, thin)
from .pbm import PBMError, read_pbm, write_pbm

__version__ = "0.1.0"
