"""Census of hyperbolic 3-manifolds M_{g,k} with geodesic boundary and cusps."""

from .census import CensusTable, admissible_filter, enumerate_census
from .filling import Slope, classify_filling, farey_distance
from .geometry import check_canonical, solve_angles, tilts
from .graphs import enumerate_graphs, growth_bounds_check
from .homology import homology_h1
from .isosig import decode_signature, iso_signature
from .records import CensusRecord, decode_record, encode_record, read_census, write_census
from .regression import run_regression
from .triangulation import Triangulation, boundary_profile, edge_classes
from .turaev_viro import TVParams, sixj, tv_value
from .volume import manifold_volume

__version__ = "0.1.0"
