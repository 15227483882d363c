from .curve import (DEGREE_DIRECTIONS, Contraction, CurveFormatError, CuspSignature, Edge,
                    InvalidEdge, NonPositiveValuation, Ray, TropicalCurve, check_balancing,
                    check_degree, check_geometry, contract_edges, cusp_signature,
                    is_trivalent, node_edge_length)
from .floor import FloorDiagram, floor_diagrams, severi_degree_floor
from .lattice_paths import (EPSILON, BASE, MAX_DEGREE, EnumeratedCurve, EnumerationResult,
                            OutOfRange, RealizationError, enumerate_curves, point_configuration,
                            severi_degree)
