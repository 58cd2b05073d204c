"""Exact arithmetic for quarto-quartic Cremona transformations of P3."""

from .chow import ChowClass, gamma_class, integrate_blowup, ruled_degree, x_class
from .domains import QQ, PrimeField
from .errors import (BudgetExceeded, CertificateError, CremonaError, Inconclusive, NotAnInverse,
                     ParseError, StructuralError, UnclassifiedSingularity)
from .families import (Construction, construct, dimension_formula, explicit_example,
                       jonquieres_inverse, make_conic, make_determinantal, make_jonquieres,
                       make_loria, make_ruled)
from .fixtures import Fixture, dump_fixture, load_fixture, read_fixture
from .groebner import buchberger
from .hilbert import HilbertData
from .ideal import (Ideal, count_distinct_points, elimination, graded_piece, ideal_intersection,
                    ideal_membership, ideal_quotient, saturation)
from .polynomial import PolyMatrix, Polynomial, Ring, parse_polynomial
from .ratmap import (RationalMap, analyze, base_ideal, compose_check, genus, image_of_hypersurface,
                     inverse_degree, is_birational, sing_scheme)

__version__ = "0.1.0"
