"""Niho bent functions, hyperovals and their equivalence classes over GF(2^m).

Modules: gf2m (field tower arithmetic), geometry (PG(2,q) in two models),
opoly (o-polynomial catalog), gfun (g-functions on the unit circle), bent
(truth tables, Walsh spectra, Niho polynomial forms), equiv (collineations,
stabilizers, equivalence classes), cli (command line driver).
"""

from .gf2m import (DEFAULT_MODULI, ExtElement, FieldElement, FieldError, FieldParams,
                   UnitCircle, bilinear_form, dickson_eval, exponent_inverse,
                   field_create, polar_decompose, spread_i, traces_and_norm,
                   unit_circle)
from .geometry import (Hyperoval, LineH, LineK, LineOval, Oval, ProjPointH,
                       ProjPointK, h_to_k, incident_h, incident_k, is_hyperoval,
                       is_line_oval, is_oval, k_to_h, line_oval_points, nucleus)
from .opoly import OPolyFamily, is_opolynomial, opoly_table, transform_pi
from .gfun import (GFunction, fix_zeros, g_catalog, g_from_opoly, g_from_oval,
                   g_monomial, g_series, g_shift, validate_g)
from .bent import (BooleanFn, NihoPolynomial, WalshSpectrum, bent_from_g, dual,
                   dual_lineoval_check, f_shift, f_translation, f_univariate,
                   is_bent, walsh_spectrum)
from .equiv import (BentClass, ClassifyResult, Collineation, OrbitDecomposition,
                    are_equivalent, classify_bent, closure_order, orbits_on_points,
                    stabilizer)

__version__ = "0.1.0"
