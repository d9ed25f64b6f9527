"""braidring: exact canonical forms and a verified braid group action for a
level-layered quantum algebra, with an HTTP service and CLI on top."""

__version__ = "0.1.0"

from .algebra import (
    CanonicalForm,
    Element,
    canonicalize,
    equals,
    generator,
    quantum_bracket,
    straighten,
    straighten_step,
)
from .braid import (
    BraidWord,
    CheckReport,
    apply,
    format_braid_word,
    parse_braid_word,
    sigma_on_generator,
    verify_braid_relations,
    verify_inverse,
    verify_relation_preservation,
)
from .cartan import CartanDatum, cartan, from_label, pairing
from .coeffs import LaurentPoly, RationalFunction, t_power
from .exprs import ParseError, parse_element, parse_scalar
from .shuffle import char_of_generator_product, shuffle_mul
from .suites import RunConfig, run, run_config
from .typea import (
    Segment,
    TypeAContext,
    dual_shift,
    head_class,
    segment_class,
    verify_proposition,
    verify_reflection_on_generators,
)

__all__ = [
    "__version__",
    "CanonicalForm",
    "Element",
    "canonicalize",
    "equals",
    "generator",
    "quantum_bracket",
    "straighten",
    "straighten_step",
    "BraidWord",
    "CheckReport",
    "apply",
    "format_braid_word",
    "parse_braid_word",
    "sigma_on_generator",
    "verify_braid_relations",
    "verify_inverse",
    "verify_relation_preservation",
    "CartanDatum",
    "cartan",
    "from_label",
    "pairing",
    "LaurentPoly",
    "RationalFunction",
    "t_power",
    "ParseError",
    "parse_element",
    "parse_scalar",
    "char_of_generator_product",
    "shuffle_mul",
    "RunConfig",
    "run",
    "run_config",
    "Segment",
    "TypeAContext",
    "dual_shift",
    "head_class",
    "segment_class",
    "verify_proposition",
    "verify_reflection_on_generators",
]
