"""Search for imaginary abelian fields whose unramified Iwasawa module over the
compositum of all Z_p-extensions is trivial, pseudo-null, or nonzero and
pseudo-null, and emit certificates that can be rechecked with integer
arithmetic alone."""

from .arith import is_prime, kronecker, mod_pow, primes_in_class, squarefree_kernel
from .certifier import (
    Certificate,
    Claim,
    classify_pseudonull_quadratic,
    classify_trivial,
    certify_nonfree,
    certify_nonzero_pseudonull,
    certify_pseudonull,
    certify_trivial,
    verify,
)
from .errors import (
    ConsistencyError,
    DomainError,
    NotFoundWithinBudget,
    PremiseRejected,
    UnsupportedConfiguration,
)
from .quadratic import (
    QuadField,
    SplittingType,
    class_number,
    class_number_dirichlet,
    class_number_forms,
    genus_parity_check,
    quad_field_from_disc,
    quad_field_from_radicand,
    splitting_in_quad,
)
from .serialization import (
    CertificateFormatError,
    certificate_from_dict,
    certificate_to_dict,
    dumps_json,
    loads,
    to_json_line,
    to_text,
)
from .tower import (
    EllWitness,
    FieldDescriptor,
    choose_base_field,
    describe_composite_field,
    find_ell,
    inert_in_first_layer,
    splits_completely_kummer,
)

__version__ = "0.1.0"
