"""Double Grothendieck polynomials, fixed-point localization and
weight-variety presentations.

Permutations are one-line, 1-based, and compose right to left.  Complex
results (reports, restriction classes, presentations) come back as the same
JSON text the ``kflag`` command-line tool prints.
"""

from ._kflag import (
    InternalError,
    InvalidInput,
    KflagError,
    LaurentPoly,
    LimitExceeded,
    NotDivisible,
    NotInSpan,
    NotRegular,
    Permutation,
    SoundnessFailure,
    bruhat_leq,
    canonical_zero_test,
    decompose,
    delta,
    enumerate,
    grothendieck,
    is_regular,
    kernel_generators,
    permuted_bruhat_leq,
    permuted_grothendieck,
    pi,
    pi_along,
    pi_word,
    presentation,
    restrict,
    restrict_all,
    support,
    top,
    verify_support_theorem,
    word_product,
)

__all__ = [name for name in dir() if not name.startswith("_")]
