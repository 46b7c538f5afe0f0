"""Distance magic circulants of valency 6.

Connection sets are strings "n:a,b,c"; families are strings such as
"T1b[5,7,11]". Every labeling returned has been verified in C++.
"""

from ._circmagic import (  # noqa: F401
    DomainError,
    SearchFailure,
    admissible,
    candidate_filter,
    canonical,
    decide,
    enumerate_families,
    enumerate_sets,
    family_set,
    label,
    normalize,
    recognize,
    search,
    tetravalent_sublabeling,
    verify,
)

__version__ = "0.1.0"
