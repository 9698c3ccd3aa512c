# Import all supercongruence modules to trigger @register decoration.
from apps.padic.catalog import (
    binomial,  # noqa: F401
    dwork_type,  # noqa: F401
    hypergeometric,  # noqa: F401
)
