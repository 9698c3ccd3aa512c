# Import all statement modules to trigger @register decoration.
from apps.statements.catalog import (
    alternating,  # noqa: F401
    central,  # noqa: F401
    h2,  # noqa: F401
)
