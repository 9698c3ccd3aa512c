class StatementError(Exception):
    """Base class for catalog and verification errors."""


class UnknownStatementError(StatementError, KeyError):
    """Raised when a statement id is not in the catalog."""

    def __init__(self, statement_id: str):
        self.statement_id = statement_id
        super().__init__(f"Unknown statement: {statement_id}")

    def __str__(self) -> str:
        return self.args[0]


class ParameterConstraintError(StatementError):
    """Raised when parameters fall outside a statement's hypotheses."""

    def __init__(self, statement_id: str, params: object, constraint: str):
        self.statement_id = statement_id
        self.params = params
        self.constraint = constraint
        super().__init__(f"parameter constraint violated for {statement_id} at {params}: requires {constraint}")


class MalformedInstanceError(StatementError):
    """Raised when an instance needs a fractional q-exponent that does not vanish with its symbol."""

    def __init__(self, statement_id: str, detail: str):
        self.statement_id = statement_id
        self.detail = detail
        super().__init__(f"malformed statement instance {statement_id}: {detail}")


class DegreeBudgetExceededError(StatementError):
    """Raised when the dense oracle is asked for an instance beyond its degree budget."""

    def __init__(self, statement_id: str, predicted: int, budget: int):
        self.statement_id = statement_id
        self.predicted = predicted
        self.budget = budget
        super().__init__(
            f"dense degree budget exceeded for {statement_id}: predicted degree {predicted} > budget {budget}"
        )
