"""Error taxonomy shared by the library and the command line front end."""


class InputError(ValueError):
    """Invalid values, malformed documents, or bad parameters.

    kind is a short machine-readable tag: value, parameter, parse, schema,
    family_mismatch, scale, graph, shape.
    """

    def __init__(self, message, kind="value"):
        super().__init__(message)
        self.kind = kind


class DegenerateError(ArithmeticError):
    """Numerically degenerate situation with no defined answer.

    Raised when a derivation collapses (all entropies one, zero deviations,
    zero-modulus ideal, infeasible weight bounds).
    """

    def __init__(self, message, kind="degenerate"):
        super().__init__(message)
        self.kind = kind
