class NotApplicable(ValueError):
    """A formula or construction was asked for parameters outside its hypotheses."""


class RealizationError(RuntimeError):
    """A colour plan could not be turned into a concrete partition system."""


class TripleHypothesisError(ValueError):
    """Input counts violate the hypotheses of the balanced-triple recursion."""

    def __init__(self, condition: str, index: int | None = None, detail: str = ""):
        self.condition = condition
        self.index = index
        msg = condition if index is None else f"{condition} at index {index}"
        super().__init__(f"{msg}: {detail}" if detail else msg)
