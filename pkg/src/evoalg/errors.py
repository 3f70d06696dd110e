"""Exception hierarchy.

Construction problems (bad permutations, length mismatches) are
``InvalidAlgebraError``; an analysis applied to an algebra outside its
hypotheses raises ``PreconditionError``.
"""


class DegreeMismatchError(ValueError):
    pass


class InvalidAlgebraError(ValueError):
    pass


class EqualPermutationsError(InvalidAlgebraError):
    pass


class PreconditionError(ValueError):
    pass


class NotConjugateError(PreconditionError):
    pass
