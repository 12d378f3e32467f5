"""Exception taxonomy shared across the package.

The command-line interface maps these onto exit codes: SpecError -> 2
(input validation), InfeasibleError -> 3 (a computation that cannot be
carried out exactly, e.g. an infinite enumeration), CertificateError -> 4
(an internal certificate failed, which always indicates a bug or a false
claim rather than bad input).
"""


class SpecError(ValueError):
    """Invalid input data: a broken ring/monoid description or an
    ill-defined homomorphism, with the violated axiom pinpointed."""


class InfeasibleError(RuntimeError):
    """The requested computation is not finitely enumerable as posed."""


class CertificateError(AssertionError):
    """An internal consistency certificate failed."""
