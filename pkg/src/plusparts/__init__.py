"""Class numbers of real quadratic fields and certificates for families with
non-trivial plus parts of cyclotomic class numbers."""

__version__ = "0.1.0"
