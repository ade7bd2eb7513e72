"""hermlcd: cyclic Hermitian LCD codes over GF(q^2) and Hermitian ODSM"""

__version__ = "1.0.0"
