"""Computational toolkit for the Fermat equation x^p + y^p = z^3 over
the class-number-one imaginary quadratic fields Q(sqrt(-d)),
d in {1, 7, 19, 43, 67}.

Subpackages by concern:

- ring      exact arithmetic in O_K, prime ideals, residue rings
- frey      the Frey curve of a putative solution and its local behaviour
- bounds    irreducibility constants, ray class groups, bound assembly
- eliminate newform-elimination quantities over ingested eigenvalue data
- screen    hypothesis screening of ingested number-field records
- cli       the `fermat-pp3` command-line entry point
"""

__version__ = "0.1.0"
