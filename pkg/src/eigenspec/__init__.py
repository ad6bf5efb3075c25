"""Eigenspectra of quasi-homogeneous isolated singularities, in exact arithmetic.

Modules:

* ``algebra``  - residues mod 1 and integer group rings with convolution
* ``milnor``   - polynomials, weights, Groebner bases, Jacobian ring bases
* ``spectra``  - mixed spectra, eigenspectra, base change, Hodge-Deligne tables
* ``bounds``   - node bounds for hypersurfaces in weighted projective space
* ``symrep``   - sign-character counts for the symmetric-group obstruction
* ``covers``   - Hodge data of cyclic covers of the line and their limits
* ``parsing``, ``cli`` - text input/output and the ``eigenspec`` command
"""

__version__ = "0.1.0"

from .algebra import (
    GroupRingElt,
    UnitClass,
    gr_coeff,
    gr_convolve,
    gr_gamma,
    gr_gamma_tilde,
)
from .milnor import (
    MonomialBasis,
    Polynomial,
    WeightVector,
    check_quasi_homogeneous,
    ell_value,
    groebner_basis,
    infer_weights,
    standard_monomial_basis,
)
from .spectra import (
    DiagonalAutomorphism,
    EigenSpectrum,
    Spectrum,
    base_change,
    bp_eigenspectrum,
    eigenspectrum,
    hodge_deligne_table,
    mixed_spectrum,
)

__all__ = [
    "GroupRingElt", "UnitClass", "gr_coeff", "gr_convolve", "gr_gamma", "gr_gamma_tilde",
    "MonomialBasis", "Polynomial", "WeightVector", "check_quasi_homogeneous", "ell_value",
    "groebner_basis", "infer_weights", "standard_monomial_basis",
    "DiagonalAutomorphism", "EigenSpectrum", "Spectrum", "base_change", "bp_eigenspectrum",
    "eigenspectrum", "hodge_deligne_table", "mixed_spectrum",
]
