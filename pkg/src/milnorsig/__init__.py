"""milnorsig: signature of the Milnor fiber of the image of a finitely
determined polynomial map germ (C^2,0) -> (C^3,0), via
sigma(F_f) = sigma(X) + T(f) - C(f)."""

from .fields import NumberField, QQ, parse_field
from .germs import Germ, OverrideSet
from .parser import parse_poly
from .poly import Poly
from .signature import SignatureReport, analyze, signature_of_form

__all__ = [
    "NumberField", "QQ", "parse_field", "Germ", "OverrideSet", "parse_poly",
    "Poly", "SignatureReport", "analyze", "signature_of_form",
]

__version__ = "0.1.0"
