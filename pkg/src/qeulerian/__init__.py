"""q-Eulerian polynomials A_n^(r)(t,q), hook factorizations and the bijections behind their symmetry."""
from qeulerian.errors import QEulerianError
from qeulerian.eulerian import eulerian_number, eulerian_tq
from qeulerian.polyring import QPoly, TQPoly

__all__ = ["QEulerianError", "QPoly", "TQPoly", "eulerian_number", "eulerian_tq"]
