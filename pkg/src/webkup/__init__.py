"""webkup: exact combinatorics of sl3 webs on a line.

Subpackages cover Laurent arithmetic, ladder-form webs, closed-web
evaluation by state sums and by diagram rewriting, the growth algorithm
for basis webs, a ladder action of quantum gl weights, tableau counting,
root-of-unity block decompositions and the dual canonical basis.
"""

from .qlaurent import LaurentPoly, qint, qfact, qbinom

__all__ = ["LaurentPoly", "qint", "qfact", "qbinom"]
__version__ = "0.1.0"
