"""exactla: exact linear algebra over commutative rings.

Ring-generic characteristic-polynomial algorithms, fast multiplication
kernels, modular (CRT) computation, generalized Moore-Penrose inverses,
and an instrumented benchmark CLI.
"""

__version__ = "0.1.0"
