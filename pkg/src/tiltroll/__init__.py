"""Exact computations with iterated tilted algebras of global dimension at most two.

Modules, bottom up: ``exactlin`` (rational linear algebra), ``quiver_core``
(quivers, relations, cuts), ``repcat`` and ``derived`` (representations and
the derived category of a Dynkin quiver), ``forms``, ``endoalg``
(endomorphism, relation extension and cluster-tilted algebras), ``rolling``
and ``dynkincut``.
"""

__version__ = "0.1.0"
