"""Exact-arithmetic spin geometry on 3-(alpha,delta)-Sasaki manifolds.

The package builds, over the exact field Q(i, sqrt2):

* the spin representation of dimension 2^(2n-1) with its Clifford action,
* the structure tensors (Reeb vectors, fundamental 2-forms, torsion) in an
  adapted frame in dimensions 7, 11, 15,
* the catalog of distinguished spinor families and the bundles they span,
* the homogeneous model S^7 = Sp(2)/Sp(1) with exactly calibrated invariant
  metric, its Nomizu maps, curvature, and invariant-spinor equations,
* the non-compact dual model and the transfer of spinor equations across it,

and machine-checks every identity, eigenvalue, and dimension count in the
theory at desk scale.  `python -m sasakispin verify` runs the full suite.
"""
from __future__ import annotations

from .scalars import Scalar

__all__ = ["Scalar"]
__version__ = "0.1.0"
