"""Exact Chern, Riemann-Roch and K-theory calculus for nef bundles with c1 = 2 on Q3 and Q2."""

from .chow import ChowClass2, ChowClass3
from .expr import ParseError, parse
from .kclass import ChernData3, KClass2, KClass3, chern_of, restrict_to_q2, twist
from .rr import chi_oracle, chi_q3_closed

__all__ = [
    "ChowClass2", "ChowClass3", "ParseError", "parse", "ChernData3", "KClass2", "KClass3",
    "chern_of", "restrict_to_q2", "twist", "chi_oracle", "chi_q3_closed",
]
