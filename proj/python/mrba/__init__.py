"""Free modified Rota-Baxter algebras over exact rationals.

    >>> e = Engine()
    >>> e.eval("P(a)*P(b)")
    'P(P(a)*b) + P(a*P(b)) - 1 ab'
"""

import json
from fractions import Fraction

from . import _mrba
from ._mrba import ParseError, run_cli

__all__ = ["Engine", "ParseError", "run_cli"]


class Engine:
    """Algebra of weight kappa; kappa defaults to -lam**2, which also
    enables coproduct, counit and antipode."""

    def __init__(self, lam="1", kappa=None, alphabet="ab", generator="free"):
        self._impl = _mrba.Engine(str(lam), None if kappa is None else str(kappa),
                                  alphabet.replace(",", ""), generator)

    @property
    def lam(self):
        return Fraction(self._impl.lam)

    @property
    def kappa(self):
        return Fraction(self._impl.kappa)

    @property
    def is_hopf(self):
        return self._impl.is_hopf

    def eval(self, expr):
        return self._impl.eval(expr)

    def eval_json(self, expr):
        return json.loads(self._impl.eval(expr, True))

    def coproduct(self, expr):
        return self._impl.coproduct(expr)

    def coproduct_json(self, expr):
        return json.loads(self._impl.coproduct(expr, True))

    def counit(self, expr):
        return Fraction(self._impl.counit(expr))

    def antipode(self, expr):
        return self._impl.antipode(expr)

    def antipode_json(self, expr):
        return json.loads(self._impl.antipode(expr, True))

    def degree(self, expr):
        return self._impl.degree(expr)

    def mrb_residual(self, u, v):
        return self._impl.mrb_residual(u, v)

    def check(self, suite="all", seed=0, cases=100, max_depth=3, max_degree=10):
        return self._impl.check(suite, seed, cases, max_depth, max_degree)
