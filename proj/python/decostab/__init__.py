"""Exact Hilbert-Mumford calculus for decorated vector bundles.

Every function takes plain Python data (ints, lists, dicts, Fractions) and
returns plain data; rationals come back as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from ._decostab import BudgetExceeded, DecostabError, execute, run

__all__ = [
    "BudgetExceeded",
    "DecostabError",
    "call",
    "run",
    "enumerate_states",
    "homogeneity_degree",
    "mu",
    "mu_filtration",
    "decompose",
    "state_cell",
    "state_fan",
    "critical_weight_vectors",
    "check",
    "delta_threshold",
    "simplify",
    "profile",
]


def _encode(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def call(command, document, sub="", budget=None):
    """Run one command on a document and return the decoded result."""
    text = json.dumps(document, default=_encode)
    return json.loads(execute(command, sub, text, budget or 0))


def _weights(states):
    if isinstance(states, dict):
        return states
    return [list(w) for w in states]


def enumerate_states(rep):
    """Multiset of torus weights as a {weight tuple: multiplicity} dict."""
    out = call("states", {"rep": rep})
    return {tuple(w): m for w, m in zip(out["states"], out["mult"])}


def homogeneity_degree(rep):
    return call("degree", {"rep": rep})["degree"]


def mu(support, gamma):
    return Fraction(call("mu", {"support": _weights(support), "gamma": list(gamma)})["mu"])


def mu_filtration(ranks, alpha, support):
    doc = {"support": _weights(support), "ranks": list(ranks), "alpha": list(alpha)}
    return Fraction(call("mu", doc)["mu"])


def decompose(gamma):
    return [Fraction(a) for a in call("decompose", {"gamma": list(gamma)})["alpha"]]


def state_cell(a, chi):
    return call("cell", {"A": _weights(a), "chi": list(chi)})


def state_fan(a):
    return call("fan", {"A": _weights(a)})


def critical_weight_vectors(rep, budget=None):
    return [tuple(ray) for ray in call("k-rho", {"rep": rep}, budget=budget)["K"]]


def check(filtration):
    out = call("check", filtration)
    return {**out, "value": Fraction(out["value"])}


def delta_threshold(filtration):
    out = call("threshold", filtration)["delta"]
    return None if out is None else Fraction(out)


def simplify(rep, budget=None):
    return call("simplify", {"rep": rep}, budget=budget)


def profile(kind, **fields):
    return call("profile", fields, sub=kind)
