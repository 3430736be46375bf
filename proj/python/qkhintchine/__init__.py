"""Khintchine constants and representation data of non-Kac compact quantum groups.

Exact quantities come back as fractions.Fraction; reports from kp/run are the
same JSON documents the qk command-line tool writes.
"""

import json
from fractions import Fraction

from . import _qkhintchine as _core
from ._qkhintchine import QkError

__all__ = [
    "QkError",
    "canonical_spec",
    "is_kac",
    "irr_data",
    "dims",
    "weyl_dimension",
    "quantum_dimension",
    "q_spectrum",
    "positive_root_count",
    "chebyshev_f",
    "chebyshev_g",
    "tensor_decompose",
    "kp",
    "run",
    "corollary_exponents",
    "lemma_base_check",
    "modular_duality_check",
    "random_trace_symmetric_spectrum",
]


def _frac(text):
    return Fraction(text)


def _strs(values):
    return [str(Fraction(v)) for v in values]


def _irr(row):
    return {
        "label": tuple(row["label"]),
        "length": row["length"],
        "n": int(row["n"]),
        "d": _frac(row["d"]),
        "chi_sup": int(row["chi_sup"]),
    }


canonical_spec = _core.canonical_spec
is_kac = _core.is_kac
positive_root_count = _core.positive_root_count


def irr_data(spec, label):
    if isinstance(label, int):
        label = [label]
    return _irr(_core.irr_data(spec, list(label)))


def dims(spec, max_length=5):
    return [_irr(row) for row in _core.dims(spec, max_length)]


def weyl_dimension(lie_type, weight):
    return int(_core.weyl_dimension(lie_type, list(weight)))


def quantum_dimension(lie_type, weight, q):
    return _frac(_core.quantum_dimension(lie_type, list(weight), str(Fraction(q))))


def q_spectrum(lie_type, weight, q):
    return [(_frac(v), m) for v, m in _core.q_spectrum(lie_type, list(weight), str(Fraction(q)))]


def chebyshev_f(k, t):
    return _frac(_core.chebyshev_f(k, str(Fraction(t))))


def chebyshev_g(k, x):
    return _frac(_core.chebyshev_g(k, str(Fraction(x))))


def tensor_decompose(rule, k, l):
    return {j: int(m) for j, m in _core.tensor_decompose(rule, k, l).items()}


def kp(spec, p=4, tol="1e-10", max_length=2000, threads=1, precision_bits=256):
    """K_p report as a dict; real fields stay decimal strings at full precision."""
    return json.loads(_core.kp(spec, str(Fraction(p)), str(tol), max_length, threads, precision_bits))


def run(command, spec, fmt="json", **options):
    """Runs a CLI command in-process. Returns (rendered text, exit code)."""
    return _core.run(command, spec, json.dumps(options) if options else "", fmt)


def corollary_exponents(p, r):
    return tuple(_frac(e) for e in _core.corollary_exponents(str(Fraction(p)), str(Fraction(r))))


def lemma_base_check(diagonal):
    lhs, rhs, equal = _core.lemma_base_check(_strs(diagonal))
    return _frac(lhs), _frac(rhs), equal


def modular_duality_check(diagonal):
    return _core.modular_duality_check(_strs(diagonal))


def random_trace_symmetric_spectrum(seed, size):
    return [_frac(v) for v in _core.random_trace_symmetric_spectrum(seed, size)]
