"""Built-in catalog of worked families, shipped as .efam files next to
this module.

Each file carries expectation metadata (expect statements); run_entry
re-derives every expected value with the library and reports one
outcome per expectation.  The directory can be overridden with the
EIGENFORGE_CATALOG environment variable.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import NamedTuple

from ..scalars import GaussRational, scalar
from ..conformality import sphere_eigen_data, verify_flat_family
from ..holomorphy import is_uniformly_complex_type, maximal_axis
from ..parser import FamilySource, load_family


def catalog_dir() -> str:
    override = os.environ.get("EIGENFORGE_CATALOG")
    if override:
        return override
    return os.path.dirname(__file__)


def list_entries(directory=None):
    directory = directory or catalog_dir()
    return sorted(fn[:-5] for fn in os.listdir(directory) if fn.endswith(".efam"))


def entry_path(name: str, directory=None) -> str:
    directory = directory or catalog_dir()
    path = os.path.join(directory, name + ".efam")
    if not os.path.isfile(path):
        raise FileNotFoundError(f"no catalog entry {name!r} in {directory}")
    return path


def load_entry(name: str, directory=None, bindings=None) -> FamilySource:
    return load_family(entry_path(name, directory), bindings=bindings)


class ExpectationOutcome(NamedTuple):
    key: str
    expected: object
    actual: object
    ok: bool

    def __str__(self):
        word = "pass" if self.ok else "FAIL"
        return f"{word}  {self.key}: expected {self.expected}, got {self.actual}"


def _as_integer(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, GaussRational) or value.im != 0:
        raise ValueError(f"expected a rational number, got {value!r}")
    return value.re


def _check_eigenfamily(fs, expected):
    got = verify_flat_family(fs).verdict
    return got, got is expected


def _check_uniform_type(fs, expected):
    got, _ = is_uniformly_complex_type(fs)
    return got, got is expected


def _check_degree(fs, expected):
    degs = sorted({f.degree() for f in fs if f != 0})
    if len(degs) != 1:
        return degs, False
    return degs[0], scalar(degs[0]) == expected


def _check_sphere_lambda(fs, expected):
    data, report = sphere_eigen_data(fs)
    return data.lam, report.verdict and data.lam == expected


def _check_sphere_mu(fs, expected):
    data, report = sphere_eigen_data(fs)
    return data.mu, report.verdict and data.mu == expected


def _check_axis_floor(fs, expected):
    dim = maximal_axis(fs).certified_dim
    return dim, Fraction(dim) >= _as_integer(expected)


CHECKS = {
    "eigenfamily": _check_eigenfamily,
    "uniformly_complex_type": _check_uniform_type,
    "degree": _check_degree,
    "sphere_lambda": _check_sphere_lambda,
    "sphere_mu": _check_sphere_mu,
    "certified_axis_at_least": _check_axis_floor,
}


def run_entry(source: FamilySource):
    "Evaluate every expectation of a parsed family, in file order."
    fs = source.polys
    out = []
    for key, expected in source.expects.items():
        check = CHECKS.get(key)
        if check is None:
            out.append(ExpectationOutcome(key, expected, "unknown expectation", False))
            continue
        try:
            actual, ok = check(fs, expected)
        except (ValueError, AssertionError) as exc:
            actual, ok = f"error: {exc}", False
        out.append(ExpectationOutcome(key, expected, actual, ok))
    return out


def run_all(directory=None):
    "name -> outcomes for every entry in the directory, sorted by name."
    results = {}
    for name in list_entries(directory):
        results[name] = run_entry(load_entry(name, directory))
    return results
