"""Exact local Euler characteristics of symmetric differentials at A_n points."""

from fractions import Fraction

from . import _anloc
from ._anloc import (
    CrossCheckError,
    DomainError,
    chi0,
    chi1,
    chi_loc,
    labs_check,
    miyaoka_max,
    r_min,
    rdn_table,
    run_cli,
)

__all__ = [
    "CrossCheckError",
    "DomainError",
    "chi0",
    "chi1",
    "chi1_cubic_coefficient",
    "chi_loc",
    "chi_smooth",
    "g0_volume",
    "labs_check",
    "miyaoka_max",
    "piece_volume",
    "qpoly",
    "r_min",
    "rdn_table",
    "run_cli",
    "validate",
]


def chi1_cubic_coefficient(n):
    return Fraction(_anloc.chi1_cubic_coefficient(n))


def g0_volume(n):
    return Fraction(_anloc.g0_volume(n))


def piece_volume(n, i):
    return Fraction(_anloc.piece_volume(n, i))


def chi_smooth(d, m):
    return int(_anloc.chi_smooth(d, m))


def qpoly(n, of="chi-loc"):
    """Returns (period, rows) with rows[r] the coefficients, constant first."""
    period, _, rows = _anloc.qpoly(n, of)
    return period, [[Fraction(c) for c in row] for row in rows]


def validate(n_max=4, m_max=20, inject=""):
    ok, cells, methods, detail = _anloc.validate(n_max, m_max, inject)
    return {"ok": ok, "cells": cells, "methods": methods, "detail": detail}
