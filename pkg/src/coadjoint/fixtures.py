"""Built-in algebra fixtures with embedded expected classifications.

Every fixture is stored as a raw document and run through the regular
parser, so the registry exercises the same code path as user files. The
``expected_reports`` block inside metadata freezes the classification
verdicts for golden testing; subspaces appear as canonical rational
matrices (lists of basis columns).
"""

from __future__ import annotations

from .documents import AlgebraDocument, parse_document

_SPAN_5_124 = [
    ["1", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0"],
    ["0", "0", "0", "1", "0"],
]
_SPAN_5_35 = [
    ["0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "1"],
]


def _abelian3() -> dict:
    full = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    return {
        "name": "abelian3",
        "dim": 3,
        "basis": ["E1", "E2", "E3"],
        "brackets": [],
        "functionals": {"ell_E1": ["1", "0", "0"]},
        "metadata": {
            "description": "abelian R^3; every orbit is a single point",
            "expected_reports": {
                "ell_E1": {
                    "solvable": True,
                    "nilpotent": True,
                    "unimodular": True,
                    "exponentiality": "verified_nilpotent",
                    "orbit_dim": 0,
                    "stabilizer_is_ideal": True,
                    "si_mod_pker": True,
                    "quotient_unimodular": True,
                    "orbit_closed_affine": "yes",
                    "cs_status": "cs_by_si",
                    "stabilizer": {"ambient_dim": 3, "basis": full},
                    "pker_algebra": {"ambient_dim": 3, "basis": full},
                    "affine_hull_direction": {"ambient_dim": 3, "basis": []},
                }
            },
        },
    }


def _heisenberg3() -> dict:
    return {
        "name": "heisenberg3",
        "dim": 3,
        "basis": ["X", "Y", "Z"],
        "brackets": [{"i": "X", "j": "Y", "coeffs": {"Z": "1"}}],
        "functionals": {"ell_Z": ["0", "0", "1"]},
        "metadata": {
            "description": "3-dim Heisenberg algebra",
            "expected_reports": {
                "ell_Z": {
                    "solvable": True,
                    "nilpotent": True,
                    "unimodular": True,
                    "exponentiality": "verified_nilpotent",
                    "orbit_dim": 2,
                    "stabilizer_is_ideal": True,
                    "si_mod_pker": True,
                    "quotient_unimodular": True,
                    "orbit_closed_affine": "yes",
                    "cs_status": "cs_by_si",
                    "stabilizer": {"ambient_dim": 3, "basis": [["0", "0", "1"]]},
                    "pker_algebra": {"ambient_dim": 3, "basis": [["0", "0", "1"]]},
                    "affine_hull_direction": {
                        "ambient_dim": 3,
                        "basis": [["1", "0", "0"], ["0", "1", "0"]],
                    },
                }
            },
        },
    }


def _heisenberg5() -> dict:
    return {
        "name": "heisenberg5",
        "dim": 5,
        "basis": ["X1", "Y1", "X2", "Y2", "Z"],
        "brackets": [
            {"i": "X1", "j": "Y1", "coeffs": {"Z": "1"}},
            {"i": "X2", "j": "Y2", "coeffs": {"Z": "1"}},
        ],
        "functionals": {"ell_Z": ["0", "0", "0", "0", "1"]},
        "metadata": {
            "description": "5-dim Heisenberg algebra, two symplectic pairs",
            "expected_reports": {
                "ell_Z": {
                    "solvable": True,
                    "nilpotent": True,
                    "unimodular": True,
                    "exponentiality": "verified_nilpotent",
                    "orbit_dim": 4,
                    "stabilizer_is_ideal": True,
                    "si_mod_pker": True,
                    "quotient_unimodular": True,
                    "orbit_closed_affine": "yes",
                    "cs_status": "cs_by_si",
                    "stabilizer": {"ambient_dim": 5, "basis": [["0", "0", "0", "0", "1"]]},
                    "pker_algebra": {"ambient_dim": 5, "basis": [["0", "0", "0", "0", "1"]]},
                    "affine_hull_direction": {
                        "ambient_dim": 5,
                        "basis": [
                            ["1", "0", "0", "0", "0"],
                            ["0", "1", "0", "0", "0"],
                            ["0", "0", "1", "0", "0"],
                            ["0", "0", "0", "1", "0"],
                        ],
                    },
                }
            },
        },
    }


def _e2cover() -> dict:
    return {
        "name": "e2cover",
        "dim": 3,
        "basis": ["X", "Y", "T"],
        "brackets": [
            {"i": "T", "j": "X", "coeffs": {"Y": "1"}},
            {"i": "T", "j": "Y", "coeffs": {"X": "-1"}},
        ],
        "functionals": {"ell_X": ["1", "0", "0"]},
        "metadata": {
            "description": "universal cover of the Euclidean motion group; "
            "solvable but not exponential (ad_T has eigenvalues +-i)",
            "expected_reports": {
                "ell_X": {
                    "solvable": True,
                    "nilpotent": False,
                    "unimodular": True,
                    "exponentiality": "refuted",
                    "orbit_dim": 2,
                    "stabilizer_is_ideal": False,
                    "si_mod_pker": False,
                    "quotient_unimodular": True,
                    "orbit_closed_affine": "unknown",
                    "cs_status": "cs_iff_si_false",
                    "stabilizer": {"ambient_dim": 3, "basis": [["1", "0", "0"]]},
                    "pker_algebra": {"ambient_dim": 3, "basis": []},
                    "affine_hull_direction": {
                        "ambient_dim": 3,
                        "basis": [["0", "1", "0"], ["0", "0", "1"]],
                    },
                }
            },
        },
    }


def _unimodular5() -> dict:
    return {
        "name": "unimodular5",
        "dim": 5,
        "basis": ["X1", "X2", "X3", "X4", "X5"],
        "brackets": [
            {"i": "X2", "j": "X3", "coeffs": {"X1": "1"}},
            {"i": "X2", "j": "X5", "coeffs": {"X2": "1"}},
            {"i": "X3", "j": "X5", "coeffs": {"X3": "-1"}},
            {"i": "X4", "j": "X5", "coeffs": {"X1": "1"}},
        ],
        "functionals": {"ell_X3": ["0", "0", "1", "0", "0"]},
        "metadata": {
            "description": "5-dim completely solvable unimodular algebra whose "
            "orbit through X3* is a proper open subset of its affine hull",
            "expected_reports": {
                "ell_X3": {
                    "solvable": True,
                    "nilpotent": False,
                    "unimodular": True,
                    "exponentiality": "unverified",
                    "orbit_dim": 2,
                    "stabilizer_is_ideal": True,
                    "si_mod_pker": True,
                    "quotient_unimodular": False,
                    "orbit_closed_affine": "no",
                    "cs_status": "cs_by_si",
                    "stabilizer": {"ambient_dim": 5, "basis": _SPAN_5_124},
                    "pker_algebra": {"ambient_dim": 5, "basis": _SPAN_5_124},
                    "affine_hull_direction": {"ambient_dim": 5, "basis": _SPAN_5_35},
                }
            },
        },
        "orbit_fixtures": {
            "invariants": [
                {
                    "name": "X3_positive",
                    "num": [{"c": "1", "pow": {"X3": 1}}],
                    "den": [{"c": "1"}],
                    "sign": "+",
                    "orbit": "ell_X3",
                }
            ],
            # flowing along X5 scales the X3* coordinate like exp(-t); the
            # opposite sign convention would scale it like exp(+t)
            "flow_pins": [
                {"functional": "ell_X3", "generator": "X5", "coordinate": "X3", "rate": "-1"}
            ],
        },
    }


def _nonunimodular6() -> dict:
    hull_bs = [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "0", "1"],
    ]
    full6 = [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "1", "0", "0"],
        ["0", "0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "0", "1"],
    ]
    open_orbit_expected = {
        "solvable": True,
        "nilpotent": False,
        "unimodular": False,
        "exponentiality": "unverified",
        "orbit_dim": 6,
        "stabilizer_is_ideal": True,
        "si_mod_pker": True,
        "quotient_unimodular": False,
        "orbit_closed_affine": "no",
        "cs_status": "cs_by_si",
        "stabilizer": {"ambient_dim": 6, "basis": []},
        "pker_algebra": {"ambient_dim": 6, "basis": []},
        "affine_hull_direction": {"ambient_dim": 6, "basis": full6},
    }
    return {
        "name": "nonunimodular6",
        "dim": 6,
        "basis": ["A", "B", "P", "Q", "R", "S"],
        "brackets": [
            {"i": "P", "j": "Q", "coeffs": {"R": "1"}},
            {"i": "P", "j": "R", "coeffs": {"S": "1"}},
            {"i": "A", "j": "P", "coeffs": {"P": "1/2"}},
            {"i": "A", "j": "R", "coeffs": {"R": "1/2"}},
            {"i": "A", "j": "S", "coeffs": {"S": "1"}},
            {"i": "B", "j": "P", "coeffs": {"P": "-1/2"}},
            {"i": "B", "j": "Q", "coeffs": {"Q": "1"}},
            {"i": "B", "j": "R", "coeffs": {"R": "1/2"}},
        ],
        "functionals": {
            "ell_BS": ["0", "1", "0", "0", "0", "1"],
            "ell_QS": ["0", "0", "0", "1", "0", "1"],
            "f_BQS": ["0", "1", "0", "1", "0", "1"],
        },
        "metadata": {
            "description": "6-dim nonunimodular exponential algebra whose orbit "
            "through B*+S* has a trivial projective-kernel algebra",
            "expected_reports": {
                "ell_BS": {
                    "solvable": True,
                    "nilpotent": False,
                    "unimodular": False,
                    "exponentiality": "unverified",
                    "orbit_dim": 4,
                    "stabilizer_is_ideal": False,
                    "si_mod_pker": False,
                    "quotient_unimodular": False,
                    "orbit_closed_affine": "unknown",
                    "cs_status": "indeterminate_nonunimodular_quotient",
                    "stabilizer": {
                        "ambient_dim": 6,
                        "basis": [
                            ["0", "1", "0", "0", "0", "0"],
                            ["0", "0", "0", "1", "0", "0"],
                        ],
                    },
                    "pker_algebra": {"ambient_dim": 6, "basis": []},
                    "affine_hull_direction": {"ambient_dim": 6, "basis": hull_bs},
                },
                "ell_QS": open_orbit_expected,
                "f_BQS": open_orbit_expected,
            },
        },
        "orbit_fixtures": {
            "parametrizations": {
                # 4-parameter family sweeping the orbit of B*+S*
                "orbit_BS": {
                    "params": ["s", "p", "r", "a"],
                    "coords": {
                        "A": [{"c": "1", "pow": {"s": 1}}],
                        "B": [{"c": "1"}, {"c": "-1/2", "pow": {"p": 1, "r": 1}}],
                        "P": [{"c": "1", "pow": {"r": 1}, "exp": {"a": "-1/2"}}],
                        "Q": [{"c": "1/2", "pow": {"p": 2}}],
                        "R": [{"c": "-1", "pow": {"p": 1}, "exp": {"a": "-1/2"}}],
                        "S": [{"c": "1", "exp": {"a": "-1"}}],
                    },
                },
                # 6-parameter family sweeping the open orbit of Q*+S*
                "orbit_QS": {
                    "params": ["s1", "p1", "q1", "r1", "a1", "b1"],
                    "coords": {
                        "A": [{"c": "1", "pow": {"s1": 1}}],
                        "B": [{"c": "1", "pow": {"r1": 1}}],
                        "P": [{"c": "1", "pow": {"q1": 1}}],
                        "Q": [
                            {"c": "1", "exp": {"b1": "-1"}},
                            {"c": "1/2", "pow": {"p1": 2}, "exp": {"b1": "-1"}},
                        ],
                        "R": [{"c": "-1", "pow": {"p1": 1}, "exp": {"a1": "-1/2", "b1": "-1/2"}}],
                        "S": [{"c": "1", "exp": {"a1": "-1"}}],
                    },
                },
                # the two points of orbit_BS (s = r = 0) averaged by the
                # midpoint construction
                "midpoint_left": {
                    "params": ["p", "a"],
                    "coords": {
                        "B": [{"c": "1"}],
                        "Q": [{"c": "1/2", "pow": {"p": 2}}],
                        "R": [{"c": "-1", "pow": {"p": 1}, "exp": {"a": "-1/2"}}],
                        "S": [{"c": "1", "exp": {"a": "-1"}}],
                    },
                },
                "midpoint_right": {
                    "params": ["p", "a"],
                    "coords": {
                        "B": [{"c": "1"}],
                        "Q": [{"c": "1/2", "pow": {"p": 2}}],
                        "R": [{"c": "1", "pow": {"p": 1}, "exp": {"a": "-1/2"}}],
                        "S": [{"c": "1", "exp": {"a": "-1"}}],
                    },
                },
            },
            "midpoint_pair": ["midpoint_left", "midpoint_right"],
            # eliminating (s, p, r, a) from orbit_BS leaves exactly these
            # constraints; checked symbolically and at random parameter values
            "invariants": [
                {
                    "name": "I1",
                    "num": [
                        {"c": "2", "pow": {"B": 1, "S": 1}},
                        {"c": "-1", "pow": {"P": 1, "R": 1}},
                    ],
                    "den": [{"c": "2", "pow": {"S": 1}}],
                    "expected": "1",
                    "orbit": "ell_BS",
                },
                {
                    "name": "I2",
                    "num": [
                        {"c": "2", "pow": {"Q": 1, "S": 1}},
                        {"c": "-1", "pow": {"R": 2}},
                    ],
                    "den": [{"c": "2", "pow": {"S": 1}}],
                    "expected": "0",
                    "orbit": "ell_BS",
                },
                {
                    "name": "S_positive",
                    "num": [{"c": "1", "pow": {"S": 1}}],
                    "den": [{"c": "1"}],
                    "sign": "+",
                    "orbit": "ell_BS",
                },
            ],
        },
    }


def _semidirect_traceless() -> dict:
    return {
        "name": "semidirect_traceless",
        "dim": 3,
        "basis": ["V1", "V2", "T"],
        "brackets": [
            {"i": "V1", "j": "T", "coeffs": {"V1": "-1"}},
            {"i": "V2", "j": "T", "coeffs": {"V2": "1"}},
        ],
        "functionals": {"ell_V1": ["1", "0", "0"]},
        "metadata": {
            "description": "abelian R^2 extended by T acting as diag(1, -1); "
            "trace-zero derivation, hence unimodular and completely solvable",
            "derivation": [["1", "0"], ["0", "-1"]],
            "expected_reports": {
                "ell_V1": {
                    "solvable": True,
                    "nilpotent": False,
                    "unimodular": True,
                    "exponentiality": "unverified",
                    "orbit_dim": 2,
                    "stabilizer_is_ideal": True,
                    "si_mod_pker": True,
                    "quotient_unimodular": False,
                    "orbit_closed_affine": "no",
                    "cs_status": "cs_by_si",
                    "stabilizer": {"ambient_dim": 3, "basis": [["0", "1", "0"]]},
                    "pker_algebra": {"ambient_dim": 3, "basis": [["0", "1", "0"]]},
                    "affine_hull_direction": {
                        "ambient_dim": 3,
                        "basis": [["1", "0", "0"], ["0", "0", "1"]],
                    },
                }
            },
        },
        "orbit_fixtures": {
            "invariants": [
                {
                    "name": "V1_positive",
                    "num": [{"c": "1", "pow": {"V1": 1}}],
                    "den": [{"c": "1"}],
                    "sign": "+",
                    "orbit": "ell_V1",
                }
            ],
            "flow_pins": [
                {"functional": "ell_V1", "generator": "T", "coordinate": "V1", "rate": "-1"}
            ],
        },
    }


_BUILDERS = {
    "abelian3": _abelian3,
    "heisenberg3": _heisenberg3,
    "heisenberg5": _heisenberg5,
    "e2cover": _e2cover,
    "unimodular5": _unimodular5,
    "nonunimodular6": _nonunimodular6,
    "semidirect_traceless": _semidirect_traceless,
}


def fixture_names() -> list[str]:
    return list(_BUILDERS)


def get_fixture(name: str) -> AlgebraDocument:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"no fixture named {name!r}; known: {', '.join(_BUILDERS)}") from None
    return parse_document(builder())


def fixtures() -> dict[str, AlgebraDocument]:
    """Registry of built-in algebras, freshly parsed."""
    return {name: get_fixture(name) for name in _BUILDERS}
