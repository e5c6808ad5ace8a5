"""Exact sutured Floer polytopes, dual cones and Fox calculus.

Coordinates are sequences of ints, strings like "3/4", or fractions.Fraction.
Results come back as Fractions.
"""

from fractions import Fraction

from . import _core
from ._core import DomainError, Error, ParseError

__all__ = [
    "DomainError",
    "Error",
    "ParseError",
    "hull",
    "facets",
    "centered",
    "dual_cones",
    "fan_check",
    "support_min",
    "y_t",
    "y",
    "z",
    "unit_ball",
    "chi_minus",
    "chi_beta",
    "chi_s_minus",
    "fox",
    "example_names",
    "example_source",
    "load_example",
    "verify",
]


def _row(v):
    return [str(Fraction(x)) for x in v]


def _rows(points):
    return [_row(p) for p in points]


def _q(s):
    return Fraction(s)


def _vec(v):
    return tuple(_q(x) for x in v)


def _vecs(vs):
    return [_vec(v) for v in vs]


def _polytope(j):
    out = {"dim": j["dim"], "vertices": _vecs(j["points"])}
    if "affine_dim" in j:
        out["affine_dim"] = j["affine_dim"]
    if "labels" in j:
        out["labels"] = {_vec(l["point"]): (l["rank"], l["is_z"]) for l in j["labels"]}
    return out


def _cones(j):
    return [
        {"label": c["label"], "rays": _vecs(c["rays"]), "halfspaces": _vecs(c["halfspaces"])}
        for c in j["cones"]
    ]


def _polynomial(j):
    return {tuple(t["exp"]): int(t["coef"]) for t in j["terms"]}


def hull(points):
    """Vertices of the convex hull, sorted lexicographically."""
    return _polytope(_core.hull(_rows(points)))


def facets(points):
    """Facets as (normal, offset, incident vertex indices) with <v, normal> <= offset."""
    return [(_vec(f["normal"]), _q(f["offset"]), tuple(f["vertices"])) for f in _core.facets(_rows(points))]


def centered(points):
    return _vecs(_core.centered(_rows(points))["points"])


def dual_cones(points):
    """One cone per hull vertex: the functionals maximized there."""
    return _cones(_core.dual_cones(_rows(points)))


def fan_check(points, seed=20100, samples=10000):
    r = _core.fan_check(_rows(points), seed, samples)
    r["witnesses"] = _vecs(r["witnesses"])
    return r


def support_min(points, a):
    r = _core.support_min(_rows(points), _row(a))
    return _q(r["value"]), tuple(r["face"]["vertices"])


def y_t(points, a):
    return _q(_core.y_t(_rows(points), _row(a)))


def y(points, a):
    """Seminorm of a centered polytope; raises DomainError otherwise."""
    return _q(_core.y(_rows(points), _row(a)))


def z(points, a):
    return _q(_core.z(_rows(points), _row(a)))


def unit_ball(points):
    r = _core.unit_ball(_rows(points))
    if r["bounded"]:
        return {"bounded": True, "vertices": _vecs(r["points"])}
    return {"bounded": False, "normals": _vecs(r["normals"])}


def _components(components):
    out = []
    for c in components:
        if isinstance(c, dict):
            out.append((c["chi"], c.get("n", 0), c.get("beta", 0)))
        else:
            chi, n, beta = (tuple(c) + (0, 0))[:3]
            out.append((chi, n, beta))
    return out


def chi_minus(components):
    return _core.chi_minus(_components(components))


def chi_beta(components):
    return _core.chi_beta(_components(components))


def chi_s_minus(components):
    return _q(_core.chi_s_minus(_components(components)))


def fox(text, lspace=False):
    """Alexander polynomial of a presentation file's text, with its Newton polytope."""
    r = _core.fox(text, lspace)
    return {
        "polynomial": _polynomial(r),
        "str": r["str"],
        "newton": _polytope(r["newton"]),
        "warning": r["warning"],
    }


def example_names():
    return list(_core.example_names())


def example_source(name):
    return _core.example_source(name)


def load_example(name):
    j = _core.load_example(name)
    out = {
        "name": j["name"],
        "description": j["description"],
        "provenance": j["provenance"],
        "polytope": _polytope(j["polytope"]),
        "aliases": {k: _vec(v) for k, v in j["aliases"].items()},
    }
    if "expected_cones" in j:
        out["expected_cones"] = _cones(j["expected_cones"])
    if "polynomial" in j:
        out["polynomial"] = _polynomial(j["polynomial"])
    if "presentation" in j:
        out["presentation"] = j["presentation"]
    return out


def verify(names=(), seed=20100):
    """Runs the reproduction report; returns (passed, text)."""
    return _core.verify(list(names), seed)
