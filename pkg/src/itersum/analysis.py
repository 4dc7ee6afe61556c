"""Instance files, classification and report assembly for the CLI."""

from dataclasses import dataclass, field
from fractions import Fraction
import json
import math

from .d2 import InstanceD2, affine_dependency, card_d2, difference_lattice_index, radon_point
from .d3 import (
    InstanceD3,
    analyze_lattice,
    card_d3_bounds,
    compute_m_w,
    default_h_max,
    equality_condition,
)
from .errors import DegenerateHullError, DimensionError, HypothesisError, ParseError
from .geometry import PointSet, classify_hull, hull_volume_dfact
from .sumsets import cardinality_sequence

D2 = "d+2"
D3 = "d+3-simplicial"
UNSUPPORTED = "unsupported"


@dataclass
class InstanceFile:
    d: int
    points: list
    roles: dict = field(default_factory=dict)


def parse_instance(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError("instance must be an object with a 'points' field")
    points = data["points"]
    if not isinstance(points, list) or not points:
        raise ParseError("'points' must be a non-empty list")
    for p in points:
        if not isinstance(p, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in p):
            raise ParseError(f"point {p!r} is not a list of integers")
    d = data.get("d", len(points[0]))
    if not isinstance(d, int) or d < 1:
        raise ParseError(f"invalid dimension {d!r}")
    if any(len(p) != d for p in points):
        raise ParseError(f"every point must have {d} coordinates")
    roles = data.get("roles") or {}
    if not isinstance(roles, dict):
        raise ParseError("'roles' must be an object")
    inst = InstanceFile(d, [tuple(p) for p in points], roles)
    try:
        PointSet(d, tuple(inst.points))
    except DimensionError as exc:
        raise ParseError(str(exc)) from None
    return inst


def load_instance(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def _role_index(points, value, name):
    if isinstance(value, int) and not isinstance(value, bool):
        if not 0 <= value < len(points):
            raise ParseError(f"role '{name}' index {value} out of range")
        return value
    if isinstance(value, list) and tuple(value) in points:
        return points.index(tuple(value))
    raise ParseError(f"role '{name}' must be a point index or one of the points")


def fmt(x):
    """JSON-friendly rendering of exact values."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float) and math.isinf(x):
        return "infinite"
    if isinstance(x, (tuple, list)):
        return [fmt(y) for y in x]
    return x


class Analysis:
    """Classified instance with its invariants; no brute force involved."""

    def __init__(self, spec):
        self.spec = spec
        self.a = PointSet(spec.d, tuple(spec.points))
        self.d = spec.d
        self.translation = None
        self.hull = None
        self.hull_error = None
        try:
            self.hull = classify_hull(self.a)
        except DegenerateHullError as exc:
            self.hull_error = str(exc)
        self._check_vertex_role()
        self.classification = self._classify()
        self.d2 = self.radon = None
        self.d3 = self.inv = self.m_w = self.equality = None

    def _check_vertex_role(self):
        if "vertices" not in self.spec.roles or self.hull is None:
            return
        given = self.spec.roles["vertices"]
        if not isinstance(given, list):
            raise ParseError("role 'vertices' must be a list")
        idx = sorted(_role_index(self.spec.points, v, "vertices") for v in given)
        if tuple(idx) != self.hull.vertex_indices:
            raise HypothesisError("roles", "annotated vertices disagree with the computed hull")

    def _classify(self):
        n = len(self.a)
        if self.hull is None:
            return UNSUPPORTED
        if n == self.d + 2:
            return D2
        if n == self.d + 3 and self.hull.is_simplex:
            return D3
        return UNSUPPORTED

    def hull_class(self):
        if self.hull is None:
            return "degenerate"
        return "simplex" if self.hull.is_simplex else "non-simplex"

    def require_supported(self):
        if self.classification == UNSUPPORTED:
            if self.hull is None:
                raise HypothesisError("full_dimensional_hull", self.hull_error)
            if len(self.a) == self.d + 3:
                raise HypothesisError("hull_is_simplex", "d+3 points whose hull is not a simplex")
            raise HypothesisError(
                "size", f"{len(self.a)} points in dimension {self.d}; need d+2 or d+3")

    def run(self):
        """Compute the invariants for the instance's class."""
        self.require_supported()
        if self.classification == D2:
            self.d2 = InstanceD2.from_points(self.a)
            self.radon = affine_dependency(self.d2)
        else:
            self._build_d3()
        return self

    def _build_d3(self):
        pts = self.spec.points
        others = self.hull.interior_indices
        roles = self.spec.roles
        zero = (0,) * self.d
        if "origin" in roles:
            o = _role_index(pts, roles["origin"], "origin")
        elif zero in pts and pts.index(zero) in others:
            o = pts.index(zero)
        else:
            o = others[0]
        if o not in others:
            raise HypothesisError("roles", "the origin role must be a non-vertex point")
        w = None
        if "w" in roles:
            w = _role_index(pts, roles["w"], "w")
            if w not in others or w == o:
                raise HypothesisError("roles", "the w role must be the other non-vertex point")
        shift = tuple(-x for x in pts[o])
        a = self.a
        if any(shift):
            self.translation = shift
            a = a.translate(shift)
        self.d3 = InstanceD3.from_points(a, origin_index=o, w_index=w)
        self.inv = analyze_lattice(self.d3)
        self.m_w = compute_m_w(self.d3, self.inv)
        self.equality = equality_condition(self.d3, self.inv)

    def default_h_max(self):
        if self.d2 is not None:
            return self.radon.r + self.d + 3
        return default_h_max(self.d3, self.inv, self.m_w)

    def hypotheses(self):
        out = {
            "difference_lattice_index": fmt(difference_lattice_index(self.a)),
            "hull_class": self.hull_class(),
            "vertex_lattice_index": None,
            "origin_location": None,
            "w_location": None,
        }
        if self.d3 is not None:
            out["vertex_lattice_index"] = fmt(self.d3.vertex_lattice_index())
            out["vertices_generate_Zd"] = self.d3.vertex_lattice_index() == 1
            out["origin_location"] = "boundary" if self.inv.origin_on_boundary else "interior"
            out["w_location"] = self.d3.w_location()
        return out

    def invariants(self):
        if self.d2 is not None:
            rd = self.radon
            return {
                "lambda": list(rd.lam),
                "x1": list(rd.x1),
                "x2": list(rd.x2),
                "zero_set": list(rd.zero_set),
                "r": rd.r,
                "hull_volume_dfact": hull_volume_dfact(self.a),
                "radon_point": fmt(radon_point(self.d2, rd)),
                "covering_simplices": [list(c) for c in rd.covering],
            }
        if self.d3 is not None:
            inv = self.inv
            return {
                "vertex_indices": list(self.d3.vertex_indices),
                "origin_index": self.d3.origin_index,
                "w_index": self.d3.w_index,
                "n_lambda": inv.n_lambda,
                "mu": fmt(inv.mu),
                "q": list(inv.q),
                "lcc": inv.lcc,
                "n_prime": inv.n_prime,
                "lambda_ints": list(inv.lambda_ints),
                "m_w": self.m_w,
                "equality_condition": self.equality,
                "origin_on_boundary": inv.origin_on_boundary,
            }
        return None

    def formula_row(self, h, mode):
        row = {"h": h, "exact": None, "lower": None, "upper": None}
        if self.d2 is not None:
            row["exact"] = card_d2(self.d2, h, self.radon)
        elif self.d3 is not None:
            b = card_d3_bounds(self.d3, self.inv, h, self.m_w, self.equality)
            if mode in ("formula", "all"):
                row["exact"] = b.exact
            if mode in ("bounds", "all"):
                row["lower"], row["upper"] = b.lower, b.upper
        return row

    def report(self):
        out = {
            "instance": {"d": self.d, "points": [list(p) for p in self.spec.points]},
            "classification": self.classification,
            "hull": {
                "class": self.hull_class(),
                "vertex_indices": list(self.hull.vertex_indices) if self.hull else None,
                "non_vertex_indices": list(self.hull.interior_indices) if self.hull else None,
            },
            "hypotheses": self.hypotheses(),
            "invariants": self.invariants(),
        }
        if self.translation is not None:
            out["translation"] = list(self.translation)
        return out


def row_matches(row):
    b = row.get("brute")
    if b is None:
        return True
    if row.get("exact") is not None and row["exact"] != b:
        return False
    if row.get("lower") is not None and row["lower"] > b:
        return False
    if row.get("upper") is not None and row["upper"] < b:
        return False
    return True


def verify_rows(analysis, h_max, mode="all", brute_only=False, budget_points=None):
    kw = {} if budget_points is None else {"budget_points": budget_points}
    seq = cardinality_sequence(analysis.a, h_max, **kw)
    rows = []
    for h in range(h_max + 1):
        if brute_only:
            row = {"h": h, "exact": None, "lower": None, "upper": None}
        else:
            row = analysis.formula_row(h, mode)
        row["brute"] = seq[h]
        row["match"] = row_matches(row)
        rows.append(row)
    return rows
