"""JSON encodings for every public value type, plus the output envelope.

Conventions:
  - every emitted document carries {"schema": "permutokit/1"}; inputs may
    omit it, but a present-and-different value is rejected
  - ground sets are sorted arrays; compositions are arrays of arrays
  - mapping keys are str(label); keys that parse as int decode to int labels
    (a string label that itself looks like an int is therefore not
    round-trippable and is out of scope)
  - exact rationals travel as strings "p/q" (or "p" when integral)
"""
from __future__ import annotations

import json
from fractions import Fraction

from .boolfun import BooleanFunction
from .cones import CoweightVector
from .plates import AffinePoint, Plate
from .points import PermPoint
from .preposet import AugPreposet, Bottom, Preposet, is_bottom
from .sections import SectionBasis, TensorWord
from .setcomp import Bijection, Composition, GroundSet, Perm
from .opens import ToricOpen

SCHEMA = "permutokit/1"


def envelope(payload: dict) -> dict:
    return {"schema": SCHEMA, **payload}


def check_envelope(obj) -> None:
    if isinstance(obj, dict) and "schema" in obj and obj["schema"] != SCHEMA:
        raise ValueError(f"unsupported schema {obj['schema']!r}, expected {SCHEMA!r}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def parse_label(key: str):
    try:
        return int(key)
    except (TypeError, ValueError):
        return key


# ---------------------------------------------------------------------------
# ground sets, compositions, bijections, permutations


def encode_ground(g: GroundSet) -> list:
    return list(g.labels)


def decode_ground(obj) -> GroundSet:
    if not isinstance(obj, list):
        raise ValueError("a ground set must be an array of labels")
    return GroundSet.of(obj)


def encode_composition(F: Composition) -> list:
    return [list(l) for l in F.lumps]


def decode_composition(obj) -> Composition:
    if not isinstance(obj, list) or not all(isinstance(l, list) for l in obj):
        raise ValueError("a composition must be an array of arrays of labels")
    return Composition.of(obj)


def encode_bijection(sigma: Bijection) -> dict:
    return {str(a): b for a, b in sigma.pairs}


def decode_bijection(obj) -> Bijection:
    if not isinstance(obj, dict):
        raise ValueError("a bijection must be an object mapping labels to labels")
    return Bijection.of({parse_label(k): v for k, v in obj.items()})


def encode_perm(beta: Perm) -> list:
    return list(beta.images)


def decode_perm(obj) -> Perm:
    if not isinstance(obj, list):
        raise ValueError("a permutation must be an array of images of 1..k")
    return Perm(tuple(obj))


# ---------------------------------------------------------------------------
# preposets


def encode_preposet(p: AugPreposet) -> dict:
    if is_bottom(p):
        return {"bottom": True, "ground": encode_ground(p.ground)}
    return {
        "ground": encode_ground(p.ground),
        "rel": sorted([list(pair) for pair in p.pairs], key=lambda ab: (str(ab[0]), str(ab[1]))),
    }


def decode_preposet(obj) -> AugPreposet:
    if not isinstance(obj, dict) or "ground" not in obj:
        raise ValueError("a preposet must be an object with a 'ground' array")
    ground = decode_ground(obj["ground"])
    if obj.get("bottom"):
        return Bottom(ground)
    rel = obj.get("rel", [])
    return Preposet.from_pairs(ground, [tuple(pair) for pair in rel])


# ---------------------------------------------------------------------------
# integer and rational coordinate vectors


def _encode_coords(ground: GroundSet, coord_fn, as_str: bool) -> dict:
    out = {}
    for x in ground.labels:
        v = coord_fn(x)
        out[str(x)] = str(v) if as_str else int(v)
    return out


def _decode_coords(obj) -> dict:
    if not isinstance(obj, dict) or not isinstance(obj.get("coords"), dict):
        raise ValueError("expected an object with a 'coords' mapping")
    return {parse_label(k): v for k, v in obj["coords"].items()}


def encode_coweight(h: CoweightVector) -> dict:
    return {"coords": _encode_coords(h.ground, h.coord, as_str=False)}


def decode_coweight(obj) -> CoweightVector:
    coords = _decode_coords(obj)
    return CoweightVector.of(GroundSet.of(coords.keys()), {k: int(v) for k, v in coords.items()})


def encode_affine_point(h: AffinePoint) -> dict:
    return {"coords": _encode_coords(h.ground, h.coord, as_str=False)}


def decode_affine_point(obj) -> AffinePoint:
    coords = _decode_coords(obj)
    return AffinePoint.of(GroundSet.of(coords.keys()), {k: int(v) for k, v in coords.items()})


# ---------------------------------------------------------------------------
# subset functions and plates


def _subset_key(z: BooleanFunction, mask: int) -> str:
    return ",".join(str(x) for x in z.subset_of_mask(mask))


def encode_bf(z: BooleanFunction) -> dict:
    return {
        "ground": encode_ground(z.ground),
        "values": {_subset_key(z, m): z.values[m] for m in range(len(z.values))},
    }


def decode_bf(obj) -> BooleanFunction:
    if not isinstance(obj, dict) or "ground" not in obj or not isinstance(obj.get("values"), dict):
        raise ValueError("a subset function must carry 'ground' and 'values'")
    ground = decode_ground(obj["ground"])
    n = len(ground)
    table = {}
    for key, v in obj["values"].items():
        labels = tuple(parse_label(part) for part in key.split(",")) if key else ()
        mask = 0
        for x in labels:
            mask |= 1 << ground.index(x)
        table[mask] = int(v)
    missing = [m for m in range(1 << n) if m not in table]
    if missing:
        raise ValueError("subset function is missing values for some subsets")
    return BooleanFunction(ground, tuple(table[m] for m in range(1 << n)))


def encode_plate(P: Plate) -> dict:
    return {"H": encode_composition(P.H), "z": encode_bf(P.z)}


def decode_plate(obj) -> Plate:
    if not isinstance(obj, dict) or "H" not in obj or "z" not in obj:
        raise ValueError("a plate must carry 'H' and 'z'")
    return Plate(decode_composition(obj["H"]), decode_bf(obj["z"]))


# ---------------------------------------------------------------------------
# section bases and tensor words


def encode_section_basis(s: SectionBasis) -> dict:
    return {
        "z": encode_bf(s.z),
        "points": [encode_affine_point(h) for h in s.points],
    }


def decode_section_basis(obj) -> SectionBasis:
    if not isinstance(obj, dict) or "z" not in obj or "points" not in obj:
        raise ValueError("a section basis must carry 'z' and 'points'")
    return SectionBasis(
        decode_bf(obj["z"]),
        tuple(decode_affine_point(p) for p in obj["points"]),
    )


def encode_tensor_word(w: TensorWord, encode_part) -> dict:
    if w.is_zero:
        return {"zero": True}
    return {"parts": [encode_part(p) for p in w.parts]}


# ---------------------------------------------------------------------------
# points of the torus orbits


def encode_point(x: PermPoint) -> dict:
    return {
        "orbit": encode_composition(x.orbit),
        "coords": {str(lab): str(c) for lab, c in zip(x.ground.labels, x.coords)},
    }


def decode_point(obj) -> PermPoint:
    if not isinstance(obj, dict) or "orbit" not in obj or "coords" not in obj:
        raise ValueError("a point must carry 'orbit' and 'coords'")
    orbit = decode_composition(obj["orbit"])
    coords = {parse_label(k): Fraction(str(v)) for k, v in obj["coords"].items()}
    return PermPoint.of(orbit, coords)


# ---------------------------------------------------------------------------
# unions of torus orbits


def encode_open(U: ToricOpen) -> dict:
    tuples = [[encode_composition(H) for H in tup] for tup in U.orbits]
    return {
        "shape": encode_composition(U.shape),
        "orbits": sorted(tuples, key=lambda t: json.dumps(t, sort_keys=True)),
    }


def decode_open(obj) -> ToricOpen:
    if not isinstance(obj, dict) or "shape" not in obj or "orbits" not in obj:
        raise ValueError("an open union must carry 'shape' and 'orbits'")
    shape = decode_composition(obj["shape"])
    orbits = frozenset(
        tuple(decode_composition(H) for H in tup) for tup in obj["orbits"]
    )
    return ToricOpen(shape, orbits)
