"""Structure files: a strict, deterministic JSON format for structure constants.

A file looks like::

    {
      "format": "lie2-structure/1",
      "structure": "crossed-module",
      "spaces": {"g": 3, "theta": 4},
      "tensors": {"phi": [["u0", "x0", "1/2"], ...], ...},
      "params": {},            # optional, e.g. {"k": 2}
      "name": "...",           # optional
      "notes": ["..."]         # optional
    }

Basis names: ``x<i>`` for g, ``u<j>`` for theta, ``xi<i>`` for g* and
``kappa<j>`` for theta*.  Every tensor is a list of entries
``[name, ..., name, coefficient]`` with the coefficient a string "p" or "p/q".

Symbol dictionary (entry layout, then meaning):

    phi                 [u_j, x_i, c]          phi(u_j) has c on x_i
    bracket_g           [x_a, x_b, x_c, c]     [x_a, x_b] has c on x_c, a < b
    bracket_theta       [u_a, u_b, u_c, c]     [u_a, u_b] has c on u_c, a < b
    action              [x_i, u_j, u_k, c]     x_i |> u_j has c on u_k
    h                   [x_a, x_b, x_c, u_k, c]
    omega (epsilon)     [u_j, u_a, ..., c]     omega(u_j) has c on u_a ^ ...
    delta (alpha)       [x_i, x_a, u_b, ..., c]
    eta                 [x_i, u_a, u_b, u_c, c]
    r                   [u_a, u_b, c]
    lambda              [x_i, u_a, ..., c]
    d                   [v, v_1, ..., v_k, c]  a map on g + theta, any of x/u
    dual_phi            [xi_i, kappa_j, c]     on the dual crossed module g* -> theta*
    dual_bracket_g      [kappa_a, kappa_b, kappa_c, c]   (xi for lie-bialgebra files)
    dual_bracket_theta  [xi_a, xi_b, xi_c, c]
    dual_action         [kappa_l, xi_i, xi_k, c]
    element             [gen, ..., c]          monomial of the shifted symmetric algebra,
                                               generators x (G), u (Theta), xi (Gstar), kappa (Thetastar)

Wedge factors and antisymmetric slots are listed in increasing order;
absent tensors are zero.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .bigbracket import G, GS, T, TS, SElement
from .calculus import InfinitesimalPair, QuasiTriple
from .classical import StructureMaps
from .coboundary import RMatrix
from .multilinear import LieAlgebra, LinearMap, Multivector, Space, zero
from .structures import CrossedModule, LieBialgebraCrossedModule

__all__ = [
    "FORMAT", "STRUCTURES", "StructureFile", "FileFormatError",
    "LieBialgebra", "Cocycle", "KDifferential", "SymmetricElement",
    "loads", "dumps", "read_file", "write_file", "to_file", "from_file",
]

FORMAT = "lie2-structure/1"

CM_TENSORS = ("phi", "bracket_g", "bracket_theta", "action")
STRUCTURES = {
    "lie-algebra": ("bracket_g",),
    "lie-bialgebra": ("bracket_g", "dual_bracket_g"),
    "lie2alg": ("phi", "bracket_g", "action", "h"),
    "lie2coalg": ("phi", "omega", "delta", "eta"),
    "lie2bialg": ("phi", "bracket_g", "action", "h", "omega", "delta", "eta"),
    "crossed-module": CM_TENSORS,
    "bicrossed-module": CM_TENSORS + ("dual_phi", "dual_bracket_g", "dual_bracket_theta",
                                      "dual_action"),
    "quasi-triple": CM_TENSORS + ("omega", "delta", "eta"),
    "infinitesimal-pair": CM_TENSORS + ("omega", "delta"),
    "r-matrix": CM_TENSORS + ("r",),
    "cocycle": CM_TENSORS + ("lambda",),
    "k-differential": CM_TENSORS + ("d",),
    "selement": ("element",),
}
PARAMS = {"infinitesimal-pair": {"k"}, "cocycle": {"l"}, "k-differential": {"k"}}
TOP_LEVEL = {"format", "structure", "spaces", "tensors", "params", "name", "notes"}

_NAME = re.compile(r"^(x|u|xi|kappa)(0|[1-9][0-9]*)$")
_SCALAR = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


class FileFormatError(ValueError):
    """Schema violation, with the JSON path of the offending value."""

    def __init__(self, where, message):
        super().__init__(f"{where}: {message}")
        self.where = where


@dataclass(frozen=True)
class LieBialgebra:
    lie: LieAlgebra
    lie_star: LieAlgebra


@dataclass(frozen=True)
class Cocycle:
    cm: CrossedModule
    lam: LinearMap


@dataclass(frozen=True)
class KDifferential:
    cm: CrossedModule
    d: LinearMap
    k: int

    def lie(self):
        return self.cm.semidirect()


@dataclass(frozen=True)
class SymmetricElement:
    """An element of the shifted symmetric algebra together with its dimensions."""

    space: Space
    element: SElement


@dataclass
class StructureFile:
    structure: str
    g_dim: int
    theta_dim: int
    tensors: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    name: str = None
    notes: list = field(default_factory=list)

    @property
    def space(self):
        return Space(self.g_dim, self.theta_dim)

    @property
    def dual_space(self):
        return Space(self.theta_dim, self.g_dim)


# -- scalars and names ----------------------------------------------------------

def _scalar_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _parse_scalar(text, where):
    if not isinstance(text, str) or not _SCALAR.match(text):
        raise FileFormatError(where, f"expected a rational string 'p' or 'p/q', got {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise FileFormatError(where, "zero denominator")
    return Fraction(int(num), int(den or 1))


def _parse_name(text, where):
    m = _NAME.match(text) if isinstance(text, str) else None
    if not m:
        raise FileFormatError(where, f"bad basis name {text!r}")
    return m.group(1), int(m.group(2))


# -- tensor layouts -----------------------------------------------------------------

def _layout(tensor, structure, params):
    """(slot roles, indices of the slots that must increase) for one entry, or None if variable."""
    k = params.get("k", 2)
    l_ = params.get("l", 2)
    if structure == "lie-bialgebra" and tensor == "dual_bracket_g":
        return ("xi", "xi", "xi"), (0, 1)
    table = {
        "phi": (("u", "x"), ()),
        "bracket_g": (("x", "x", "x"), (0, 1)),
        "bracket_theta": (("u", "u", "u"), (0, 1)),
        "action": (("x", "u", "u"), ()),
        "h": (("x", "x", "x", "u"), (0, 1, 2)),
        "omega": (("u",) + ("u",) * k, tuple(range(1, k + 1))),
        "delta": (("x", "x") + ("u",) * (k - 1), tuple(range(2, k + 1))),
        "eta": (("x", "u", "u", "u"), (1, 2, 3)),
        "r": (("u", "u"), (0, 1)),
        "lambda": (("x",) + ("u",) * l_, tuple(range(1, l_ + 1))),
        "d": (("v",) * (k + 1), tuple(range(1, k + 1))),
        "dual_phi": (("xi", "kappa"), ()),
        "dual_bracket_g": (("kappa", "kappa", "kappa"), (0, 1)),
        "dual_bracket_theta": (("xi", "xi", "xi"), (0, 1)),
        "dual_action": (("kappa", "xi", "xi"), ()),
    }
    return table.get(tensor)


_FAMILY_OF_ROLE = {"x": G, "u": T, "xi": GS, "kappa": TS}
_ROLE_OF_FAMILY = {f: r for r, f in _FAMILY_OF_ROLE.items()}


def _role_dims(sf):
    n, m = sf.g_dim, sf.theta_dim
    return {"x": n, "u": m, "xi": n, "kappa": m}


def _global(sf, role, idx):
    """Global index of a named basis vector in the primal or dual space."""
    n, m = sf.g_dim, sf.theta_dim
    return {"x": idx, "u": n + idx, "kappa": idx, "xi": m + idx}[role]


def _parse_entries(sf, tensor, raw, where):
    if not isinstance(raw, list):
        raise FileFormatError(where, "a tensor must be a list of entries")
    dims = _role_dims(sf)
    out = {}
    layout = _layout(tensor, sf.structure, sf.params)
    for pos, entry in enumerate(raw):
        w = f"{where}[{pos}]"
        if not isinstance(entry, list) or not entry:
            raise FileFormatError(w, "an entry must be a non-empty list")
        coeff = _parse_scalar(entry[-1], f"{w}[{len(entry) - 1}]")
        names = [_parse_name(t, f"{w}[{s}]") for s, t in enumerate(entry[:-1])]
        if layout is not None:
            roles, increasing = layout
            if len(names) != len(roles):
                raise FileFormatError(w, f"expected {len(roles)} basis names for {tensor}")
            for s, ((role, _), want) in enumerate(zip(names, roles)):
                if want == "v":
                    if role not in ("x", "u"):
                        raise FileFormatError(f"{w}[{s}]", "expected an x or u name")
                elif role != want:
                    raise FileFormatError(f"{w}[{s}]", f"expected a {want} name, got {role}")
            for a, b in zip(increasing, increasing[1:]):
                if _sort_key(names[a]) >= _sort_key(names[b]):
                    raise FileFormatError(w, "antisymmetric slots must be strictly increasing")
        else:
            keys = [_sort_key(nm) for nm in names]
            for s, (a, b) in enumerate(zip(names, names[1:])):
                if keys[s] > keys[s + 1] or (a == b and _FAMILY_OF_ROLE[a[0]] in (T, GS)):
                    raise FileFormatError(w, "monomial generators must be in canonical order")
        for s, (role, idx) in enumerate(names):
            if idx >= dims[role]:
                raise FileFormatError(f"{w}[{s}]", f"index {idx} out of range for {role}")
        key = tuple(names)
        if key in out:
            raise FileFormatError(w, "duplicate entry")
        if coeff:
            out[key] = coeff
    return out


_ROLE_ORDER = {"x": 0, "u": 1, "xi": 2, "kappa": 3}


def _sort_key(name):
    role, idx = name
    return (_ROLE_ORDER[role], idx)


# -- text <-> StructureFile -------------------------------------------------------

def loads(text):
    """Parse and validate a structure file."""
    if not text.strip():
        raise FileFormatError("$", "empty input")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(data, dict):
        raise FileFormatError("$", "top level must be an object")
    for key in sorted(data):
        if key not in TOP_LEVEL:
            raise FileFormatError(f"$.{key}", "unknown field")
    for key in ("format", "structure", "spaces", "tensors"):
        if key not in data:
            raise FileFormatError(f"$.{key}", "missing required field")
    if data["format"] != FORMAT:
        raise FileFormatError("$.format", f"unsupported format {data['format']!r}")
    structure = data["structure"]
    if structure not in STRUCTURES:
        raise FileFormatError("$.structure", f"unknown structure {structure!r}")
    spaces = data["spaces"]
    if not isinstance(spaces, dict) or set(spaces) != {"g", "theta"}:
        raise FileFormatError("$.spaces", "expected exactly the keys 'g' and 'theta'")
    for key in ("g", "theta"):
        v = spaces[key]
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise FileFormatError(f"$.spaces.{key}", "expected a non-negative integer")
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise FileFormatError("$.params", "expected an object")
    allowed = PARAMS.get(structure, set())
    for key, v in sorted(params.items()):
        if key not in allowed:
            raise FileFormatError(f"$.params.{key}", f"unknown parameter for {structure}")
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise FileFormatError(f"$.params.{key}", "expected a non-negative integer")
    if structure == "infinitesimal-pair" and params.get("k", 2) < 1:
        raise FileFormatError("$.params.k", "k must be at least 1")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise FileFormatError("$.name", "expected a string")
    notes = data.get("notes", [])
    if not isinstance(notes, list) or not all(isinstance(s, str) for s in notes):
        raise FileFormatError("$.notes", "expected a list of strings")
    sf = StructureFile(structure, spaces["g"], spaces["theta"], {}, dict(params), name, list(notes))
    tensors = data["tensors"]
    if not isinstance(tensors, dict):
        raise FileFormatError("$.tensors", "expected an object")
    for key in sorted(tensors):
        if key not in STRUCTURES[structure]:
            raise FileFormatError(f"$.tensors.{key}", f"not a tensor of {structure}")
        sf.tensors[key] = _parse_entries(sf, key, tensors[key], f"$.tensors.{key}")
    return sf


def _entry_text(key, coeff):
    return [f"{role}{idx}" for role, idx in key] + [_scalar_str(coeff)]


def dumps(sf):
    """Deterministic text: sorted keys, entries in basis order, canonical rationals."""
    data = {
        "format": FORMAT,
        "structure": sf.structure,
        "spaces": {"g": sf.g_dim, "theta": sf.theta_dim},
        "tensors": {
            name: [_entry_text(key, entries[key])
                   for key in sorted(entries, key=lambda k: [_sort_key(n) for n in k])]
            for name, entries in sf.tensors.items() if entries
        },
    }
    if sf.params:
        data["params"] = dict(sf.params)
    if sf.name is not None:
        data["name"] = sf.name
    if sf.notes:
        data["notes"] = list(sf.notes)
    return _render(data)


def _render(data):
    """Sorted keys, one tensor entry per line."""
    enc = lambda v: json.dumps(v, sort_keys=True, ensure_ascii=False)
    lines = ["{"]
    keys = sorted(data)
    for pos, key in enumerate(keys):
        comma = "," if pos < len(keys) - 1 else ""
        if key != "tensors" or not data[key]:
            lines.append(f"  {enc(key)}: {enc(data[key])}{comma}")
            continue
        lines.append(f"  {enc(key)}: {{")
        names = sorted(data[key])
        for tpos, name in enumerate(names):
            entries = data[key][name]
            tcomma = "," if tpos < len(names) - 1 else ""
            lines.append(f"    {enc(name)}: [")
            for epos, entry in enumerate(entries):
                ecomma = "," if epos < len(entries) - 1 else ""
                lines.append(f"      {enc(entry)}{ecomma}")
            lines.append(f"    ]{tcomma}")
        lines.append(f"  }}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FileFormatError("$", f"cannot read file ({exc.__class__.__name__})") from None
    return loads(text)


def write_file(path, sf):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(sf))


# -- StructureFile -> objects ---------------------------------------------------------

def _accumulate(sp, sf, entries, split):
    """Sum entries into {key: Multivector}; ``split`` maps global indices to (key, monomial)."""
    out = {}
    for names, c in entries.items():
        idx = [_global(sf, role, i) for role, i in names]
        key, mono = split(idx)
        out[key] = out.get(key, zero(sp)) + Multivector(sp, {tuple(mono): c})
    return {k: v for k, v in out.items() if v}


def _tensor(sf, name):
    return sf.tensors.get(name, {})


def _single(idx):
    return idx[0], idx[1:]


def _pair(idx):
    return (idx[0], idx[1]), idx[2:]


def _triple(idx):
    return (idx[0], idx[1], idx[2]), idx[3:]


def _crossed_module(sf, sp, prefix=""):
    phi = LinearMap(sp, 1, _accumulate(sp, sf, _tensor(sf, prefix + "phi"), _single))
    g_br = _accumulate(sp, sf, _tensor(sf, prefix + "bracket_g"), _pair)
    t_br = _accumulate(sp, sf, _tensor(sf, prefix + "bracket_theta"), _pair)
    action = _accumulate(sp, sf, _tensor(sf, prefix + "action"), _pair)
    return CrossedModule(sp, g_br, t_br, phi, action)


def _maps(sf, sp):
    acc = lambda name, split: _accumulate(sp, sf, _tensor(sf, name), split)
    return StructureMaps(
        sp,
        phi=LinearMap(sp, 1, acc("phi", _single)),
        bracket=acc("bracket_g", _pair),
        action=acc("action", _pair),
        h=acc("h", _triple),
        omega=LinearMap(sp, 2, acc("omega", _single)),
        delta=LinearMap(sp, 2, acc("delta", _single)),
        eta=LinearMap(sp, 3, acc("eta", _single)),
    )


def _lie(sf, sp, name):
    consts = {}
    for names, c in _tensor(sf, name).items():
        consts[tuple(_global(sf, role, i) for role, i in names)] = c
    return LieAlgebra(sp, consts)


def from_file(sf):
    """The library object described by a parsed structure file."""
    s = sf.structure
    sp = sf.space
    try:
        if s == "lie-algebra":
            if sf.theta_dim:
                raise FileFormatError("$.spaces.theta", "a lie-algebra file has theta = 0")
            return _lie(sf, sp, "bracket_g")
        if s == "lie-bialgebra":
            if sf.theta_dim:
                raise FileFormatError("$.spaces.theta", "a lie-bialgebra file has theta = 0")
            return LieBialgebra(_lie(sf, sp, "bracket_g"), _lie(sf, sp, "dual_bracket_g"))
        if s in ("lie2alg", "lie2coalg", "lie2bialg"):
            return _maps(sf, sp)
        if s == "crossed-module":
            return _crossed_module(sf, sp)
        if s == "bicrossed-module":
            return LieBialgebraCrossedModule(_crossed_module(sf, sp),
                                             _crossed_module(sf, sf.dual_space, "dual_"))
        cm = _crossed_module(sf, sp)
        if s == "quasi-triple":
            m = _maps(sf, sp)
            return QuasiTriple(cm, m.omega, m.delta, m.eta)
        if s == "infinitesimal-pair":
            k = sf.params.get("k", 2)
            omega = LinearMap(sp, k, _accumulate(sp, sf, _tensor(sf, "omega"), _single))
            delta = LinearMap(sp, k, _accumulate(sp, sf, _tensor(sf, "delta"), _single))
            return InfinitesimalPair(cm, k, omega, delta)
        if s == "r-matrix":
            r = zero(sp)
            for names, c in _tensor(sf, "r").items():
                r = r + Multivector(sp, {tuple(_global(sf, role, i) for role, i in names): c})
            return RMatrix(cm, r)
        if s == "cocycle":
            l_ = sf.params.get("l", 2)
            lam = LinearMap(sp, l_, _accumulate(sp, sf, _tensor(sf, "lambda"), _single))
            return Cocycle(cm, lam)
        if s == "k-differential":
            k = sf.params.get("k", 2)
            d = LinearMap(sp, k, _accumulate(sp, sf, _tensor(sf, "d"), _single))
            return KDifferential(cm, d, k)
        if s == "selement":
            terms = {}
            for names, c in _tensor(sf, "element").items():
                terms[tuple((_FAMILY_OF_ROLE[role], i) for role, i in names)] = c
            return SymmetricElement(sp, SElement(terms))
    except FileFormatError:
        raise
    except ValueError as exc:
        raise FileFormatError("$.tensors", str(exc)) from None
    raise FileFormatError("$.structure", f"unknown structure {s!r}")


# -- objects -> StructureFile ---------------------------------------------------------

def _name_of(sf, g):
    return ("x", g) if g < sf.g_dim else ("u", g - sf.g_dim)


def _dual_name_of(sf, g):
    return ("kappa", g) if g < sf.theta_dim else ("xi", g - sf.theta_dim)


def _emit(sf, table, namer, prefix_of):
    """{names: coeff} from {key: Multivector}; prefix_of turns a key into leading indices."""
    out = {}
    for key, vec in table.items():
        for mono, c in vec.terms.items():
            names = tuple(namer(sf, i) for i in prefix_of(key) + tuple(mono))
            out[names] = out.get(names, 0) + c
    return {k: v for k, v in out.items() if v}


_as_tuple = lambda key: key if isinstance(key, tuple) else (key,)


def _put_cm(sf, cm, prefix="", namer=_name_of):
    sf.tensors[prefix + "phi"] = _emit(sf, cm.phi.images, namer, _as_tuple)
    sf.tensors[prefix + "bracket_g"] = _emit(sf, cm.g_bracket, namer, _as_tuple)
    sf.tensors[prefix + "bracket_theta"] = _emit(sf, cm.theta_bracket, namer, _as_tuple)
    sf.tensors[prefix + "action"] = _emit(sf, cm.action, namer, _as_tuple)


def _put_maps(sf, maps, names):
    table = {"phi": maps.phi.images, "bracket_g": maps.bracket, "action": maps.action,
             "h": maps.h, "omega": maps.omega.images, "delta": maps.delta.images,
             "eta": maps.eta.images}
    for name in names:
        sf.tensors[name] = _emit(sf, table[name], _name_of, _as_tuple)


def _lie_entries(sf, lie, role):
    out = {}
    for i, j, k, c in lie.constants():
        out[((role, i), (role, j), (role, k))] = c
    return out


def to_file(obj, structure=None, name=None, notes=()):
    """A StructureFile describing ``obj``; ``structure`` picks among readings of StructureMaps."""
    notes = list(notes)
    if isinstance(obj, LieAlgebra):
        sp = obj.space
        if sp.theta_dim:
            sp = Space(sp.dim, 0)
            obj = LieAlgebra(sp, {(i, j, k): c for i, j, k, c in obj.constants()})
        sf = StructureFile("lie-algebra", sp.g_dim, 0, name=name, notes=notes)
        sf.tensors["bracket_g"] = _lie_entries(sf, obj, "x")
        return sf
    if isinstance(obj, LieBialgebra):
        sf = StructureFile("lie-bialgebra", obj.lie.dim, 0, name=name, notes=notes)
        sf.tensors["bracket_g"] = _lie_entries(sf, obj.lie, "x")
        sf.tensors["dual_bracket_g"] = _lie_entries(sf, obj.lie_star, "xi")
        return sf
    if isinstance(obj, SymmetricElement):
        sf = StructureFile("selement", obj.space.g_dim, obj.space.theta_dim, name=name, notes=notes)
        sf.tensors["element"] = {tuple((_ROLE_OF_FAMILY[f], i) for f, i in mono): c
                                 for mono, c in obj.element.terms.items()}
        return sf
    if isinstance(obj, StructureMaps):
        structure = structure or "lie2bialg"
        if structure not in ("lie2alg", "lie2coalg", "lie2bialg"):
            raise ValueError(f"structure maps cannot be written as {structure}")
        sf = StructureFile(structure, obj.space.g_dim, obj.space.theta_dim, name=name, notes=notes)
        _put_maps(sf, obj, STRUCTURES[structure])
        return sf
    if isinstance(obj, LieBialgebraCrossedModule):
        sp = obj.primal.space
        sf = StructureFile("bicrossed-module", sp.g_dim, sp.theta_dim, name=name, notes=notes)
        _put_cm(sf, obj.primal)
        _put_cm(sf, obj.dual, "dual_", _dual_name_of)
        return sf
    cm = getattr(obj, "cm", obj)
    if not isinstance(cm, CrossedModule):
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    sp = cm.space
    kind = {CrossedModule: "crossed-module", QuasiTriple: "quasi-triple",
            InfinitesimalPair: "infinitesimal-pair", RMatrix: "r-matrix",
            Cocycle: "cocycle", KDifferential: "k-differential"}[type(obj)]
    sf = StructureFile(kind, sp.g_dim, sp.theta_dim, name=name, notes=notes)
    _put_cm(sf, cm)
    if isinstance(obj, QuasiTriple):
        _put_maps(sf, obj.maps(), ("omega", "delta", "eta"))
    elif isinstance(obj, InfinitesimalPair):
        sf.params["k"] = obj.k
        sf.tensors["omega"] = _emit(sf, obj.omega.images, _name_of, _as_tuple)
        sf.tensors["delta"] = _emit(sf, obj.delta.images, _name_of, _as_tuple)
    elif isinstance(obj, RMatrix):
        sf.tensors["r"] = _emit(sf, {(): obj.r}, _name_of, lambda key: ())
    elif isinstance(obj, Cocycle):
        sf.params["l"] = obj.lam.degree
        sf.tensors["lambda"] = _emit(sf, obj.lam.images, _name_of, _as_tuple)
    elif isinstance(obj, KDifferential):
        sf.params["k"] = obj.k
        sf.tensors["d"] = _emit(sf, obj.d.images, _name_of, _as_tuple)
    return sf
