"""Canonical classes, the effective-class catalog, and general-type certificates.

A certificate expresses the canonical class as

    K = a * sum psi_j + sum_k c_k * D_k + E,     a > 0, c_k >= 0,

with the D_k known effective classes.  The linear algebra (three equations:
lambda, the single psi equation by symmetry, delta_irr) is solved exactly;
whether the residual E is effective on each boundary generator is *reported*
per generator, never silently asserted, because the catalog inputs only pin
the interior part.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact import LinearSystem, rat_str, solve_linear
from .picard import (
    Coefficient,
    DivisorClass,
    MalformedClassError,
    Space,
    SpaceMismatchError,
    UnmarkedClass,
    boundary_orbits,
    class_from_dict,
    class_to_dict,
    unmarked_from_dict,
    unmarked_to_dict,
)


class CertificateError(Exception):
    pass


class InfeasibleCertificateError(CertificateError):
    pass


class UnderdeterminedCertificateError(CertificateError):
    pass


class NegativeCoefficientError(CertificateError):
    """A solution exists but violates a > 0 or c_k >= 0."""


def canonical_class(g: int, n: int) -> DivisorClass:
    """The canonical class of the n-pointed genus-g space:

    13 lambda - 2 delta_irr + sum psi_j - 2 sum delta_{0:S} - 3 sum delta_{1:S}
    - 2 sum_{i>=2} delta_{i:S}, keyed on canonical representatives (a
    pre-canonical genus index g-1 resolves through the i=1 rule, etc.).
    """
    if n < 1:
        raise ValueError("canonical_class handles marked spaces (n >= 1)")
    space = Space(g, n)
    sym = {}
    for (i, s) in boundary_orbits(space):
        sym[(i, s)] = Coefficient.exact(-3 if i == 1 else -2)
    return DivisorClass(space, lam=13, psi=1, delta_irr=-2, boundary_sym=sym)


def psi_sum_class(space: Space) -> DivisorClass:
    return DivisorClass(space, psi=1)


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    cls: object  # DivisorClass | UnmarkedClass
    note: str = ""

    @property
    def is_marked(self) -> bool:
        return isinstance(self.cls, DivisorClass)


def _builtin_catalog() -> dict:
    unknown_tail = Coefficient("unknown", None)

    def unmarked(g, lam, delta0):
        delta = {0: Coefficient.exact(delta0)}
        for i in range(1, g // 2 + 1):
            delta[i] = unknown_tail
        return UnmarkedClass(g, lam=lam, delta=delta)

    entries = [
        CatalogEntry(
            "BN5_3",
            UnmarkedClass(5, lam=8, delta={0: -1, 1: -4, 2: -6}),
            "genus-5 trigonal (quadric) divisor; all coefficients classical",
        ),
        CatalogEntry(
            "Z16",
            unmarked(16, 407, -61),
            "genus-16 quadric-failure divisor for a degree-21 series; boundary tail unpublished",
        ),
        CatalogEntry(
            "D12",
            unmarked(12, 13245, -1926),
            "genus-12 quadric-failure divisor for a degree-14 series; boundary tail unpublished",
        ),
        CatalogEntry(
            "BN17",
            DivisorClass(
                Space(17, 8),
                lam=20,
                delta_irr=-3,
                boundary_sym={key: unknown_tail for key in boundary_orbits(Space(17, 8))},
            ),
            "Brill-Noether divisor pulled back to the 8-pointed genus-17 space",
        ),
        CatalogEntry(
            "F12_10",
            DivisorClass(
                Space(12, 10),
                psi=9,
                delta_irr=-1,
                boundary_sym={key: unknown_tail for key in boundary_orbits(Space(12, 10))},
            ),
            "degree-11 pencils with the 10 points in a fiber; boundary tail unpublished",
        ),
    ]
    return {e.name: e for e in entries}


_CATALOG = _builtin_catalog()


def catalog_get(name: str, catalog: dict | None = None) -> CatalogEntry:
    cat = catalog if catalog is not None else _CATALOG
    if name not in cat:
        raise KeyError(f"unknown catalog entry: {name!r}")
    return cat[name]


def catalog_names(catalog: dict | None = None):
    return sorted((catalog if catalog is not None else _CATALOG))


def catalog_load(path) -> dict:
    """Built-in catalog merged with (and overridden by) a JSON file.

    File schema: {"entries": [{"name": ..., "kind": "marked"|"unmarked",
    "class": <class document>, "note": ...}, ...]}.
    """
    with open(path) as fh:
        doc = json.load(fh)
    cat = dict(_CATALOG)
    try:
        for entry in doc["entries"]:
            name = entry["name"]
            kind = entry["kind"]
            if kind == "marked":
                cls = class_from_dict(entry["class"])
            elif kind == "unmarked":
                cls = unmarked_from_dict(entry["class"])
            else:
                raise MalformedClassError(f"unknown catalog kind {kind!r}")
            cat[name] = CatalogEntry(name, cls, entry.get("note", ""))
    except (KeyError, TypeError) as e:
        raise MalformedClassError(f"malformed catalog file: {e}") from e
    return cat


def catalog_dump(catalog: dict) -> dict:
    return {
        "entries": [
            {
                "name": e.name,
                "kind": "marked" if e.is_marked else "unmarked",
                "class": class_to_dict(e.cls) if e.is_marked else unmarked_to_dict(e.cls),
                "note": e.note,
            }
            for _, e in sorted(catalog.items())
        ]
    }


# ---------------------------------------------------------------------------
# certificate solving


@dataclass(frozen=True)
class Certificate:
    space: Space
    a: Fraction
    components: tuple  # ((name, Fraction), ...)
    residual: DivisorClass
    residual_report: tuple  # ((kind, key, status), ...)

    def to_json(self) -> dict:
        res = self.residual
        return {
            "space": {"g": self.space.g, "n": self.space.n},
            "a": rat_str(self.a),
            "components": [{"name": nm, "c": rat_str(c)} for nm, c in self.components],
            "residual": {
                "lambda": str(res.lam),
                "psi": str(res.psi[0]) if res.psi else "0",
                "delta_irr": str(res.delta_irr),
                "boundary": [
                    {"i": key[0], "s": key[1], "status": status}
                    for kind, key, status in self.residual_report
                    if kind == "orbit"
                ],
            },
        }


def _residual_status(c: Coefficient) -> str:
    if c.is_zero:
        return "zero"
    if c.is_exact:
        return "nonnegative" if c.value > 0 else "negative"
    if c.kind == "at_least" and c.value >= 0:
        return "nonnegative"
    return "unknown"


def solve_certificate(space: Space, components) -> Certificate:
    """Solve K = a sum(psi) + sum c_k D_k + E exactly on the interior part.

    `components` is a sequence of (name, DivisorClass).  Requires each
    component's lambda, psi, delta_irr coefficients Exact and its psi
    coefficients label-symmetric (asserted, not averaged).  E is forced to
    vanish on lambda, psi, delta_irr; its boundary entries are classified per
    generator orbit in the residual report.
    """
    components = list(components)
    kraw = canonical_class(space.g, space.n)
    for name, cls in components:
        if cls.space != space:
            raise SpaceMismatchError(f"component {name} lives on {cls.space}, want {space}")
        if not (cls.lam.is_exact and cls.delta_irr.is_exact and all(p.is_exact for p in cls.psi)):
            raise CertificateError(f"component {name} has a non-exact interior coefficient")
        if not cls.psi_symmetric:
            raise CertificateError(f"component {name} is not psi-symmetric")

    # rows: lambda, psi (one equation by symmetry), delta_irr
    # columns: a, then one per component
    matrix = [
        [Fraction(0)] + [cls.lam.value for _, cls in components],
        [Fraction(1)] + [cls.psi[0].value for _, cls in components],
        [Fraction(0)] + [cls.delta_irr.value for _, cls in components],
    ]
    rhs = [kraw.lam.value, kraw.psi[0].value, kraw.delta_irr.value]
    sol = solve_linear(LinearSystem(matrix, rhs))
    if sol.status == "infeasible":
        raise InfeasibleCertificateError("no exact interior decomposition exists")
    if sol.status == "underdetermined":
        raise UnderdeterminedCertificateError("interior system is underdetermined")
    a, *cs = sol.vector
    if a <= 0:
        raise NegativeCoefficientError(f"big-class coefficient a = {a} is not positive")
    for (name, _), c in zip(components, cs):
        if c < 0:
            raise NegativeCoefficientError(f"component {name} gets negative coefficient {c}")

    residual = kraw.add(psi_sum_class(space).scale(-a))
    for (_, cls), c in zip(components, cs):
        residual = residual.add(cls.scale(-c))
    assert residual.lam.is_zero and residual.delta_irr.is_zero
    assert all(p.is_zero for p in residual.psi)

    report = []
    for key in boundary_orbits(space):
        report.append(("orbit", key, _residual_status(
            residual._orbits.get(key, Coefficient.exact(0)))))
    for idx, v in residual.boundary_items():
        report.append(("index", (idx.i, tuple(sorted(idx.S))), _residual_status(v)))

    return Certificate(
        space=space,
        a=a,
        components=tuple((name, c) for (name, _), c in zip(components, cs)),
        residual=residual,
        residual_report=tuple(report),
    )


def perturbation_sound(space: Space, components) -> bool:
    """Guard against a trivially-passing solver: bumping any single interior
    coefficient (lambda, the symmetric psi, or delta_irr) of any component by 1
    must change the solved coefficients (or break solvability outright)."""
    components = list(components)
    base = solve_certificate(space, components)
    baseline = (base.a, tuple(c for _, c in base.components))
    bumps = {
        "lam": DivisorClass(space, lam=1),
        "psi": DivisorClass(space, psi=1),
        "delta_irr": DivisorClass(space, delta_irr=1),
    }
    for k, (name, cls) in enumerate(components):
        for bump in bumps.values():
            mutated = list(components)
            mutated[k] = (name, cls.add(bump))
            try:
                alt = solve_certificate(space, mutated)
            except CertificateError:
                continue  # no longer solvable: certainly not the same answer
            if (alt.a, tuple(c for _, c in alt.components)) == baseline:
                return False
    return True
