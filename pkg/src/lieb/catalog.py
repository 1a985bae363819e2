"""Built-in parametric instances, loaded from the .lieb files shipped with the
package.  Entries are data, not constructors: the file format itself is
exercised every time the catalog loads.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from .document import Document, parse_document, run_constructs
from .scalars import Assumption, Scalar
from .structures import map_scalars


class UnknownId(KeyError):
    """No catalog entry with the requested id."""


class BindingError(ValueError):
    """A binding referenced an undeclared parameter or voided an assumption."""


@dataclass
class CatalogEntry:
    id: str
    description: str
    source: str
    document: Document
    assumptions: list[Assumption]
    metadata: dict

    @property
    def structures(self) -> dict[str, object]:
        return self.document.structures


# id -> (filename, description, source label, metadata); order is the
# deterministic listing order.
_REGISTRY: dict[str, tuple[str, str, str, dict]] = {
    "sl2": (
        "sl2.lieb",
        "the 3-dimensional simple Lie algebra in the Cartan-Weyl basis",
        "sl2 bracket table",
        {},
    ),
    "qt-sl2": (
        "qt-sl2.lieb",
        "antisymmetric Yang-Baxter solution lambda*(f@g - g@f) with its induced cobracket",
        "quasitriangular structure on sl2",
        {},
    ),
    "caybe-sl2": (
        "caybe-sl2.lieb",
        "generic skew form solving the co-Yang-Baxter equation on the induced cobracket",
        "co-Yang-Baxter solutions on sl2",
        {},
    ),
    "symp-sl2": (
        "symp-sl2.lieb",
        "kappa-family of weak symplectic forms on sl2",
        "weak symplectic structures on sl2",
        {"solution_space_dimension": 3,
         "completeness": "the shipped family spans 1 of the 3 solution dimensions"},
    ),
    "nsl2": (
        "nsl2.lieb",
        "torsion-free operator omega(x, r^1) r^2 with its quasitriangular data",
        "operator induced by the symplectic form and the Yang-Baxter tensor",
        {},
    ),
    "nij-family-1": ("nij-family-1.lieb", "torsion-free operator family 1 on sl2",
                     "operator classification, family 1", {}),
    "nij-family-2": ("nij-family-2.lieb", "torsion-free operator family 2 on sl2 (k3 != 0)",
                     "operator classification, family 2", {}),
    "nij-family-3": ("nij-family-3.lieb", "torsion-free operator family 3 on sl2 (k2, k8 != 0)",
                     "operator classification, family 3",
                     {"blank_read_as_zero": True, "blank_check_outcome": "pass"}),
    "nij-family-4": ("nij-family-4.lieb", "torsion-free operator family 4 on sl2",
                     "operator classification, family 4", {}),
    "nij-family-5": ("nij-family-5.lieb", "torsion-free operator family 5 on sl2 (k4, k7 != 0)",
                     "operator classification, family 5", {}),
    "nij-family-6": ("nij-family-6.lieb", "operator family 6 on sl2 (k5 != k1), stored verbatim",
                     "operator classification, family 6",
                     {"known_defect": "torsion residual 4*k3*k6 at (e, f); needs k3*k6 = 0"}),
    "nij-family-7": ("nij-family-7.lieb",
                     "torsion-free operator family 7 on sl2 (k4, k7 != 0, k2*k4 != k3*k7)",
                     "operator classification, family 7", {}),
    "nij-diag-1": ("nij-diag-1.lieb", "diagonal torsion-free operator diag(k1, k5, k5), k5 != k1",
                   "diagonalisable operator classification", {}),
    "nij-diag-2": ("nij-diag-2.lieb", "diagonal torsion-free operator diag(k1, k5, k1)",
                   "diagonalisable operator classification", {}),
    "nliebialg-a": ("nliebialg-a.lieb", "operator bialgebra pair (a): nilpotent shear with scalar P",
                    "operator pairs on the quasitriangular sl2 bialgebra", {}),
    "nliebialg-b": ("nliebialg-b.lieb", "operator bialgebra pair (b): independent shear weights",
                    "operator pairs on the quasitriangular sl2 bialgebra", {}),
    "nliebialg-c": ("nliebialg-c.lieb", "operator bialgebra pair (c), stored verbatim",
                    "operator pairs on the quasitriangular sl2 bialgebra",
                    {"known_defect":
                     "operator-compatibility residual -4*k2*k3 at (e, e); needs k2*k3 = 0"}),
    "nliebialg-d": ("nliebialg-d.lieb", "operator bialgebra pair (d): P flips both shears",
                    "operator pairs on the quasitriangular sl2 bialgebra",
                    {"stated_conditions": "k2 != 0, k3 != 0"}),
}


def _load_document(filename: str) -> Document:
    text = resources.files("lieb.data").joinpath(filename).read_text(encoding="utf-8")
    doc = parse_document(text)
    run_constructs(doc)
    return doc


def entry_ids() -> list[str]:
    return list(_REGISTRY)


def list_entries() -> list[tuple[str, str]]:
    """Deterministic (id, description) pairs for every entry."""
    return [(entry_id, info[1]) for entry_id, info in _REGISTRY.items()]


def get(entry_id: str, bindings: Mapping[str, Scalar] | None = None) -> CatalogEntry:
    """Load an entry; with bindings, substitute scalars for declared parameters."""
    if entry_id not in _REGISTRY:
        raise UnknownId(entry_id)
    filename, description, source, metadata = _REGISTRY[entry_id]
    doc = _load_document(filename)
    assumptions = list(doc.assumptions)
    for stmt in doc.checks:
        for a in stmt.assumptions:
            if a not in assumptions:
                assumptions.append(a)
    if bindings:
        undeclared = set(bindings) - set(doc.params)
        if undeclared:
            raise BindingError(f"bindings for undeclared parameters: {sorted(undeclared)}")
        doc.structures.update({
            name: map_scalars(obj, lambda s: s.substitute(bindings))
            for name, obj in doc.structures.items()
        })
        rebound = []
        for a in assumptions:
            value = Scalar(a.nonzero).substitute(bindings)
            if value.is_zero():
                raise BindingError(f"binding voids the assumption {a}")
            if not value.num.is_constant():
                rebound.append(Assumption(value.num))
        assumptions = rebound
    return CatalogEntry(entry_id, description, source, doc, assumptions, dict(metadata))
