"""Material catalog: superconductor names, atomic numbers, zero-temperature
coherence lengths and critical temperatures.

The built-in catalog holds the seven elemental superconductors used by the
reference tables; more can be loaded from a plain delimited text file, one
``name,Z,xi0_nm,Tc_K`` record per line (canonical extension
``.materials.csv``).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError, MaterialFileError, UnknownMaterialError

__all__ = [
    "Material",
    "builtin_materials",
    "load_materials",
    "save_materials",
    "lookup",
]


@dataclass(frozen=True)
class Material:
    name: str
    Z: int
    xi0: float  # coherence length at T = 0, nm
    Tc: float   # critical temperature, K

    def __post_init__(self) -> None:
        if not self.name:
            raise DomainError("name must be non-empty")
        if self.Z < 1:
            raise DomainError(f"Z must be a positive integer, got {self.Z}")
        if self.xi0 <= 0.0:
            raise DomainError(f"xi0 must be positive, got {self.xi0:g}")
        if self.Tc <= 0.0:
            raise DomainError(f"Tc must be positive, got {self.Tc:g}")


_BUILTIN = (
    Material("Al", 13, 1600.0, 1.175),
    Material("Nb", 41, 38.0, 9.25),
    Material("In", 49, 360.0, 3.41),
    Material("Sn", 50, 230.0, 3.72),
    Material("Ga", 64, 760.0, 1.083),
    Material("Ta", 73, 93.0, 4.47),
    Material("Pb", 82, 83.0, 7.2),
)


def builtin_materials() -> list[Material]:
    """The seven built-in materials, in atomic-number order."""
    return list(_BUILTIN)


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def load_materials(path: str | Path) -> list[Material]:
    """Parse a material file.

    Blank lines and ``#`` comments are skipped; a header line is recognised
    by a non-numeric second field.  Raises :class:`MaterialFileError` with
    the offending line number on parse or validation failures.
    """
    path = Path(path)
    catalog: list[Material] = []
    seen: set[str] = set()
    first_data_line = True
    with path.open(encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = [f.strip() for f in line.split(",")]
            if len(fields) != 4:
                raise MaterialFileError(
                    f"{path}:{lineno}: expected 4 comma-separated fields, "
                    f"got {len(fields)}"
                )
            if first_data_line and not _is_number(fields[1]):
                first_data_line = False
                continue  # header
            first_data_line = False
            name = fields[0]
            try:
                z = int(fields[1])
                xi0 = float(fields[2])
                tc = float(fields[3])
            except ValueError as exc:
                raise MaterialFileError(f"{path}:{lineno}: {exc}") from exc
            if name.casefold() in seen:
                raise MaterialFileError(
                    f"{path}:{lineno}: duplicate material name {name!r}"
                )
            try:
                material = Material(name, z, xi0, tc)
            except DomainError as exc:
                raise MaterialFileError(f"{path}:{lineno}: {exc}") from exc
            seen.add(name.casefold())
            catalog.append(material)
    return catalog


def save_materials(catalog: list[Material], path: str | Path) -> None:
    """Write a catalog in the same format :func:`load_materials` reads."""
    path = Path(path)
    lines = ["# name,Z,xi0_nm,Tc_K"]
    for m in catalog:
        lines.append(f"{m.name},{m.Z},{m.xi0:.17g},{m.Tc:.17g}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def lookup(catalog: list[Material], name: str) -> Material:
    """Case-insensitive exact-name lookup."""
    wanted = name.casefold()
    for material in catalog:
        if material.name.casefold() == wanted:
            return material
    available = ", ".join(m.name for m in catalog)
    raise UnknownMaterialError(
        f"unknown material {name!r}; available: {available}"
    )
