"""End-to-end analysis of one family, collected into a JSON-friendly record.

The pipeline: normalize the gauge, reject non-minimal input, classify the
t = 0 limit, build the density function (two independent routes when the
discriminant is not identically zero, the quartic route when it is), read off
the stable type and its lattice, and compute both end surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import (
    CuspKind,
    EndSurface,
    StableType,
    cusp_type,
    end_surface_data,
    stable_type,
)
from .density import (
    DensityFunction,
    cut_positions,
    density_cuspidal,
    density_from_positions,
    density_profile,
)
from .lattices import Lattice, stable_type_lattice
from .symalg import FamilyPair, canonical_text, extract_cusp_quartic, minimality_check
from .tropics import EndExponents, end_exponents, newton_polygon


def frac_str(x) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class AnalysisReport:
    source: str
    normalization_shift: Fraction
    ramification: int
    cusp: CuspKind
    ends_exp: EndExponents
    polygons: dict
    density: DensityFunction
    stable: StableType
    lattice: Lattice
    left_end: EndSurface
    right_end: EndSurface
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        fn = self.density
        return {
            "input": self.source,
            "normalization_shift": frac_str(self.normalization_shift),
            "ramification": self.ramification,
            "cusp_kind": self.cusp.value,
            "end_exponents": {
                "at_zero": frac_str(self.ends_exp.at_zero),
                "at_infinity": frac_str(self.ends_exp.at_infinity),
            },
            "newton_polygons": {
                name: (
                    None
                    if hull is None
                    else [[frac_str(i), frac_str(v)] for i, v in hull]
                )
                for name, hull in self.polygons.items()
            },
            "density": {
                "domain": [frac_str(fn.lo), frac_str(fn.hi)],
                "breakpoints": [[frac_str(w), frac_str(v)] for w, v in fn.breakpoints],
                "unit_breakpoints": [
                    [frac_str(x), frac_str(v)] for x, v in fn.unit_breakpoints()
                ],
                "slopes": list(fn.slopes()),
            },
            "stable_type": self.stable.label(),
            "charges": list(self.stable.charges()),
            "lattice": {
                "name": self.lattice.name,
                "rank": self.lattice.rank,
                "determinant": self.lattice.determinant(),
            },
            "ends": {
                "left_nodal": self.left_end.is_nodal,
                "right_nodal": self.right_end.is_nodal,
            },
            "warnings": list(self.warnings),
        }


def analyze(f: FamilyPair) -> AnalysisReport:
    """Run the full pipeline on a (possibly unnormalized) family."""
    g = f.normalized()
    minimality_check(g)
    kind = cusp_type(g)
    ends_exp = end_exponents(g)

    delta = g.discriminant24()
    polygons = {
        "g8": newton_polygon(g.g8).hull,
        "g12": newton_polygon(g.g12).hull,
    }
    if delta.is_zero():
        quartic = extract_cusp_quartic(g)
        fn = density_cuspidal(quartic)
        polygons["delta"] = None
    else:
        fn = density_profile(g)
        other = density_from_positions(cut_positions(g))
        if other.slope_profile() != fn.slope_profile():
            raise RuntimeError(
                "density routes disagree on the slope profile: %r vs %r"
                % (fn, other)
            )
        polygons["delta"] = newton_polygon(delta).hull

    st = stable_type(fn)
    lat = stable_type_lattice(st)
    left = end_surface_data(g, "left")
    right = end_surface_data(g, "right")

    warnings = []
    if kind is CuspKind.SEGMENT and any(c.kind == "D" for c in st.components):
        warnings.append(
            "interior-segment limit with a D-type end; both are reported as computed"
        )
    if (fn.value_at(fn.lo) == 0) == left.is_nodal:
        warnings.append("left end: density endpoint disagrees with the nodal test")
    if (fn.value_at(fn.hi) == 0) == right.is_nodal:
        warnings.append("right end: density endpoint disagrees with the nodal test")

    source = f.source_text
    if not source:
        try:
            source = canonical_text(f)
        except ValueError:
            source = ""

    return AnalysisReport(
        source=source,
        normalization_shift=g.shift,
        ramification=g.ramification(),
        cusp=kind,
        ends_exp=ends_exp,
        polygons=polygons,
        density=fn,
        stable=st,
        lattice=lat,
        left_end=left,
        right_end=right,
        warnings=tuple(warnings),
    )
