"""
Engine settings

Library defaults used when the engine is driven directly from Python. The
command line runner overrides them through config.EngineSettings.
"""
from pydantic import BaseModel, Field


class QuadratureSetting(BaseModel):
    # Trapezoidal rule on circles
    min_nodes: int = Field(default=64, description="Lower bound of the default node count per circle")
    max_nodes: int = Field(default=1024, description="Upper bound when the node count is chosen from the contour geometry")
    placement_margin: float = Field(default=1e-2, description="Predicted quadrature error must stay below tolerance times this margin")
    hyperplane_nodes: int = Field(default=48, description="Nodes per circle for the Cauchy mean on coordinate hyperplanes")
    contour_margin: float = Field(default=0.5, description="Log-interpolation weight between inner compact and outer boundary")
    inner_radius_floor: float = Field(default=1e-2, description="Inner radius used for point compacts, relative to the outer radius")
    evaluation_chunk: int = Field(default=256, description="Points per block when a germ is evaluated by quadrature")


class GridSetting(BaseModel):
    # Sampling of domains and compacts
    radii: int = Field(default=5, description="Radial samples per planar factor")
    angles: int = Field(default=8, description="Angular samples per planar factor")
    boundary_points: int = Field(default=64, description="Points per boundary circle for seminorm suprema")
    local_radius_fraction: float = Field(default=0.1, description="Local Cauchy radius as a fraction of the distance to singularities")


class ToleranceSetting(BaseModel):
    tolerance: float = Field(default=1e-9, description="Default pass/fail tolerance for checks")
    relative_floor: float = Field(default=1e-3, description="Relative errors use max(|reference|, floor * scale)")
    vanishing_radii: tuple[float, float] = Field(default=(1e3, 1e6), description="Ray radii used to verify decay at infinity")


quadrature_setting: QuadratureSetting = QuadratureSetting()
grid_setting: GridSetting = GridSetting()
tolerance_setting: ToleranceSetting = ToleranceSetting()
