"""Small nilpotent orbits of so(2n, C): orbit atlas, Clifford lifts of
component groups, K-type spectra and independent matrix/character oracles."""

__version__ = "0.1.0"

from .orbits import OrbitError, OrbitLabel, enumerate_small_orbits, parse_orbit  # noqa: F401
from .rootsys import CapacityError, Weight  # noqa: F401
