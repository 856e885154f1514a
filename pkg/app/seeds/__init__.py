from app.seeds.builder import make_seed, seed_energy
from app.seeds.classify import boundary_exponents, classify_seed
from app.seeds.models import BoundaryBehavior, BoundaryType, Descriptor, Seed, SeedKind

__all__ = [
    "BoundaryBehavior",
    "BoundaryType",
    "Descriptor",
    "Seed",
    "SeedKind",
    "boundary_exponents",
    "classify_seed",
    "make_seed",
    "seed_energy",
]
