"""spectile: exact and numerical verification of spectra and translational tilings
of box-union domains, with search over rational candidate grids."""

__version__ = "0.1.0"
