"""Physical constants (CODATA 2018), bundled so results do not depend on the
host platform's constant tables.

The model core works in reduced units with hbar^2/(2m) = 1, so energy equals
momentum squared.  Everything in this module is SI (or eV/K where noted) and
is only used by the physical-unit layer.
"""

HBAR_JS = 1.054571817e-34        # reduced Planck constant, J s
ELECTRON_MASS_KG = 9.1093837015e-31
BOLTZMANN_J_PER_K = 1.380649e-23
EV_J = 1.602176634e-19           # electron volt, J
BOLTZMANN_EV_PER_K = BOLTZMANN_J_PER_K / EV_J   # 8.617333262e-5 eV/K

METERS_TO_ANGSTROM = 1e10
