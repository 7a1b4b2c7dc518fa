"""Default numerical tolerances (double precision, cutoffs up to 256)."""

NORM_TOL = 1e-10
TAIL_TOL = 1e-12
ORTHO_TOL = 1e-8
UNITARY_TOL = 1e-8
EIG_TOL = 1e-8
CMP_TOL = 1e-9

# Gram determinants this close to zero are rounding noise.
DET_CLAMP = 1e-14

DEFAULTS = {
    "norm": NORM_TOL,
    "tail": TAIL_TOL,
    "ortho": ORTHO_TOL,
    "unitary": UNITARY_TOL,
    "eig": EIG_TOL,
    "cmp": CMP_TOL,
}
