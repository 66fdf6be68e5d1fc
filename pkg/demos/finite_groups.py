"""Bar cohomology of finite groups, plain and in the morphism complex.

Over the rationals every finite group has vanishing higher cohomology
(averaging kills it), so the plain tables mostly showcase H^0 and the
difference between full and normalized cochain sizes.  The morphism
complex is richer: its Lambda block contributes classes even for the
one-element group.
"""

from morphlie.fixtures import (
    klein_to_z2_triple,
    sign_module,
    z2_identity_triple,
    z3_rotation_module,
    z4_to_z2_sign_triple,
)
from morphlie.groups import (
    FiniteGroup,
    GroupModule,
    GroupModuleTriple,
    group_cochain_dim,
    group_cohomology_dim,
    mlg_block_dims,
    mlg_cohomology_dim,
)

# Plain bar cohomology.  Full and normalized complexes compute the same
# H even though their cochain spaces differ in size.
modules = [
    ("trivial k over Z/2", GroupModule.trivial(FiniteGroup.cyclic(2), 1)),
    ("sign module over Z/2", sign_module(FiniteGroup.cyclic(2))),
    ("plane rotation over Z/3", z3_rotation_module()),
    ("trivial k over Klein four", GroupModule.trivial(FiniteGroup.klein_four(), 1)),
]
print("plain group cohomology, degrees 0..2")
for name, mod in modules:
    full = [group_cohomology_dim(mod, n) for n in range(3)]
    norm = [group_cohomology_dim(mod, n, normalized=True) for n in range(3)]
    c_full = [group_cochain_dim(mod.group, mod.dim, n) for n in range(3)]
    c_norm = [group_cochain_dim(mod.group, mod.dim, n, True) for n in range(3)]
    print(f"  {name}")
    print(f"    dim C full {c_full} vs normalized {c_norm}; "
          f"H = {full} either way: {full == norm}")
print()

# The morphism complex over group homomorphisms.  Degree n holds a
# V-valued cochain on G, a W-valued cochain on H, and a Lambda block of
# W-valued cochains on G one degree down.
triples = [
    ("trivial group, identity", GroupModuleTriple.identity(
        GroupModule.trivial(FiniteGroup.trivial(), 1))),
    ("Z/2, identity", z2_identity_triple()),
    ("Klein four onto Z/2", klein_to_z2_triple()),
    ("Z/4 rotation onto Z/2 sign", z4_to_z2_sign_triple()),
]
print("morphism-group cohomology, degrees 0..2 (full cochains)")
for name, t in triples:
    dims = [mlg_cohomology_dim(t, n) for n in range(3)]
    blocks = [mlg_block_dims(t, n) for n in range(3)]
    print(f"  {name}")
    print(f"    block dims (V, W, Lambda) by degree: {blocks}")
    print(f"    H_mLG = {dims}")
print()

# Even the one-element group carries a degree-1 class.  Its Lambda
# block in degree 1 is Hom(G^0, W) = W, one dimension, closed because
# nothing lives in degree 2, and out of reach because the degree-0
# differential has no Lambda component at all.
t = triples[0][1]
print("why the trivial group is not acyclic here:")
print(f"  degree-1 blocks (V, W, Lambda) = {mlg_block_dims(t, 1, normalized=True)}")
print(f"  normalized H^1_mLG = {mlg_cohomology_dim(t, 1, normalized=True)}")
print()

# For Z/4 -> Z/2 the only intertwiner between the rotation plane and
# the sign line is zero, so the V and W columns decouple; the single
# degree-1 class lives in the Lambda block and survives normalization.
t = z4_to_z2_sign_triple()
print("Z/4 rotation onto Z/2 sign, psi = 0:")
print(f"  H^1_mLG full = {mlg_cohomology_dim(t, 1)}, "
      f"normalized = {mlg_cohomology_dim(t, 1, normalized=True)}")
