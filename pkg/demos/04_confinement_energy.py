"""Momentum and energy scales of a particle confined to nucleotide lengths.

Runs the dp = hbar/dx, E = dp^2/2m pipeline at the CGS defaults,
compares the result to a hydrogen-bond energy, and sweeps the length
scale to show the exact inverse-square falloff.
"""

from codonlab import (
    PhysicalParams,
    erg_to_ev,
    erg_to_joule,
    fluctuation_energy,
    momentum_uncertainty,
    scale_comparison,
)

params = PhysicalParams()
dp = momentum_uncertainty(params)
energy = fluctuation_energy(params)

print("Inputs (CGS):")
print(f"  hbar    = {params.hbar:.3e} erg*s")
print(f"  delta_x = {params.delta_x:.3e} cm (single-nucleotide scale)")
print(f"  mass    = {params.mass:.3e} g (hydrogen atom)")
print()
print(f"Momentum uncertainty hbar/dx:   {dp:.4e} g*cm/s")
print(f"Fluctuation energy dp^2/2m:     {energy:.4e} erg")
print(f"                              = {erg_to_joule(energy):.4e} J")
print(f"                              = {erg_to_ev(energy):.4e} eV")
print()
print(f"Hydrogen-bond energy:           {params.hbond_energy:.1e} erg")
print(f"Fluctuation / hydrogen bond:    {energy / params.hbond_energy:.5f}")
print("(tens of times smaller: the fluctuation cannot break the bond)")
print()

print("Stretching the confinement length by a factor c divides E by c^2:")
print("  c   E(c*dx) erg     ratio to E(dx)")
for factor in (1.0, 2.0, 3.0, 4.0, 5.0):
    comparison = scale_comparison(params, factor)
    print(f"  {factor:.0f}   {comparison.energy_scaled:.4e}   {comparison.energy_ratio:.6f}")

third = scale_comparison(params, 3.0)
print()
print(f"At three nucleotides (one codon) the ratio is exactly 1/9:"
      f" {third.energy_ratio == 1.0 / 9.0}")
