"""Quasi-static quantum Otto engine with two Heisenberg-coupled spins:
exact spectra, thermal states, cycle energetics, operating-regime bounds,
complete two-level cycles, and a brute-force verification layer."""

__version__ = "0.1.0"

from .coc import (CocAudit, CocRecord, enumerate_cocs, max_engine_coc_efficiency,
                  second_law_audit)
from .ensemble import (ThermalState, closed_form_partition_function,
                       log_partition_function, shannon_entropy, thermal_state)
from .exact import (DenseHamiltonian, build_hamiltonian, compare_with_analytic,
                    eigen_spectrum)
from .otto import (CycleParams, CycleReport, average_cycle_report,
                   trace_consistency_check, xy_factors)
from .regime import (CouplingBounds, EfficiencyBounds, RegimeVerdict, SweepConfig,
                     coupling_bounds, efficiency_bounds, j_a_bound, lemma_suite,
                     majorization_check, pwc_holds, regime_verdict, wcs_predicate)
from .spectrum import (EnergyLevel, SpinPair, Spectrum, build_spectrum,
                       check_no_level_crossing, degeneracy_profile,
                       energy_of_level, parse_spin)
from .verify import VerificationConfig, run_verification

__all__ = [
    "__version__",
    "SpinPair", "EnergyLevel", "Spectrum", "build_spectrum", "parse_spin",
    "energy_of_level", "degeneracy_profile", "check_no_level_crossing",
    "ThermalState", "thermal_state", "log_partition_function",
    "closed_form_partition_function", "shannon_entropy",
    "CycleParams", "CycleReport", "average_cycle_report", "xy_factors",
    "trace_consistency_check",
    "RegimeVerdict", "CouplingBounds", "EfficiencyBounds", "SweepConfig",
    "pwc_holds", "coupling_bounds", "j_a_bound", "efficiency_bounds",
    "wcs_predicate", "majorization_check", "regime_verdict", "lemma_suite",
    "CocRecord", "CocAudit", "enumerate_cocs", "max_engine_coc_efficiency",
    "second_law_audit",
    "DenseHamiltonian", "build_hamiltonian", "eigen_spectrum",
    "compare_with_analytic",
    "VerificationConfig", "run_verification",
]
