"""
Verification Harness Module

Theorem verifiers, brute-force oracles, seeded trials and the conjecture scan.
"""

from .trials import Lcg64, TrialDomain, TrialSpec, random_set, trial_sets, run_trials
from .energy import energy_count, energy_direct, energy_ratio_form, energy_report
from .coprime import coprime_pair_count, coprime_pair_count_totient, coprime_density
from .verifiers import (
    points_from_set,
    verify_thm1,
    verify_thm2,
    verify_lemma3,
    verify_thm4,
    verify_corollary5,
    verify_thm6,
    verify_lemma7,
    verify_thm9,
    ungar_check,
)
from .scan import ScanKind, ScanReport, conjecture_scan, scan_trials

__all__ = [
    'Lcg64',
    'TrialDomain',
    'TrialSpec',
    'random_set',
    'trial_sets',
    'run_trials',
    'energy_count',
    'energy_direct',
    'energy_ratio_form',
    'energy_report',
    'coprime_pair_count',
    'coprime_pair_count_totient',
    'coprime_density',
    'points_from_set',
    'verify_thm1',
    'verify_thm2',
    'verify_lemma3',
    'verify_thm4',
    'verify_corollary5',
    'verify_thm6',
    'verify_lemma7',
    'verify_thm9',
    'ungar_check',
    'ScanKind',
    'ScanReport',
    'conjecture_scan',
    'scan_trials',
]
