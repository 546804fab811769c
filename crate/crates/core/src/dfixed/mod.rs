//! d-sequences, d-decompositions and d-fixed ideals generated by powers of
//! variables, with their socle and regularity in closed form.

mod chi;
mod dseq;
mod powers;
mod principal;

pub use chi::{
    audit_socle_witness, block_structure, chi_sequence, max_socle_degree, reg_dfixed_powers,
    socle_witness_ideal, Block, BlockStructure, Branch, RecursionVariant, WitnessAudit,
};
pub use dseq::{DDecomposition, DSequence};
pub use powers::{
    colon_chain, dfixed_decomposition, dfixed_decomposition_with, dfixed_from_powers, gamma_families,
    gamma_families_with, ColonChain, DFixedDecomposition, GammaFamily, GammaRule, PowerPair,
    VariablePowerSpec,
};
pub use principal::{
    d_fixed_violation, frobenius_row, is_d_fixed, principal_d_fixed, principal_regularity_formula,
    reg_principal_d_fixed, socle_formula_ideal, socle_principal_d_fixed, DFixedViolation,
};
