//! Constructive searches: `M_K`, `C_K` certificates, lattice scans, real-case
//! sampling, Pell obstructions and split recognition.

pub mod certify;
pub mod lattice;
pub mod mk;
pub mod pell;
pub mod real_case;
pub mod recognize;

pub use certify::{base_bound, ck_lower_certify, Certificate};
pub use lattice::{lattice_case_check, LatticeReport};
pub use mk::{mk_search, MkResult, MK_MAX_CAP};
pub use pell::{pell_counterexample, pell_fundamental, PellWitness};
pub use real_case::{real_case_quantity, real_case_samples, RealCaseSample};
pub use recognize::{recognize_split, recognize_split_int};
