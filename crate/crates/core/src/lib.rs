//! Heights, Gauss norms and Mahler measures of polynomials over ℚ and
//! quadratic fields, with certified checks of lower bounds for heights of
//! polynomials whose roots all lie in the field.
//!
//! Exact arithmetic uses GMP rationals; real quantities are enclosed in
//! outward-rounded MPFR intervals.
//!
//! ```
//! use splitheight::{height, parse_field, parse_poly, DEFAULT_PRECISION};
//!
//! let k = parse_field("Q(sqrt(-2))").unwrap();
//! let f = parse_poly("x^8+2x^6-3x^4-4x^2+4", k).unwrap();
//! let h = height(&f, DEFAULT_PRECISION).unwrap();
//! assert!(h.height.contains_f64(4.0));
//! ```

pub mod analytic;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod factor;
pub mod field;
pub mod heights;
pub mod interval;
pub mod parse;
pub mod poly;
pub mod report;
pub mod sample;
pub mod search;
pub mod valuations;

pub use analytic::{
    arch_gauss_product, check_complexmahler, complex_roots, mahler_is_one, mahler_measure,
    mahler_measure_embedded, roots_of_embedding, MahlerValue, RootBox,
};
pub use bounds::{
    check_alphabound1, check_alphabound2, check_bound1, check_bound2, check_combined, ck_interval,
    mahler_floor, t2_constant, BoundCheck, BoundName, CkInterval, T2Constant, Verdict,
};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldKind};
pub use heights::{char_poly, count_unity_roots, expand, height, mk_alpha, mk_alpha_local, CharPoly, HeightReport, SplitPoly};
pub use interval::{ComplexBox, RealInterval, DEFAULT_PRECISION, MAX_PRECISION};
pub use parse::{parse_element, parse_field, parse_poly};
pub use poly::{int_poly_from_desc, IntPoly, PolyOverK};
pub use report::Report;
pub use search::{
    ck_lower_certify, lattice_case_check, mk_search, pell_counterexample, real_case_samples, recognize_split,
    Certificate, LatticeReport, MkResult, PellWitness,
};
pub use valuations::{
    local_factorization, nonarch_gauss_product, product_formula_check, split_prime, valuation, PrimeKind, PrimeOfK,
    Valuation,
};
