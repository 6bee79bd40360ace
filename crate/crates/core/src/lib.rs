//! Exact enumeration of theta-stable parabolic signatures `(R+, R-)` for the
//! irreducible Hermitian symmetric pairs, and the Hodge-number vanishing,
//! Picard and Leray–Hirsch statements derived from them.
//!
//! ```
//! use parasig::{attainable_signatures, build_root_datum, PairDescriptor};
//!
//! let datum = build_root_datum(PairDescriptor::EIII).unwrap();
//! let set = attainable_signatures(&datum, Some(&[0])).unwrap();
//! assert_eq!(set.r_minus(0), vec![8, 11, 12, 13, 14, 15, 16]);
//! ```

pub mod closed_form;
pub mod config;
pub mod error;
pub mod grid;
pub mod hodge;
pub mod qpoly;
pub mod rational;
pub mod rootsys;
pub mod signatures;
pub mod weyl;

pub use closed_form::{closed_form_rminus, closed_form_variants, compare_cell, CellReport, CellStatus, ClosedForm};
pub use config::Limits;
pub use error::{Error, Result};
pub use grid::ParamGrid;
pub use hodge::{
    h11_structure, hodge_y, leray_hirsch, low_degree_zero, picard_reports, vanish_h0q, vanish_h1q, HodgeDiamond,
    HodgeValue, PicardReport, VanishingAnalyzer, VanishingVerdict, Verdict,
};
pub use rational::{RatVec, Rational};
pub use rootsys::{build_root_datum, build_root_datum_with, eval_root, reflect, CartanType, PairDescriptor, RootDatum};
pub use signatures::{
    attainable_signatures, attainable_with_provenance, enumerate_face_points, r_signature, sample_signatures,
    FacePoint, Signature, SignatureSet,
};
pub use weyl::{apply_word, flag_poincare, orbit_bfs, WeylWord};
