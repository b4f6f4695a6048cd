//! Finitely presented abelian groups and K0-level exact sequences.
//!
//! Groups are `Z^g` modulo a relation matrix and are compared through Smith normal
//! form, never by matrix equality. Each ring family with a package supplies its K0
//! groups and induced maps from an oracle that can be rederived by hand.

mod group;
mod package;
mod sequences;

pub use group::{
    exactness_witness, int_matrix, ker_coker, snf, CanonicalForm, FpAbelianGroup, GroupMap, IntMatrix, IntegerSnf,
    KerCoker, KerCokerCertificate,
};
pub use package::{GroupSpec, GroupsSpec, K0Package, MapsSpec, PackageSpec};
pub use sequences::{
    beta_alpha, eta_beta_alpha, euler_class, ft0_check, mv0_check, nk0, psi_classes, rk_minus1, shift_difference,
    stably_induced_obstruction, EtaBetaAlpha, Ft0Certificate, Induction, Mv0Certificate, NilSign, Obstruction,
    ShiftChoice, ShiftDifference,
};
