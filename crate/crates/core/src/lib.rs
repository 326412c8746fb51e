//! Classical and small quantum cohomology of isotropic Grassmannians:
//! symplectic IG(m,2n), odd orthogonal OG(m,2n+1), even orthogonal
//! OG(m,2n+2) and the maximal OG(n,2n+2) with two quantum parameters.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod engine;
pub mod error;
pub mod index;
pub mod index_pieri;
pub mod label;
pub mod pieri;
pub mod presentation;
pub mod quantum;
pub mod ring;
pub mod spec;

pub use engine::{
    classical_product, degree_one_crosscheck, express_in_specials, gromov_witten, quantum_product, Mode, Session,
    SpecialPolynomial,
};
pub use error::{Error, Result};
pub use index::{dual, index_set_to_label, label_to_index_set, IndexSet, PartitionPair};
pub use index_pieri::{classical_pieri_via_index, index_arrow, index_multiplicity};
pub use label::{ell_k, enumerate_basis, validate_label, Label};
pub use pieri::{classical_pieri, k_related, pieri_arrow, Cell, Convention, PieriMove, SpecialClass};
pub use presentation::{
    basis_check, evaluate, relations, schur_determinant, verify_presentation, BasisReport, Flavor, GeneratorPolynomial,
    PresentationReport,
};
pub use quantum::{max_q_degree_bound, quantum_pieri, quantum_pieri_d_k1};
pub use ring::{QExp, RingElement};
pub use spec::{make_spec, LieType, Spec};
pub use num_bigint::BigInt;
