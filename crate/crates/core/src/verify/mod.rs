//! Certification of the constructed idempotents and of the identities the
//! constructions rely on.

mod exponents;
mod interp;
mod lemmas;
mod relations;
mod system;

pub use exponents::{check_exponents, laplacian_cases, ExponentReport, LaplacianCase};
pub use interp::interp_idempotent;
pub use lemmas::check_proof_lemmas;
pub use relations::{check_defining_relations, check_jm_structure, RelationResult};
pub use system::{certify_element, check_system, CertReport, SystemOptions, TableauCert};
