pub mod algebra;
pub mod fixtures;
pub mod invariants;
pub mod linalg;
pub mod modrep;
pub mod nakayama;
