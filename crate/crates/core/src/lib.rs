pub mod codes;
pub mod gf;
pub mod linalg;
pub mod perm;
pub mod family;
pub mod css;
pub mod gates;
pub mod scheduler;
