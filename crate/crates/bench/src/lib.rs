//! Fixed inputs shared by the benches.

use hrnr_core::random::{random_hermitian, random_matrix, seeded};
use hrnr_core::Matrix;

pub fn hermitian(n: usize) -> Matrix {
    random_hermitian(&mut seeded(n as u64), n)
}

pub fn general(n: usize) -> Matrix {
    random_matrix(&mut seeded(100 + n as u64), n)
}
