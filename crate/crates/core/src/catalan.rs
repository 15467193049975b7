use num_bigint::BigUint;

use crate::error::{Error, Result};

/// The n-th Catalan number, exact.
pub fn catalan(n: usize) -> BigUint {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), every intermediate quotient is exact
    let mut c = BigUint::from(1u32);
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

/// Machine-width Catalan number; reports overflow instead of wrapping.
pub fn catalan_u64(n: usize) -> Result<u64> {
    u64::try_from(&catalan(n)).map_err(|_| Error::Overflow("u64"))
}
