use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::Int;

/// Rows `0..PASCAL_ROWS` of Pascal's triangle are built once on first use.
const PASCAL_ROWS: u64 = 257;

fn pascal() -> &'static [Vec<Int>] {
    static TABLE: OnceLock<Vec<Vec<Int>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(PASCAL_ROWS as usize);
        rows.push(vec![Int::one()]);
        for n in 1..PASCAL_ROWS as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(Int::one());
            row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
            row.push(Int::one());
            rows.push(row);
        }
        rows
    })
}

/// `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    if n < PASCAL_ROWS {
        return pascal()[n as usize][k as usize].clone();
    }
    binomial_product(n, k as u64)
}

/// The full row `binom(n, 0..=n)`.
pub fn binomial_row(n: u64) -> Vec<Int> {
    if n < PASCAL_ROWS {
        return pascal()[n as usize].clone();
    }
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = Int::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

fn binomial_product(n: u64, k: u64) -> Int {
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        // acc = binom(n - k + i + 1, i + 1) after each step
        acc = acc * (n - k + i + 1) / (i + 1);
    }
    acc
}
