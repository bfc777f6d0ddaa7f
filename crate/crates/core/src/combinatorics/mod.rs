//! Stirling numbers, falling factorials, multinomial coefficients and
//! compositions.
//!
//! Stirling numbers are served from process-wide triangles that grow on
//! demand. Readers share the lock; a writer only appends rows, so any
//! interleaving of callers observes the same values.

pub mod oracle;

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{check_range, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Signed numbers `s(n, k)`: coefficients of the falling factorial.
    First,
    /// Set-partition numbers `S(n, k)`.
    Second,
}

/// A triangle of Stirling numbers for `0 ≤ k ≤ n ≤ max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind, max_n: usize) -> Self {
        let mut rows = vec![vec![BigInt::one()]];
        while rows.len() <= max_n {
            let next = next_row(kind, rows.last().unwrap(), rows.len() - 1);
            rows.push(next);
        }
        StirlingTable { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, k)`; zero for `k > n`. Panics when `n > max_n`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// Rows as JSON arrays of decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(self.rows.iter().map(|r| row_json(r)).collect())
    }
}

pub fn row_json(row: &[BigInt]) -> Value {
    json!(row.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

/// Row `n + 1` from row `n`.
fn next_row(kind: StirlingKind, row: &[BigInt], n: usize) -> Vec<BigInt> {
    let zero = BigInt::zero();
    let at = |k: usize| row.get(k).unwrap_or(&zero);
    (0..=n + 1)
        .map(|k| {
            let left = if k == 0 { &zero } else { at(k - 1) };
            match kind {
                // S(n+1, k) = S(n, k-1) + k S(n, k)
                StirlingKind::Second => left + at(k) * BigInt::from(k),
                // (t)_{n+1} = (t)_n (t - n)
                StirlingKind::First => left - at(k) * BigInt::from(n),
            }
        })
        .collect()
}

static SECOND: LazyLock<RwLock<StirlingTable>> =
    LazyLock::new(|| RwLock::new(StirlingTable::new(StirlingKind::Second, 0)));
static FIRST: LazyLock<RwLock<StirlingTable>> =
    LazyLock::new(|| RwLock::new(StirlingTable::new(StirlingKind::First, 0)));

fn cached(cache: &RwLock<StirlingTable>, n: usize, k: usize) -> BigInt {
    {
        let table = cache.read().unwrap_or_else(|e| e.into_inner());
        if n <= table.max_n() {
            return table.get(n, k);
        }
    }
    let mut table = cache.write().unwrap_or_else(|e| e.into_inner());
    while table.max_n() < n {
        let m = table.max_n();
        let next = next_row(table.kind, &table.rows[m], m);
        table.rows.push(next);
    }
    table.get(n, k)
}

/// `S(n, k)`; zero when `k > n`.
pub fn stirling_second(n: usize, k: usize) -> BigInt {
    cached(&SECOND, n, k)
}

/// Signed `s(n, k)`, the coefficient of `t^k` in `(t)_n`; zero when `k > n`.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    cached(&FIRST, n, k)
}

/// Coefficients of `(t)_n = t(t-1)⋯(t-n+1)`, index = power of `t`.
pub fn falling_factorial(n: usize) -> Vec<BigInt> {
    (0..=n).map(|k| stirling_first(n, k)).collect()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// An ordered partition `(i1, …, ik)` with every part positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&i| u64::from(i)).sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `n! / (i1! ⋯ ik!)` as a product of binomials
/// `C(i1+i2, i2) · C(i1+i2+i3, i3) ⋯`.
pub fn multinomial(n: u64, parts: &Composition) -> Result<BigInt> {
    if parts.norm() != n {
        return Err(Error::NormMismatch {
            expected: n,
            actual: parts.norm(),
        });
    }
    let mut running = 0u64;
    let mut acc = BigInt::one();
    for &i in parts.parts() {
        running += u64::from(i);
        acc *= binomial(running, u64::from(i));
    }
    Ok(acc)
}

/// All `2^(n-1)` compositions of `n`, longest first and lexicographic within a
/// length. This matches the canonical order of the words `1⊗x^{⊗I}`.
pub fn compositions_of(n: u32) -> Result<Vec<Composition>> {
    check_range("n", u64::from(n), 1, 20, "1..=20")?;
    let mut out = Vec::with_capacity(1 << (n - 1));
    // Bit b of the mask set means a cut after position b + 1.
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for b in 0..n - 1 {
            if mask & (1 << b) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(Composition(parts));
    }
    out.sort_by(|a, b| b.length().cmp(&a.length()).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}
