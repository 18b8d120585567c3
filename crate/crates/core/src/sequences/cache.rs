use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SequenceId {
    /// Catalan–Larcombe–French numbers.
    P,
    /// `S_n = P_n / 2^n`.
    S,
    /// Franel numbers.
    F,
}

impl SequenceId {
    fn name(self) -> &'static str {
        match self {
            SequenceId::P => "P",
            SequenceId::S => "S",
            SequenceId::F => "F",
        }
    }

    fn initial(self) -> [i64; 2] {
        match self {
            SequenceId::P => [1, 8],
            SequenceId::S => [1, 4],
            SequenceId::F => [1, 2],
        }
    }

    /// Coefficients `(a(n), b(n))` of `(n+1)^2 u_{n+1} = a(n) u_n + b(n) u_{n-1}`.
    fn coefficients(self, n: u64) -> (u64, i64) {
        let q = 3 * n * n + 3 * n + 1;
        let n2 = (n * n) as i64;
        match self {
            SequenceId::P => (8 * q, -128 * n2),
            SequenceId::S => (4 * q, -32 * n2),
            SequenceId::F => (7 * n * n + 7 * n + 2, 8 * n2),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(SequenceId::P),
            "S" | "s" => Ok(SequenceId::S),
            "F" | "f" => Ok(SequenceId::F),
            other => Err(format!("unknown sequence {other:?}; expected P, S or F")),
        }
    }
}

/// Grow-on-demand table of one sequence, filled by its recurrence.
///
/// Filling takes the write lock; lookups of an already-filled prefix only
/// take the read lock.
pub struct SequenceCache {
    id: SequenceId,
    values: RwLock<Vec<BigInt>>,
}

impl SequenceCache {
    pub fn new(id: SequenceId) -> Self {
        let [u0, u1] = id.initial();
        SequenceCache {
            id,
            values: RwLock::new(vec![BigInt::from(u0), BigInt::from(u1)]),
        }
    }

    pub fn id(&self) -> SequenceId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.values.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Make sure indices `0..=n` are present.
    pub fn fill_to(&self, n: usize) -> Result<()> {
        if n < self.len() {
            return Ok(());
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= n {
            let i = values.len() - 1;
            let (a, b) = self.id.coefficients(i as u64);
            let rhs = &values[i] * a + &values[i - 1] * b;
            let d = BigInt::from((i as u64 + 1) * (i as u64 + 1));
            let (q, r) = rhs.div_rem(&d);
            if !r.is_zero() {
                return Err(Error::NonIntegralRecurrenceStep {
                    sequence: self.id.name(),
                    index: i + 1,
                });
            }
            values.push(q);
        }
        Ok(())
    }

    pub fn get(&self, n: usize) -> Result<BigInt> {
        if let Some(v) = self.values.read().unwrap().get(n) {
            return Ok(v.clone());
        }
        self.fill_to(n)?;
        Ok(self.values.read().unwrap()[n].clone())
    }

    /// Copy of `u_0, …, u_n`.
    pub fn prefix(&self, n: usize) -> Result<Vec<BigInt>> {
        self.fill_to(n)?;
        Ok(self.values.read().unwrap()[..=n].to_vec())
    }
}

static P_CACHE: LazyLock<SequenceCache> = LazyLock::new(|| SequenceCache::new(SequenceId::P));
static S_CACHE: LazyLock<SequenceCache> = LazyLock::new(|| SequenceCache::new(SequenceId::S));
static F_CACHE: LazyLock<SequenceCache> = LazyLock::new(|| SequenceCache::new(SequenceId::F));

pub(crate) fn cache(id: SequenceId) -> &'static SequenceCache {
    match id {
        SequenceId::P => &P_CACHE,
        SequenceId::S => &S_CACHE,
        SequenceId::F => &F_CACHE,
    }
}

/// Fill the shared cache for `id` up to index `n`.
pub fn prefill(id: SequenceId, n: usize) -> Result<()> {
    cache(id).fill_to(n)
}

/// `P_n`, checked against `2^n S_n`.
pub fn clf_p(n: usize) -> Result<BigInt> {
    let p = P_CACHE.get(n)?;
    if p != S_CACHE.get(n)? << n {
        return Err(Error::NonIntegralRecurrenceStep {
            sequence: "P",
            index: n,
        });
    }
    Ok(p)
}

pub fn clf_s(n: usize) -> Result<BigInt> {
    S_CACHE.get(n)
}

/// Franel number `f_n = Σ C(n,k)^3`, produced by its three-term recurrence
/// `(n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}`.
pub fn franel(n: usize) -> Result<BigInt> {
    F_CACHE.get(n)
}
