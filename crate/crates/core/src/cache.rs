//! On-disk cache of computed matrices.
//!
//! Entries are the JSON documents of [`PartitionMatrix`]. A loaded entry is
//! re-verified before use; one that fails is recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::hall_littlewood::{charge_matrix, kostka_foulkes_matrix};
use crate::macdonald::{check_polynomiality, qt_kostka_matrix, qt_kostka_tilde_matrix};
use crate::matrix::PartitionMatrix;
use crate::ring::{PolyQT, RatQT};

pub const CACHE_ENV: &str = "SFQ_CACHE_DIR";
pub const DEFAULT_DIR: &str = ".sfq-cache";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    QtKostka,
    QtKostkaTilde,
    KostkaFoulkes,
}

impl Kind {
    fn stem(self) -> &'static str {
        match self {
            Kind::QtKostka => "qt-kostka",
            Kind::QtKostkaTilde => "qt-kostka-tilde",
            Kind::KostkaFoulkes => "kostka-foulkes",
        }
    }

    fn compute(self, n: usize) -> Result<PartitionMatrix> {
        match self {
            Kind::QtKostka => qt_kostka_matrix(n),
            Kind::QtKostkaTilde => qt_kostka_tilde_matrix(n),
            Kind::KostkaFoulkes => Ok(kostka_foulkes_matrix(n)?.0.clone()),
        }
    }

    /// Cheap independent checks: polynomial entries, the `q = 0` part against
    /// charge, and for the `q,t` matrices `K(1,1)` columns equal to standard
    /// tableau counts plus the `q ↔ t` duality symmetry.
    fn validate(self, n: usize, m: &PartitionMatrix) -> bool {
        if m.n != n || check_polynomiality(m).is_err() {
            return false;
        }
        let charge = charge_matrix(n);
        if self == Kind::KostkaFoulkes {
            return *m == charge;
        }
        let dual = m.order.iter().all(|mu| {
            m.order.iter().all(|lam| match self {
                Kind::QtKostka => m.get(&lam.conjugate(), &mu.conjugate()) == m.get(lam, mu).swap_qt(),
                _ => m.get(lam, &mu.conjugate()) == m.get(lam, mu).swap_qt(),
            })
        });
        if !dual {
            return false;
        }
        let one = RatQT::one();
        let Ok(at_one) = m.specialize(&one, &one) else { return false };
        let counts_ok = m.order.iter().all(|mu| {
            m.order.iter().all(|lam| at_one.get(lam, mu) == PolyQT::from_bigint(lam.standard_tableaux()))
        });
        if !counts_ok {
            return false;
        }
        let t = RatQT::from_poly(PolyQT::t());
        let expect = if self == Kind::QtKostka { charge } else { cocharge(&charge) };
        m.specialize(&RatQT::zero(), &t).map_or(false, |k0| k0 == expect)
    }
}

/// `t^{n(μ)} K_λμ(1/t)`.
fn cocharge(k: &PartitionMatrix) -> PartitionMatrix {
    let mut out = PartitionMatrix::zero(k.n);
    for ((lam, mu), c) in k.entries() {
        out.set(lam.clone(), mu.clone(), c.invert_t().shift(crate::ring::Mono::new(0, mu.n_stat() as i32)));
    }
    out
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

/// Where a lookup came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Computed,
    Cached,
    /// A cached entry failed re-verification and was replaced.
    Recomputed,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$SFQ_CACHE_DIR`, or `.sfq-cache/` in the working directory.
    pub fn from_env() -> Self {
        Self::new(std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_DIR)))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, kind: Kind, n: usize) -> PathBuf {
        self.dir.join(format!("{}-n{n}.json", kind.stem()))
    }

    pub fn get(&self, kind: Kind, n: usize) -> Result<(PartitionMatrix, Source)> {
        let path = self.path(kind, n);
        let mut source = Source::Computed;
        if let Ok(text) = fs::read_to_string(&path) {
            match PartitionMatrix::from_json(&text) {
                Ok(m) if kind.validate(n, &m) => return Ok((m, Source::Cached)),
                _ => source = Source::Recomputed,
            }
        }
        let m = kind.compute(n)?;
        fs::create_dir_all(&self.dir)?;
        fs::write(&path, m.to_json())?;
        Ok((m, source))
    }

    /// Cache files currently present, sorted.
    pub fn entries(&self) -> Result<Vec<PathBuf>> {
        let mut out = Vec::new();
        match fs::read_dir(&self.dir) {
            Ok(rd) => {
                for e in rd {
                    let p = e?.path();
                    if p.extension().is_some_and(|x| x == "json") {
                        out.push(p);
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        out.sort();
        Ok(out)
    }

    /// Removes every cache file; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries()?;
        for p in &entries {
            fs::remove_file(p)?;
        }
        Ok(entries.len())
    }
}

/// Computes without touching the disk.
pub fn compute(kind: Kind, n: usize) -> Result<PartitionMatrix> {
    kind.compute(n)
}

/// Uses `cache` when given.
pub fn matrix(cache: Option<&Cache>, kind: Kind, n: usize) -> Result<PartitionMatrix> {
    match cache {
        Some(c) => c.get(kind, n).map(|(m, _)| m),
        None => compute(kind, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hit_miss_and_repair() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        let (m, s) = c.get(Kind::QtKostka, 3).unwrap();
        assert_eq!(s, Source::Computed);
        let (m2, s2) = c.get(Kind::QtKostka, 3).unwrap();
        assert_eq!(s2, Source::Cached);
        assert_eq!(m, m2);
        // a tampered entry is detected and replaced
        let path = dir.path().join("qt-kostka-n3.json");
        let text = fs::read_to_string(&path).unwrap().replacen("\"q\"", "\"q^2\"", 1);
        fs::write(&path, text).unwrap();
        let (m3, s3) = c.get(Kind::QtKostka, 3).unwrap();
        assert_eq!(s3, Source::Recomputed);
        assert_eq!(m3, m);
        assert_eq!(c.entries().unwrap().len(), 1);
        assert_eq!(c.clear().unwrap(), 1);
        assert!(c.entries().unwrap().is_empty());
    }

    #[test]
    fn tilde_and_foulkes_validate() {
        for kind in [Kind::QtKostkaTilde, Kind::KostkaFoulkes] {
            let m = compute(kind, 4).unwrap();
            assert!(kind.validate(4, &m));
        }
    }
}
