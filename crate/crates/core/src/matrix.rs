//! Square matrices indexed by the partitions of `n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};
use crate::ring::{PolyQT, RatQT};
use crate::symfun::{Basis, SymFun};

/// Entries `(λ, μ) ↦ K_λμ`; absent entries are zero. Rows and columns follow
/// the enumeration order of [`enumerate`].
#[derive(Clone, PartialEq, Debug)]
pub struct PartitionMatrix {
    pub n: usize,
    pub order: Vec<Partition>,
    entries: BTreeMap<(Partition, Partition), PolyQT>,
}

impl PartitionMatrix {
    pub fn zero(n: usize) -> Self {
        PartitionMatrix { n, order: enumerate(n), entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for p in m.order.clone() {
            m.set(p.clone(), p, PolyQT::one());
        }
        m
    }

    /// Matrix whose column `μ` holds the Schur coefficients of `columns[μ]`.
    pub fn from_columns(n: usize, columns: &BTreeMap<Partition, SymFun<PolyQT>>) -> Self {
        let mut m = Self::zero(n);
        for (mu, f) in columns {
            for (lam, c) in f.in_schur().terms() {
                m.set(lam.clone(), mu.clone(), c.clone());
            }
        }
        m
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> PolyQT {
        self.entries.get(&(lambda.clone(), mu.clone())).cloned().unwrap_or_else(PolyQT::zero)
    }

    pub fn set(&mut self, lambda: Partition, mu: Partition, c: PolyQT) {
        if c.is_zero() {
            self.entries.remove(&(lambda, mu));
        } else {
            self.entries.insert((lambda, mu), c);
        }
    }

    pub fn entries(&self) -> &BTreeMap<(Partition, Partition), PolyQT> {
        &self.entries
    }

    /// Column `μ` as the symmetric function `Σ_λ K_λμ s_λ`.
    pub fn column(&self, mu: &Partition) -> SymFun<PolyQT> {
        SymFun::from_terms(
            Basis::S,
            self.entries.iter().filter(|((_, m), _)| m == mu).map(|((l, _), c)| (l.clone(), c.clone())),
        )
    }

    pub fn multiply(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for ((l, m), a) in &self.entries {
            for ((m2, r), b) in &o.entries {
                if m == m2 {
                    let v = &out.get(l, r) + &(a * b);
                    out.set(l.clone(), r.clone(), v);
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&PolyQT) -> Result<PolyQT>) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for ((l, m), c) in &self.entries {
            out.set(l.clone(), m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Entrywise specialization; fails if an entry leaves `Z[q,t]` Laurent.
    pub fn specialize(&self, q: &RatQT, t: &RatQT) -> Result<Self> {
        self.map(|c| {
            let r = crate::ring::specialize(c, q, t)?;
            r.to_poly().ok_or_else(|| Error::NonIntegral(r.to_string()))
        })
    }

    /// Upper unitriangular in enumeration order (dominance-compatible).
    pub fn is_unitriangular(&self) -> bool {
        let pos: BTreeMap<&Partition, usize> = self.order.iter().enumerate().map(|(i, p)| (p, i)).collect();
        self.order.iter().all(|p| self.get(p, p).is_one())
            && self.entries.keys().all(|(l, m)| pos[l] <= pos[m] && (l == m || l.dominates(m)))
    }

    /// Inverse of a unitriangular matrix by back-substitution.
    pub fn unitriangular_inverse(&self) -> Result<Self> {
        if !self.is_unitriangular() {
            return Err(Error::InverseNotPolynomial);
        }
        let d = self.order.len();
        let mut inv = Self::zero(self.n);
        for j in 0..d {
            inv.set(self.order[j].clone(), self.order[j].clone(), PolyQT::one());
            for i in (0..j).rev() {
                let mut s = PolyQT::zero();
                for m in i + 1..=j {
                    let a = self.get(&self.order[i], &self.order[m]);
                    if a.is_zero() {
                        continue;
                    }
                    s = &s + &(&a * &inv.get(&self.order[m], &self.order[j]));
                }
                inv.set(self.order[i].clone(), self.order[j].clone(), -s);
            }
        }
        Ok(inv)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.doc()).expect("serializable")
    }

    fn doc(&self) -> MatrixDoc {
        let mut entries = Vec::new();
        for mu in &self.order {
            for lam in &self.order {
                let c = self.get(lam, mu);
                if !c.is_zero() {
                    entries.push(EntryDoc { lambda: lam.clone(), mu: mu.clone(), coeff: c.to_string() });
                }
            }
        }
        MatrixDoc { n: self.n, order: self.order.clone(), entries }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: MatrixDoc = serde_json::from_str(s)?;
        let mut m = Self::zero(doc.n);
        if doc.order != m.order {
            return Err(Error::Parse { pos: 0, msg: "unexpected partition order".into() });
        }
        for e in doc.entries {
            m.set(e.lambda, e.mu, e.coeff.parse()?);
        }
        Ok(m)
    }

    /// CSV table: rows `λ`, columns `μ`, both in enumeration order.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["lambda\\mu".to_string()];
        header.extend(self.order.iter().map(|p| p.to_string()));
        w.write_record(&header).expect("in-memory write");
        for lam in &self.order {
            let mut row = vec![lam.to_string()];
            row.extend(self.order.iter().map(|mu| self.get(lam, mu).to_string()));
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

impl fmt::Display for PartitionMatrix {
    /// Plain text table.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = std::iter::once(
            std::iter::once(String::new()).chain(self.order.iter().map(|p| p.to_string())).collect(),
        )
        .chain(self.order.iter().map(|lam| {
            std::iter::once(lam.to_string()).chain(self.order.iter().map(|mu| self.get(lam, mu).to_string())).collect()
        }))
        .collect();
        let cols = self.order.len() + 1;
        let widths: Vec<usize> = (0..cols).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
        for row in &cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    lambda: Partition,
    mu: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    n: usize,
    order: Vec<Partition>,
    entries: Vec<EntryDoc>,
}
