//! The algebra file format: JSON with exact coefficient strings, stable
//! under round trips. Omitted products are zero; coefficients parse in the
//! declared field ("3/4" or "5" over the rationals, integers mod p over a
//! prime field); parities are 0/1; the distinguished label is a string or
//! null.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use leibniz_core::algebra::{Algebra, BasisElement, Parity};
use leibniz_core::exactlin::{Field, Vector};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field spec {0:?} is not \"Q\" or {{\"GF\": p}}")]
    BadField(String),
    #[error("{0} is not a prime in the supported range")]
    BadModulus(u64),
    #[error("parity {0} of basis element {1:?} is not 0 or 1")]
    BadParity(u8, String),
    #[error("unknown basis name {0:?} in product {1}")]
    UnknownName(String, usize),
    #[error("cannot parse coefficient {0:?} in product {1}")]
    BadCoefficient(String, usize),
    #[error("basis problem: {0}")]
    Basis(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Name(String),
    Prime {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisSpec {
    pub name: String,
    pub label: String,
    pub parity: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Term {
    pub basis: String,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProductSpec {
    pub left: String,
    pub right: String,
    pub result: Vec<Term>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub basis: Vec<BasisSpec>,
    #[serde(default)]
    pub products: Vec<ProductSpec>,
    #[serde(default)]
    pub distinguished: Option<String>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<AlgebraFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("file model always serializes")
    }

    pub fn field(&self) -> Result<Field, FormatError> {
        match &self.field {
            FieldSpec::Name(n) if n == "Q" => Ok(Field::Rationals),
            FieldSpec::Name(n) => Err(FormatError::BadField(n.clone())),
            FieldSpec::Prime { gf } => Field::prime(*gf).map_err(|_| FormatError::BadModulus(*gf)),
        }
    }

    /// Resolves names and coefficients into an algebra. Grading and
    /// identity checks are the validator's job, not the parser's.
    pub fn to_algebra(&self) -> Result<Algebra, FormatError> {
        let field = self.field()?;
        let mut basis = Vec::with_capacity(self.basis.len());
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, b) in self.basis.iter().enumerate() {
            let parity = Parity::from_bit(b.parity)
                .ok_or_else(|| FormatError::BadParity(b.parity, b.name.clone()))?;
            basis.push(BasisElement::new(b.name.clone(), b.label.clone(), parity));
            index.insert(&b.name, i);
        }
        let mut products = BTreeMap::new();
        for (pi, p) in self.products.iter().enumerate() {
            let li = *index
                .get(p.left.as_str())
                .ok_or_else(|| FormatError::UnknownName(p.left.clone(), pi))?;
            let ri = *index
                .get(p.right.as_str())
                .ok_or_else(|| FormatError::UnknownName(p.right.clone(), pi))?;
            let mut w = Vector::zero(field, basis.len());
            for t in &p.result {
                let bi = *index
                    .get(t.basis.as_str())
                    .ok_or_else(|| FormatError::UnknownName(t.basis.clone(), pi))?;
                let c = field
                    .parse(&t.coeff)
                    .map_err(|_| FormatError::BadCoefficient(t.coeff.clone(), pi))?;
                w.set(bi, w.get(bi).add(&c));
            }
            if !w.is_zero() {
                products.insert((li, ri), w);
            }
        }
        Algebra::new(
            field,
            basis,
            products,
            self.distinguished.clone().map(Into::into),
        )
        .map_err(|e| FormatError::Basis(e.to_string()))
    }

    /// Canonical emission: products in basis-index order, result terms in
    /// basis order, zero terms dropped. Parsing the output reproduces the
    /// structure constants bit for bit.
    pub fn from_algebra(alg: &Algebra) -> AlgebraFile {
        let field = match alg.field() {
            Field::Rationals => FieldSpec::Name("Q".into()),
            Field::Prime(p) => FieldSpec::Prime { gf: p },
        };
        let basis = alg
            .basis()
            .iter()
            .map(|b| BasisSpec {
                name: b.name.clone(),
                label: b.label.to_string(),
                parity: b.parity.bit(),
            })
            .collect();
        let mut products = Vec::new();
        for (&(i, j), w) in alg.products() {
            let result: Vec<Term> = w
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| Term {
                    basis: alg.basis()[k].name.clone(),
                    coeff: c.to_string(),
                })
                .collect();
            products.push(ProductSpec {
                left: alg.basis()[i].name.clone(),
                right: alg.basis()[j].name.clone(),
                result,
            });
        }
        AlgebraFile {
            field,
            basis,
            products,
            distinguished: alg.distinguished().map(|l| l.to_string()),
        }
    }
}
