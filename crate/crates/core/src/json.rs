//! JSON forms of elements, tensors, pairings and indicator tables.
//!
//! Basis elements travel as their text rendering and coefficients as
//! strings, so the round trip is exact in every ring.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::element::{Basis, ModuleElement, Tensor};
use crate::error::{Error, Result};
use crate::indicators::Indicator;
use crate::inscriptions::Pairing;
use crate::ring::{Coefficient, RingMode};
use crate::words::Letter;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTerm {
    pub left: String,
    pub right: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisTerm {
    pub basis: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingEntry {
    pub a: String,
    pub b: String,
    pub coeff: String,
}

fn to_text<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain string records serialize")
}

fn from_text<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

pub fn element_to_json<B: Basis>(x: &ModuleElement<B>) -> String {
    let terms: Vec<BasisTerm> = x
        .iter()
        .map(|(b, c)| BasisTerm {
            basis: b.to_string(),
            coeff: c.to_string(),
        })
        .collect();
    to_text(&terms)
}

pub fn element_from_json<B>(text: &str, ring: RingMode) -> Result<ModuleElement<B>>
where
    B: Basis + FromStr<Err = Error>,
{
    let terms: Vec<BasisTerm> = from_text(text)?;
    let parsed = terms
        .into_iter()
        .map(|t| Ok((t.basis.parse()?, Coefficient::parse(&t.coeff, ring)?)))
        .collect::<Result<Vec<_>>>()?;
    ModuleElement::from_terms(ring, parsed)
}

pub fn tensor_to_json<A: Basis, B: Basis>(x: &ModuleElement<Tensor<A, B>>) -> String {
    let terms: Vec<TensorTerm> = x
        .iter()
        .map(|(Tensor(a, b), c)| TensorTerm {
            left: a.to_string(),
            right: b.to_string(),
            coeff: c.to_string(),
        })
        .collect();
    to_text(&terms)
}

pub fn tensor_from_json<A, B>(text: &str, ring: RingMode) -> Result<ModuleElement<Tensor<A, B>>>
where
    A: Basis + FromStr<Err = Error>,
    B: Basis + FromStr<Err = Error>,
{
    let terms: Vec<TensorTerm> = from_text(text)?;
    let parsed = terms
        .into_iter()
        .map(|t| Ok((Tensor(t.left.parse()?, t.right.parse()?), Coefficient::parse(&t.coeff, ring)?)))
        .collect::<Result<Vec<_>>>()?;
    ModuleElement::from_terms(ring, parsed)
}

/// Needs a finitely supported pairing.
pub fn pairing_to_json(mu: &Pairing) -> Result<String> {
    let entries: Vec<PairingEntry> = mu
        .support()?
        .into_iter()
        .map(|(a, b, c)| PairingEntry {
            a: a.to_string(),
            b: b.to_string(),
            coeff: c.to_string(),
        })
        .collect();
    Ok(to_text(&entries))
}

pub fn pairing_from_json(text: &str, ring: RingMode) -> Result<Pairing> {
    let entries: Vec<PairingEntry> = from_text(text)?;
    let parsed = entries
        .into_iter()
        .map(|e| Ok((Letter::new(&e.a)?, Letter::new(&e.b)?, Coefficient::parse(&e.coeff, ring)?)))
        .collect::<Result<Vec<_>>>()?;
    Pairing::from_table(ring, parsed)
}

/// A table indicator from `{basis, coeff}` records.
pub fn indicator_from_json<B>(text: &str, ring: RingMode) -> Result<Indicator<B>>
where
    B: Basis + FromStr<Err = Error>,
{
    let terms: Vec<BasisTerm> = from_text(text)?;
    let parsed = terms
        .into_iter()
        .map(|t| Ok((t.basis.parse()?, Coefficient::parse(&t.coeff, ring)?)))
        .collect::<Result<Vec<_>>>()?;
    Indicator::table(ring, parsed)
}
