//! JSON and CSV renderings. Big integers are written as decimal strings and
//! rationals as `{"num": .., "den": ..}` objects; field order is fixed.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::domination::DominationProfile;
use crate::poly::CoeffSeq;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        Self { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

pub fn rational_json(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn serialize_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    RationalJson::from(r).serialize(s)
}

pub fn serialize_coeffs<S: Serializer>(p: &CoeffSeq, s: S) -> Result<S::Ok, S::Error> {
    p.to_decimal_strings().serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileJson {
    pub n: usize,
    pub gamma: usize,
    pub d: Vec<String>,
    pub r: Vec<RationalJson>,
}

impl From<&DominationProfile> for ProfileJson {
    fn from(p: &DominationProfile) -> Self {
        Self {
            n: p.order(),
            gamma: p.gamma(),
            d: p.coeffs().iter().map(|c| c.to_string()).collect(),
            r: p.ratios().iter().map(RationalJson::from).collect(),
        }
    }
}

pub fn coeffs_json(p: &CoeffSeq) -> Value {
    json!(p.to_decimal_strings())
}

pub fn coeffs_csv(p: &CoeffSeq) -> String {
    let mut out = String::from("degree,coefficient\n");
    for (i, c) in p.normalized().iter().enumerate() {
        writeln!(out, "{i},{c}").expect("writing to a String");
    }
    out
}

pub fn profile_json(p: &DominationProfile) -> Value {
    serde_json::to_value(ProfileJson::from(p)).expect("plain data serializes")
}

pub fn profile_csv(p: &DominationProfile) -> String {
    let mut out = String::from("i,d_i,r_i_num,r_i_den\n");
    for (i, r) in p.ratios().iter().enumerate() {
        writeln!(out, "{i},{},{},{}", p.d(i), r.numer(), r.denom()).expect("writing to a String");
    }
    out
}
