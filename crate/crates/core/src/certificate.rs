//! Certificates: everything known about one series, as JSON or text.
//!
//! A certificate is re-checkable. Its annihilator and seed are enough to
//! rebuild the series, and [`Certificate::recheck`] does exactly that and
//! compares the resulting classification and value.

use serde::{Deserialize, Serialize};

use crate::addsum::{self, Classification, SumResult};
use crate::algseries::{self, AlgebraicSeries};
use crate::error::{Error, Result};
use crate::expr;
use crate::scalar::Field;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub input: String,
    pub field: String,
    pub annihilator: Option<String>,
    pub stripped_power: Option<usize>,
    pub scalar_poly: Option<String>,
    pub class: String,
    pub sum_degree: Option<usize>,
    pub scalar_degree: Option<usize>,
    pub univalent: Option<bool>,
    pub root: Option<String>,
    pub multiplicity: Option<usize>,
    pub absolutely_algebraic: Option<bool>,
    pub practically_zero: Option<bool>,
    pub minimality: Option<String>,
    pub value: Option<String>,
    pub status: String,
    pub order: usize,
    pub seed: Option<Vec<String>>,
    pub ambiguous: Option<bool>,
}

fn fill(input: &str, field: Field, order: usize, c: &Classification, r: &SumResult) -> Certificate {
    Certificate {
        input: input.to_string(),
        field: field.to_string(),
        annihilator: None,
        stripped_power: None,
        scalar_poly: c.scalar_poly.as_ref().map(ToString::to_string),
        class: c.class.to_string(),
        sum_degree: c.sum_degree,
        scalar_degree: c.scalar_degree,
        univalent: c.scalar_poly.as_ref().map(|_| c.univalent.is_some()),
        root: c.univalent.as_ref().map(|(r, _)| r.to_string()),
        multiplicity: c.univalent.as_ref().map(|(_, m)| *m),
        absolutely_algebraic: c.absolutely_algebraic,
        practically_zero: c.practically_zero,
        minimality: c.minimality.map(|m| m.to_string()),
        value: r.value.as_ref().map(ToString::to_string),
        status: r.status.to_string(),
        order,
        seed: None,
        ambiguous: None,
    }
}

impl Certificate {
    /// Certificate for an evaluated series; `input` is its canonical rendering.
    pub fn for_series(input: &str, a: &AlgebraicSeries) -> Certificate {
        let r = addsum::univalent_sum(a);
        let mut cert = fill(input, a.ann().field(), a.certified_order(), &r.classification, &r);
        cert.annihilator = Some(a.ann().to_string());
        cert.stripped_power = Some(a.stripped_power());
        cert.seed = Some(a.seed().coeffs().iter().map(ToString::to_string).collect());
        cert.ambiguous = Some(a.ambiguous());
        cert
    }

    /// Certificate for a stream on which no relation was found.
    pub fn no_relation(input: &str, field: Field, order: usize) -> Certificate {
        let c = Classification::no_relation();
        let r = SumResult { value: None, status: addsum::SumStatus::NoRelationKnown, classification: c.clone() };
        fill(input, field, order, &c, &r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Eval(format!("bad certificate: {e}")))
    }

    /// Rebuilds the series from annihilator and seed, to `order` coefficients.
    pub fn rebuild(&self, order: usize) -> Result<AlgebraicSeries> {
        let field = Field::parse(&self.field)?;
        let (Some(ann), Some(seed)) = (&self.annihilator, &self.seed) else {
            return Err(Error::Eval("certificate carries no annihilator".into()));
        };
        let p = expr::parse_annpoly(ann, field)?;
        let seed = seed.iter().map(|c| expr::parse_scalar(c, field)).collect::<Result<Vec<_>>>()?;
        algseries::make_algebraic(&p, &Series::new(field, seed), order)
    }

    /// Whether rebuilding reproduces the same classification and value.
    pub fn recheck(&self) -> Result<bool> {
        let rebuilt = self.rebuild(self.order)?;
        let again = Certificate::for_series(&self.input, &rebuilt);
        Ok(again.class == self.class
            && again.scalar_poly == self.scalar_poly
            && again.annihilator == self.annihilator
            && again.root == self.root
            && again.value == self.value
            && again.status == self.status
            && again.absolutely_algebraic == self.absolutely_algebraic)
    }

    /// Human-readable `key: value` lines, absent fields omitted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                out.push_str(&format!("{k:<21}{v}\n"));
            }
        };
        line("input", Some(self.input.clone()));
        line("field", Some(self.field.clone()));
        line("annihilator", self.annihilator.clone());
        line("stripped_power", self.stripped_power.map(|v| v.to_string()));
        line("scalar_poly", self.scalar_poly.clone());
        line("class", Some(self.class.clone()));
        line("sum_degree", self.sum_degree.map(|v| v.to_string()));
        line("scalar_degree", self.scalar_degree.map(|v| v.to_string()));
        line("univalent", self.univalent.map(|v| v.to_string()));
        line("root", self.root.clone());
        line("multiplicity", self.multiplicity.map(|v| v.to_string()));
        line("absolutely_algebraic", self.absolutely_algebraic.map(|v| v.to_string()));
        line("practically_zero", self.practically_zero.map(|v| v.to_string()));
        line("minimality", self.minimality.clone());
        line("value", self.value.clone());
        line("status", Some(self.status.clone()));
        line("order", Some(self.order.to_string()));
        line("seed", self.seed.as_ref().map(|s| s.join(", ")));
        line("ambiguous", self.ambiguous.map(|v| v.to_string()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{evaluate_str, Config};

    #[test]
    fn grandi_certificate() {
        let g = evaluate_str("rat(1-s; 1-s^2)", &Config::default()).unwrap();
        let c = Certificate::for_series("rat(1-s; 1-s^2)", &g);
        assert_eq!(c.annihilator.as_deref(), Some("(1+s)*T - 1"));
        assert_eq!(c.stripped_power, Some(1));
        assert_eq!(c.scalar_poly.as_deref(), Some("t - 1/2"));
        assert_eq!(c.value.as_deref(), Some("1/2"));
        assert_eq!(c.status, "Summed");
        assert_eq!(c.order, 64);
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert!(back.recheck().unwrap());
    }

    #[test]
    fn json_field_names() {
        let g = evaluate_str("geom(1)", &Config::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&Certificate::for_series("geom(1)", &g).to_json()).unwrap();
        for k in [
            "input", "annihilator", "stripped_power", "scalar_poly", "class", "sum_degree", "scalar_degree",
            "univalent", "root", "multiplicity", "absolutely_algebraic", "practically_zero", "minimality", "value",
            "order",
        ] {
            assert!(v.get(k).is_some(), "missing {k}");
        }
        assert_eq!(v["class"], "infinite");
        assert!(v["value"].is_null());
    }

    #[test]
    fn no_relation_certificate() {
        let c = Certificate::no_relation("stream.txt", Field::Rationals, 40);
        assert_eq!(c.class, "no_relation_known");
        assert_eq!(c.status, "NoRelationKnown");
        assert!(c.recheck().is_err());
    }
}
