//! JSON forms.  Rationals travel as "num/den" strings.

use a3z_exact::{parse_rational, Gaussian};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::expr::{ConstMonomial, ConstantExpression, Factor, Family, ShiftedCombination};

#[derive(Serialize, Deserialize)]
pub struct GaussianJson {
    pub re: String,
    pub im: String,
}

impl From<&Gaussian> for GaussianJson {
    fn from(g: &Gaussian) -> Self {
        GaussianJson { re: g.re.to_string(), im: g.im.to_string() }
    }
}

impl GaussianJson {
    pub fn to_gaussian(&self) -> Result<Gaussian, String> {
        let re = parse_rational(&self.re).map_err(|e| e.to_string())?;
        let im = parse_rational(&self.im).map_err(|e| e.to_string())?;
        Ok(Gaussian::new(re, im))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Family::parse(&s).ok_or_else(|| D::Error::custom(format!("unknown family {s:?}")))
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    family: Family,
    arg: u32,
}

#[derive(Serialize, Deserialize)]
struct ConstTermJson {
    coeff: GaussianJson,
    pi_pow: u32,
    factors: Vec<FactorJson>,
}

#[derive(Serialize, Deserialize)]
struct ConstJson {
    terms: Vec<ConstTermJson>,
}

impl Serialize for ConstantExpression {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| ConstTermJson {
                coeff: c.into(),
                pi_pow: m.pi_pow,
                factors: m.factors.iter().map(|f| FactorJson { family: f.family, arg: f.arg }).collect(),
            })
            .collect();
        ConstJson { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConstantExpression {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ConstJson::deserialize(d)?;
        let mut out = ConstantExpression::zero();
        for t in j.terms {
            let c = t.coeff.to_gaussian().map_err(D::Error::custom)?;
            let f = t.factors.into_iter().map(|f| Factor { arg: f.arg, family: f.family }).collect();
            out.add_term(ConstMonomial::new(t.pi_pow, f), &c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    pi_pow: u32,
    u_pow: u32,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct ShiftedTermJson {
    family: Family,
    shift: i64,
    coeff: Vec<CoeffJson>,
}

#[derive(Serialize, Deserialize)]
struct ShiftedJson {
    terms: Vec<ShiftedTermJson>,
}

impl Serialize for ShiftedCombination {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(&(shift, family), coef)| ShiftedTermJson {
                family,
                shift,
                coeff: coef
                    .ordered()
                    .into_iter()
                    .map(|(p, u, c)| CoeffJson { pi_pow: p, u_pow: u, re: c.re.to_string(), im: c.im.to_string() })
                    .collect(),
            })
            .collect();
        ShiftedJson { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShiftedCombination {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ShiftedJson::deserialize(d)?;
        let mut out = ShiftedCombination::zero();
        for t in j.terms {
            for c in t.coeff {
                let g = GaussianJson { re: c.re, im: c.im }.to_gaussian().map_err(D::Error::custom)?;
                out.add_term(t.family, t.shift, c.pi_pow, c.u_pow, &g);
            }
        }
        Ok(out)
    }
}
