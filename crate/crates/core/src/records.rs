//! JSON-lines records written by the command line tool, and their decoders.
//!
//! Integers that can outgrow 64 bits (degrees, Pell values) are decimal
//! strings. Weight coordinates are JSON numbers when they fit in a `u64` and
//! decimal strings otherwise.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::dimension::{Degree, DominantWeight};
use crate::error::{Error, Result};
use crate::families::FamilyWitness;
use crate::pell::StarSolution;
use crate::rootdata::{CorootVector, LieType};
use crate::search::CoincidenceGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Num(u64),
    Str(String),
}

impl From<&BigUint> for Coord {
    fn from(v: &BigUint) -> Coord {
        match u64::try_from(v) {
            Ok(n) => Coord::Num(n),
            Err(_) => Coord::Str(v.to_string()),
        }
    }
}

fn decimal(s: &str, what: &str) -> Result<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Record(format!("{what} `{s}` is not a decimal integer")));
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
        .ok_or_else(|| Error::Record(format!("{what} `{s}` is not a decimal integer")))
}

impl Coord {
    pub fn to_biguint(&self) -> Result<BigUint> {
        match self {
            Coord::Num(n) => Ok(BigUint::from(*n)),
            Coord::Str(s) => decimal(s, "coordinate"),
        }
    }
}

fn encode_weight(w: &DominantWeight) -> Vec<Coord> {
    w.coords().iter().map(Coord::from).collect()
}

fn decode_weight(coords: &[Coord]) -> Result<DominantWeight> {
    Ok(DominantWeight::new(
        coords.iter().map(Coord::to_biguint).collect::<Result<_>>()?,
    ))
}

fn decode_degree(s: &str) -> Result<Degree> {
    Degree::new(decimal(s, "degree")?).map_err(|_| Error::Record("degree must be ≥ 1".into()))
}

fn parse_json<'a, T: Deserialize<'a>>(line: &'a str) -> Result<T> {
    serde_json::from_str(line).map_err(|e| Error::Record(e.to_string()))
}

fn to_line<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("records serialize infallibly")
}

/// `{"type":"C3","coroot":[1,2,2]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorootRecord {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub coroot: Vec<u8>,
}

impl CorootRecord {
    pub fn new(t: LieType, c: &CorootVector) -> CorootRecord {
        CorootRecord {
            lie_type: t.to_string(),
            coroot: c.coords().to_vec(),
        }
    }

    pub fn to_line(&self) -> String {
        to_line(self)
    }

    pub fn decode(line: &str) -> Result<(LieType, CorootVector)> {
        let r: CorootRecord = parse_json(line)?;
        let t: LieType = r.lie_type.parse()?;
        if r.coroot.len() != t.rank() {
            return Err(Error::Record(format!(
                "coroot of length {} for {t}",
                r.coroot.len()
            )));
        }
        Ok((t, CorootVector::new(r.coroot)?))
    }
}

/// `{"degree":"15","weights":[[0,4],[1,2]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRecord {
    pub degree: String,
    pub weights: Vec<Vec<Coord>>,
}

impl GroupRecord {
    pub fn new(g: &CoincidenceGroup) -> GroupRecord {
        GroupRecord {
            degree: g.degree.to_string(),
            weights: g.weights.iter().map(encode_weight).collect(),
        }
    }

    pub fn to_line(&self) -> String {
        to_line(self)
    }

    pub fn decode(line: &str) -> Result<CoincidenceGroup> {
        let r: GroupRecord = parse_json(line)?;
        let degree = decode_degree(&r.degree)?;
        let weights: Vec<DominantWeight> =
            r.weights.iter().map(|w| decode_weight(w)).collect::<Result<_>>()?;
        if weights.len() < 2 {
            return Err(Error::Record("a group has at least two weights".into()));
        }
        if weights.iter().any(|w| w.len() != weights[0].len()) {
            return Err(Error::Record("weights of different lengths".into()));
        }
        Ok(CoincidenceGroup { degree, weights })
    }
}

/// `{"type":"C3","lambda":[9,5,0],"mu":[7,6,0],"degree":"548352"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub lambda: Vec<Coord>,
    pub mu: Vec<Coord>,
    pub degree: String,
}

impl WitnessRecord {
    pub fn new(w: &FamilyWitness) -> WitnessRecord {
        WitnessRecord {
            lie_type: w.lie_type.to_string(),
            lambda: encode_weight(&w.lambda),
            mu: encode_weight(&w.mu),
            degree: w.degree.to_string(),
        }
    }

    pub fn to_line(&self) -> String {
        to_line(self)
    }

    /// Structural decoding only; the degrees are not recomputed.
    pub fn decode(line: &str) -> Result<FamilyWitness> {
        let r: WitnessRecord = parse_json(line)?;
        let lie_type: LieType = r.lie_type.parse()?;
        let lambda = decode_weight(&r.lambda)?;
        let mu = decode_weight(&r.mu)?;
        lambda.check_rank(lie_type.rank())?;
        mu.check_rank(lie_type.rank())?;
        Ok(FamilyWitness {
            lie_type,
            lambda,
            mu,
            degree: decode_degree(&r.degree)?,
        })
    }
}

/// `{"l":159,"c":"…","a":"…","b":"…"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarRecord {
    pub l: u64,
    pub c: String,
    pub a: String,
    pub b: String,
}

impl StarRecord {
    pub fn new(s: &StarSolution) -> StarRecord {
        StarRecord {
            l: s.l(),
            c: s.c().to_string(),
            a: s.a().to_string(),
            b: s.b().to_string(),
        }
    }

    pub fn to_line(&self) -> String {
        to_line(self)
    }

    /// Re-validates the equation and recomputes `b`.
    pub fn decode(line: &str) -> Result<StarSolution> {
        let r: StarRecord = parse_json(line)?;
        let s = StarSolution::new(r.l, decimal(&r.c, "c")?, decimal(&r.a, "a")?)?;
        if s.b() != &decimal(&r.b, "b")? {
            return Err(Error::Record(format!("b should be {}", s.b())));
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_c;
    use crate::pell::star_solutions;
    use proptest::prelude::*;

    #[test]
    fn documented_shapes() {
        let t: LieType = "C3".parse().unwrap();
        let c = CorootVector::new(vec![1, 2, 2]).unwrap();
        assert_eq!(CorootRecord::new(t, &c).to_line(), r#"{"type":"C3","coroot":[1,2,2]}"#);

        let g = CoincidenceGroup {
            degree: Degree::from(15),
            weights: vec![DominantWeight::from_u64s(&[0, 4]), DominantWeight::from_u64s(&[1, 2])],
        };
        assert_eq!(GroupRecord::new(&g).to_line(), r#"{"degree":"15","weights":[[0,4],[1,2]]}"#);

        let w = &family_c(3, 1).unwrap()[0];
        assert_eq!(
            WitnessRecord::new(w).to_line(),
            r#"{"type":"C3","lambda":[9,5,0],"mu":[7,6,0],"degree":"548352"}"#
        );
        let s = &star_solutions(3, 1).unwrap()[0];
        assert_eq!(StarRecord::new(s).to_line(), r#"{"l":3,"c":"24","a":"9","b":"5"}"#);
    }

    #[test]
    fn big_coordinates_become_strings() {
        let w = &family_c(159, 1).unwrap()[0];
        let line = WitnessRecord::new(w).to_line();
        assert!(line.starts_with(r#"{"type":"C159","lambda":["613975804336172576474505","7404460209629201092363289",0,"#));
        assert_eq!(&WitnessRecord::decode(&line).unwrap(), w);
    }

    #[test]
    fn decoders_reject_garbage() {
        assert!(CorootRecord::decode(r#"{"type":"C3","coroot":[1,2]}"#).is_err());
        assert!(CorootRecord::decode(r#"{"type":"C3","coroot":[0,0,0]}"#).is_err());
        assert!(CorootRecord::decode(r#"{"type":"D3","coroot":[1,0,0]}"#).is_err());
        assert!(GroupRecord::decode(r#"{"degree":"0","weights":[[1],[2]]}"#).is_err());
        assert!(GroupRecord::decode(r#"{"degree":"5","weights":[[1]]}"#).is_err());
        assert!(GroupRecord::decode(r#"{"degree":"5","weights":[[1],[2,3]]}"#).is_err());
        assert!(GroupRecord::decode(r#"{"degree":"-5","weights":[[1],[2]]}"#).is_err());
        assert!(GroupRecord::decode(r#"{"degree":"5","weights":[["x"],[2]]}"#).is_err());
        assert!(WitnessRecord::decode(r#"{"type":"A3","lambda":[0,2],"mu":[1,1,0],"degree":"20"}"#).is_err());
        assert!(StarRecord::decode(r#"{"l":3,"c":"24","a":"9","b":"6"}"#).is_err());
        assert!(StarRecord::decode(r#"{"l":3,"c":"25","a":"9","b":"5"}"#).is_err());
        assert!(StarRecord::decode(r#"{"l":3,"c":"24","a":"9","b":"5","x":1}"#).is_err());
        assert!(StarRecord::decode("not json").is_err());
    }

    proptest! {
        #[test]
        fn group_records_round_trip(
            degree in 1u64..,
            weights in prop::collection::vec(prop::collection::vec(any::<u64>(), 3), 2..5),
            big_extra in "[1-9][0-9]{20,40}",
        ) {
            let mut ws: Vec<DominantWeight> = weights.iter().map(|w| DominantWeight::from_u64s(w)).collect();
            let mut coords = ws[0].coords().to_vec();
            coords[0] = BigUint::parse_bytes(big_extra.as_bytes(), 10).unwrap();
            ws.push(DominantWeight::new(coords));
            let g = CoincidenceGroup { degree: Degree::from(degree), weights: ws };
            let line = GroupRecord::new(&g).to_line();
            prop_assert_eq!(GroupRecord::decode(&line).unwrap(), g);
        }
    }
}
