//! Exact rationals shared by the charge maps and the parameter walls.

use num_rational::Ratio;
use num_traits::Zero;

pub type Rational = Ratio<i128>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v as i128)
}

/// `"p/q"`, or `"p"` when integral.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` with `q ≠ 0`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<i128>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<i128>().ok()?;
            let q = q.trim().parse::<i128>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

pub(crate) fn signum(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if *r > Rational::zero() {
        1
    } else {
        -1
    }
}

/// Serde adapter writing a rational as its `"p/q"` string.
pub mod as_string {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        super::parse(&s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}")))
    }
}

/// Serde adapter for a list of `"p/q"` strings.
pub mod vec_as_string {
    use super::Rational;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&super::format(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(de)?
            .iter()
            .map(|s| super::parse(s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in ["0", "-3", "1/2", "-7/4"] {
            assert_eq!(format(&parse(s).unwrap()), s);
        }
        assert_eq!(format(&parse("2/4").unwrap()), "1/2");
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
        assert_eq!(signum(&parse("-1/3").unwrap()), -1);
        assert_eq!(signum(&int(0)), 0);
    }

    #[test]
    fn serde_strings() {
        #[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
        struct W {
            #[serde(with = "as_string")]
            a: Rational,
            #[serde(with = "vec_as_string")]
            b: Vec<Rational>,
        }
        let w = W { a: parse("-3/4").unwrap(), b: vec![int(2), parse("1/2").unwrap()] };
        let j = serde_json::to_string(&w).unwrap();
        assert_eq!(j, r#"{"a":"-3/4","b":["2","1/2"]}"#);
        assert_eq!(serde_json::from_str::<W>(&j).unwrap(), w);
    }
}
