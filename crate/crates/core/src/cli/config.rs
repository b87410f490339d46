use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::degree::{DegreeFunction, Kind};
use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::oracle::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum Ideal {
    #[value(name = "J", alias = "j")]
    J,
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "generic")]
    Generic,
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ideal::J => "J",
            Ideal::I => "I",
            Ideal::Generic => "generic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Geometry,
    Closed,
    Taylor,
    Counting,
    Oracle,
    Generic,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Geometry => "geometry",
            Method::Closed => "closed",
            Method::Taylor => "taylor",
            Method::Counting => "counting",
            Method::Oracle => "oracle",
            Method::Generic => "generic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Output {
    #[default]
    Text,
    Json,
    Csv,
}

/// The object a command acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Phi(DegreeFunction),
    Divisor(DivisorClass),
}

/// A validated request for a Hilbert series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub phi: DegreeFunction,
    pub ideal: Ideal,
    pub method: Method,
    pub field: FieldSpec,
    pub max_degree: Option<u32>,
    pub output: Output,
}

impl RunConfig {
    /// Fills in the default method and rejects unsupported combinations.
    pub fn new(
        phi: DegreeFunction,
        ideal: Ideal,
        method: Option<Method>,
        field: FieldSpec,
        max_degree: Option<u32>,
        output: Output,
    ) -> Result<Self> {
        let method = method.unwrap_or(match ideal {
            Ideal::J => Method::Geometry,
            Ideal::I => Method::Taylor,
            Ideal::Generic => Method::Generic,
        });
        let ok = matches!(
            (ideal, method),
            (Ideal::J, Method::Geometry | Method::Closed | Method::Oracle)
                | (Ideal::I, Method::Taylor | Method::Counting | Method::Oracle)
                | (Ideal::Generic, Method::Generic)
        );
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "method `{method}` does not apply to ideal {ideal}"
            )));
        }
        if method == Method::Closed && phi.kind() == Kind::General {
            return Err(Error::UnsupportedClassification {
                op: "closed",
                kind: Kind::General,
            });
        }
        if method == Method::Geometry && phi.kind() == Kind::General && max_degree.is_none() {
            return Err(Error::InvalidArgument(format!(
                "phi={phi} is neither linear nor almost linear; pass --max-degree"
            )));
        }
        Ok(RunConfig {
            phi,
            ideal,
            method,
            field,
            max_degree,
            output,
        })
    }
}

/// Parses a comma separated list of integers, allowing spaces.
pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            i64::from_str(t.trim())
                .map_err(|_| Error::InvalidArgument(format!("`{t}` is not an integer in `{s}`")))
        })
        .collect()
}

pub fn parse_phi(s: &str) -> Result<DegreeFunction> {
    match parse_ints(s)?.as_slice() {
        &[a, b, c] => DegreeFunction::new(a, b, c),
        _ => Err(Error::InvalidArgument(format!(
            "--phi needs three values, got `{s}`"
        ))),
    }
}

pub fn parse_divisor(s: &str) -> Result<DivisorClass> {
    let v = parse_ints(s)?;
    let arr: [i64; 8] = v.try_into().map_err(|_| {
        Error::InvalidArgument(format!(
            "a divisor needs eight coefficients E0..E7, got `{s}`"
        ))
    })?;
    Ok(DivisorClass(arr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::classify;

    #[test]
    fn defaults_and_rejections() {
        let f = classify(5, 3, 1).unwrap();
        let q = FieldSpec::Rationals;
        let c = RunConfig::new(f, Ideal::J, None, q, None, Output::Text).unwrap();
        assert_eq!(c.method, Method::Geometry);
        let c = RunConfig::new(f, Ideal::I, None, q, None, Output::Text).unwrap();
        assert_eq!(c.method, Method::Taylor);
        assert!(RunConfig::new(f, Ideal::I, Some(Method::Closed), q, None, Output::Text).is_err());
        assert!(RunConfig::new(f, Ideal::J, Some(Method::Taylor), q, None, Output::Text).is_err());
        let g = classify(10, 5, 3).unwrap();
        assert!(RunConfig::new(g, Ideal::J, Some(Method::Closed), q, None, Output::Text).is_err());
        assert!(RunConfig::new(g, Ideal::J, None, q, None, Output::Text).is_err());
        assert!(RunConfig::new(g, Ideal::J, None, q, Some(30), Output::Text).is_ok());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_phi("5, 3,1").unwrap().phi, [5, 3, 1]);
        assert!(parse_phi("5,3").is_err());
        assert!(parse_phi("5,3,x").is_err());
        assert_eq!(parse_divisor("6,-2,-2,-2,-1,-1,-1,-4").unwrap().0[7], -4);
        assert!(parse_divisor("1,2,3").is_err());
    }
}
