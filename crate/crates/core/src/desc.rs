//! JSON ring descriptions, the interchange unit for files and the CLI.
//!
//! ```json
//! {"kind":"zn","n":12}
//! {"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":3}]}
//! {"kind":"poly_quotient","modulus":2,"poly":[0,0,1]}
//! {"kind":"table","n":2,"one":1,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]}
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Caps, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingDesc {
    Zn {
        n: usize,
    },
    Product {
        factors: Vec<RingDesc>,
    },
    PolyQuotient {
        modulus: usize,
        poly: Vec<i64>,
    },
    Table {
        n: usize,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    },
}

impl RingDesc {
    pub fn zn(n: usize) -> Self {
        RingDesc::Zn { n }
    }

    pub fn product(factors: Vec<RingDesc>) -> Self {
        RingDesc::Product { factors }
    }

    pub fn poly_quotient(modulus: usize, poly: Vec<i64>) -> Self {
        RingDesc::PolyQuotient { modulus, poly }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ring description serializes")
    }

    pub fn build(&self) -> Result<FiniteRing> {
        self.build_with_caps(&Caps::default())
    }

    pub fn build_with_caps(&self, caps: &Caps) -> Result<FiniteRing> {
        match self {
            RingDesc::Zn { n } => FiniteRing::zn_with_caps(*n, caps),
            RingDesc::Product { factors } => {
                let rings = factors
                    .iter()
                    .map(|f| f.build_with_caps(caps))
                    .collect::<Result<Vec<_>>>()?;
                FiniteRing::product_with_caps(&rings, caps)
            }
            RingDesc::PolyQuotient { modulus, poly } => {
                FiniteRing::poly_quotient_with_caps(*modulus, poly, caps)
            }
            RingDesc::Table { n, one, add, mul } => {
                FiniteRing::from_tables_with_caps(*n, add, mul, *one, caps)
            }
        }
    }
}

/// Short human name, e.g. `Z/2xZ/3` or `Z/2[x]/(x^2)`.
impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDesc::Zn { n } => write!(f, "Z/{n}"),
            RingDesc::Product { factors } => {
                for (i, r) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{r}")?;
                }
                Ok(())
            }
            RingDesc::PolyQuotient { modulus, poly } => {
                write!(f, "Z/{modulus}[x]/(")?;
                let mut first = true;
                for (deg, &c) in poly.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    let coeff = if c != 1 || deg == 0 {
                        c.to_string()
                    } else {
                        String::new()
                    };
                    match deg {
                        0 => write!(f, "{coeff}")?,
                        1 => write!(f, "{coeff}x")?,
                        _ => write!(f, "{coeff}x^{deg}")?,
                    }
                }
                write!(f, ")")
            }
            RingDesc::Table { n, .. } => write!(f, "table[{n}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let zn = RingDesc::from_json(r#"{"kind":"zn","n":12}"#).unwrap();
        assert_eq!(zn, RingDesc::zn(12));
        let prod = RingDesc::from_json(
            r#"{"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":3}]}"#,
        )
        .unwrap();
        assert_eq!(prod.build().unwrap().size(), 6);
        let pq =
            RingDesc::from_json(r#"{"kind":"poly_quotient","modulus":2,"poly":[0,0,1]}"#).unwrap();
        assert_eq!(pq.to_string(), "Z/2[x]/(x^2)");
        let table = RingDesc::from_json(
            r#"{"kind":"table","n":2,"one":1,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]}"#,
        )
        .unwrap();
        assert_eq!(table.build().unwrap(), FiniteRing::zn(2).unwrap());
    }

    #[test]
    fn rejects_unknown_keys_and_kinds() {
        assert!(RingDesc::from_json(r#"{"kind":"zn","n":12,"extra":1}"#).is_err());
        assert!(RingDesc::from_json(r#"{"kind":"field","q":4}"#).is_err());
        assert!(RingDesc::from_json(r#"{"n":12}"#).is_err());
    }

    #[test]
    fn display_names() {
        let d = RingDesc::product(vec![RingDesc::zn(2), RingDesc::zn(3)]);
        assert_eq!(d.to_string(), "Z/2xZ/3");
        assert_eq!(
            RingDesc::poly_quotient(2, vec![1, 1, 1]).to_string(),
            "Z/2[x]/(x^2+x+1)"
        );
    }
}
