//! Affine subscript expressions such as `3k+3i-1`.
//!
//! Recognizer tables and witness claims name vertices by expressions in the
//! residue parameter `k` (from `n = 6k + r`) and a row parameter `i`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubscriptExpr {
    pub k: i64,
    pub i: i64,
    pub c: i64,
}

impl SubscriptExpr {
    pub const fn new(k: i64, i: i64, c: i64) -> Self {
        Self { k, i, c }
    }

    pub const fn constant(c: i64) -> Self {
        Self { k: 0, i: 0, c }
    }

    pub fn eval(&self, k: i64, i: i64) -> i64 {
        self.k * k + self.i * i + self.c
    }

    pub fn uses_row_param(&self) -> bool {
        self.i != 0
    }
}

impl FromStr for SubscriptExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || Error::Parse { what: "subscript expression", input: s.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut expr = SubscriptExpr::default();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let sign = match rest.as_bytes()[0] {
                b'+' => {
                    rest = &rest[1..];
                    1
                }
                b'-' => {
                    rest = &rest[1..];
                    -1
                }
                _ if first => 1,
                _ => return Err(err()),
            };
            first = false;
            let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
            let coef = if digits == 0 { None } else { Some(rest[..digits].parse::<i64>().map_err(|_| err())?) };
            rest = &rest[digits..];
            match rest.as_bytes().first() {
                Some(b'k') => {
                    expr.k += sign * coef.unwrap_or(1);
                    rest = &rest[1..];
                }
                Some(b'i') => {
                    expr.i += sign * coef.unwrap_or(1);
                    rest = &rest[1..];
                }
                _ => expr.c += sign * coef.ok_or_else(err)?,
            }
        }
        Ok(expr)
    }
}

impl fmt::Display for SubscriptExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coef, sym) in [(self.k, "k"), (self.i, "i")] {
            if coef == 0 {
                continue;
            }
            if wrote && coef > 0 {
                f.write_str("+")?;
            }
            match coef {
                1 => {}
                -1 => f.write_str("-")?,
                c => write!(f, "{c}")?,
            }
            f.write_str(sym)?;
            wrote = true;
        }
        if self.c != 0 || !wrote {
            if wrote && self.c > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", self.c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_table_notation() {
        let e: SubscriptExpr = "3k+3i-1".parse().unwrap();
        assert_eq!(e, SubscriptExpr::new(3, 3, -1));
        assert_eq!(e.eval(6, 1), 20);
        assert_eq!("6k".parse::<SubscriptExpr>().unwrap(), SubscriptExpr::new(6, 0, 0));
        assert_eq!("k".parse::<SubscriptExpr>().unwrap(), SubscriptExpr::new(1, 0, 0));
        assert_eq!("2".parse::<SubscriptExpr>().unwrap(), SubscriptExpr::constant(2));
        assert_eq!("-i+4".parse::<SubscriptExpr>().unwrap(), SubscriptExpr::new(0, -1, 4));
        assert_eq!("2k - i + 3".parse::<SubscriptExpr>().unwrap(), SubscriptExpr::new(2, -1, 3));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "3x", "k+", "++1", "3k3"] {
            assert!(bad.parse::<SubscriptExpr>().is_err(), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn display_round_trips(k in -12i64..12, i in -12i64..12, c in -40i64..40) {
            let e = SubscriptExpr::new(k, i, c);
            prop_assert_eq!(e.to_string().parse::<SubscriptExpr>().unwrap(), e);
        }
    }
}
