use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use regex::Regex;

use super::{QuadraticIrrational, Sign, Theta};
use crate::error::{Error, Result};

fn poly_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^poly:\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*([+-])\s*$").unwrap())
}

fn surd_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    // (p + q*sqrt(N))/r; q may be omitted (meaning 1) and may carry its own sign
    RE.get_or_init(|| {
        Regex::new(
            r"^surd:\s*\(\s*([+-]?\d+)\s*([+-])\s*(?:([+-]?\d+)\s*\*\s*)?sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*([+-]?\d+)\s*$",
        )
        .unwrap()
    })
}

fn int(s: &str) -> BigInt {
    s.trim_start_matches('+').parse().expect("regex guarantees digits")
}

impl FromStr for QuadraticIrrational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(c) = poly_re().captures(s) {
            let branch = if &c[4] == "+" { Sign::Plus } else { Sign::Minus };
            return QuadraticIrrational::normalize(int(&c[1]), int(&c[2]), int(&c[3]), branch);
        }
        if let Some(c) = surd_re().captures(s) {
            let mut q = c.get(3).map_or_else(|| BigInt::from(1), |m| int(m.as_str()));
            if &c[2] == "-" {
                q = -q;
            }
            return QuadraticIrrational::from_surd(int(&c[1]), q, int(&c[4]), int(&c[5]));
        }
        Err(Error::Parse(s.to_string()))
    }
}

impl FromStr for Theta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "nonquadratic" {
            return Ok(Theta::NonQuadratic);
        }
        s.parse().map(Theta::Quadratic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64, l: i64, m: i64, s: Sign) -> QuadraticIrrational {
        QuadraticIrrational::from_i64(k, l, m, s).unwrap()
    }

    #[test]
    fn poly_specs() {
        assert_eq!("poly:5,-5,1,+".parse::<QuadraticIrrational>().unwrap(), q(5, -5, 1, Sign::Plus));
        assert_eq!("poly: 100, -100, 20, +".parse::<QuadraticIrrational>().unwrap(), q(5, -5, 1, Sign::Plus));
        assert_eq!("poly:-1,0,3,-".parse::<QuadraticIrrational>().unwrap(), q(1, 0, -3, Sign::Plus));
    }

    #[test]
    fn surd_specs() {
        let p = |s: &str| s.parse::<QuadraticIrrational>().unwrap();
        assert_eq!(p("surd:(5+1*sqrt(5))/10"), q(5, -5, 1, Sign::Plus));
        assert_eq!(p("surd:(5+sqrt(5))/10"), q(5, -5, 1, Sign::Plus));
        assert_eq!(p("surd:(-5+1*sqrt(65))/10"), q(5, 5, -2, Sign::Plus));
        assert_eq!(p("surd:(-25+5*sqrt(65))/10"), q(5, 5, -2, Sign::Plus).scale(&5.into()));
        assert_eq!(p("surd:(3-sqrt(3))/6"), q(6, -6, 1, Sign::Minus));
        assert_eq!(p("surd:(0+-1*sqrt(3))/-1"), q(1, 0, -3, Sign::Plus));
    }

    #[test]
    fn spec_round_trip() {
        for x in [q(5, -5, 1, Sign::Plus), q(6, -6, 1, Sign::Minus), q(7, 3, -11, Sign::Plus)] {
            assert_eq!(x.to_string().parse::<QuadraticIrrational>().unwrap(), x);
            assert_eq!(x.to_surd_spec().parse::<QuadraticIrrational>().unwrap(), x);
        }
    }

    #[test]
    fn theta_marker_and_errors() {
        assert_eq!("nonquadratic".parse::<Theta>().unwrap(), Theta::NonQuadratic);
        assert!(matches!("poly:5,-5,1".parse::<Theta>(), Err(Error::Parse(_))));
        assert!(matches!("surd:(1+sqrt(4))/2".parse::<Theta>(), Err(Error::DegenerateInput(_))));
        assert!(matches!("surd:(1+sqrt(5))/0".parse::<Theta>(), Err(Error::DegenerateInput(_))));
        assert!(matches!("pi".parse::<Theta>(), Err(Error::Parse(_))));
    }
}
