//! Text specs for polynomials.
//!
//! A spec is a `+`-separated sum of terms; each term is a `*`-separated
//! product of factors. A factor is one of
//!
//! - a rational literal (`3`, `-1/2`),
//! - `x` or `x^k`,
//! - `t`, bound to a caller-supplied value,
//! - a named family: `Z:m=5,tau=1/2`, `Zsum:m=5,tau=1/2`, `U:n=7`, `W4:n=7`,
//!   `Zsum-U:m=4`, `Zsum-W4:m=4`.
//!
//! So `1/2 + -3*x^2` and `W4:n=2 + t*W4:n=1` are both valid.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{chebyshev_u, chebyshev_w4, u_sum, w4_sum, z_poly, z_sum, UniPoly};
use crate::rational::{int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolySpecError {
    #[error("empty polynomial spec")]
    Empty,
    #[error("cannot parse factor `{0}`")]
    BadFactor(String),
    #[error("unknown polynomial family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` is missing parameter `{param}`")]
    MissingParam { family: String, param: &'static str },
    #[error("bad parameter `{0}`")]
    BadParam(String),
    #[error("spec uses `t` but no value for t was given")]
    UnboundT,
}

pub fn parse_poly_spec(text: &str, t: Option<&Rational>) -> Result<UniPoly, PolySpecError> {
    if text.trim().is_empty() {
        return Err(PolySpecError::Empty);
    }
    let mut total = UniPoly::zero();
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(PolySpecError::BadFactor(text.to_string()));
        }
        let mut product = UniPoly::one();
        for factor in term.split('*') {
            product = &product * &parse_factor(factor.trim(), t)?;
        }
        total = &total + &product;
    }
    Ok(total)
}

fn parse_factor(factor: &str, t: Option<&Rational>) -> Result<UniPoly, PolySpecError> {
    if factor == "x" {
        return Ok(UniPoly::x());
    }
    if let Some(exp) = factor.strip_prefix("x^") {
        let k: usize = exp
            .trim()
            .parse()
            .map_err(|_| PolySpecError::BadFactor(factor.to_string()))?;
        return Ok(UniPoly::monomial(int(1), k));
    }
    if factor == "t" {
        return t.cloned().map(UniPoly::constant).ok_or(PolySpecError::UnboundT);
    }
    if let Some((name, params)) = factor.split_once(':') {
        return parse_family(name.trim(), params);
    }
    parse_rational(factor)
        .map(UniPoly::constant)
        .map_err(|_| PolySpecError::BadFactor(factor.to_string()))
}

fn parse_family(name: &str, params: &str) -> Result<UniPoly, PolySpecError> {
    let mut map = BTreeMap::new();
    for kv in params.split(',') {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| PolySpecError::BadParam(kv.trim().to_string()))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    let index = |keys: &[&'static str]| -> Result<usize, PolySpecError> {
        let Some(raw) = keys.iter().find_map(|k| map.get(*k)) else {
            return Err(PolySpecError::MissingParam { family: name.to_string(), param: keys[0] });
        };
        raw.parse().map_err(|_| PolySpecError::BadParam(raw.clone()))
    };
    let tau = || -> Result<Rational, PolySpecError> {
        let raw = map.get("tau").ok_or(PolySpecError::MissingParam {
            family: name.to_string(),
            param: "tau",
        })?;
        parse_rational(raw).map_err(|_| PolySpecError::BadParam(raw.clone()))
    };
    match name {
        "Z" => Ok(z_poly(index(&["m", "k", "n"])?, &tau()?)),
        "Zsum" => Ok(z_sum(index(&["m"])?, &tau()?)),
        "U" => Ok(chebyshev_u(index(&["n", "m", "k"])?)),
        "W4" => Ok(chebyshev_w4(index(&["n", "m", "k"])?)),
        "Zsum-U" | "Usum" => Ok(u_sum(index(&["m"])?)),
        "Zsum-W4" | "W4sum" => Ok(w4_sum(index(&["m"])?)),
        other => Err(PolySpecError::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn plain_polynomials() {
        assert_eq!(
            parse_poly_spec("1/2 + -3*x^2", None).unwrap(),
            UniPoly::new(vec![ratio(1, 2), int(0), int(-3)])
        );
        assert_eq!(parse_poly_spec("x*x + 2*x", None).unwrap(), UniPoly::from_i64(&[0, 2, 1]));
    }

    #[test]
    fn display_output_parses_back() {
        let p = UniPoly::new(vec![ratio(-7, 3), int(0), int(1), ratio(1, 5)]);
        assert_eq!(parse_poly_spec(&p.to_string(), None).unwrap(), p);
        assert_eq!(parse_poly_spec("0", None).unwrap(), UniPoly::zero());
    }

    #[test]
    fn named_families() {
        assert_eq!(parse_poly_spec("Z:m=2,tau=1", None).unwrap(), UniPoly::from_i64(&[1, -3, 1]));
        assert_eq!(parse_poly_spec("W4:n=2", None).unwrap(), chebyshev_w4(2));
        assert_eq!(parse_poly_spec("U:n=7", None).unwrap(), chebyshev_u(7));
        assert_eq!(parse_poly_spec("Zsum:m=5,tau=1/2", None).unwrap(), z_sum(5, &ratio(1, 2)));
        assert_eq!(parse_poly_spec("Zsum-W4:m=2", None).unwrap(), UniPoly::from_i64(&[2, 2]));
    }

    #[test]
    fn t_binding() {
        let t = int(3);
        assert_eq!(
            parse_poly_spec("W4:n=2 + t*W4:n=1", Some(&t)).unwrap(),
            UniPoly::from_i64(&[2, 8, 4])
        );
        assert_eq!(parse_poly_spec("t*x", None), Err(PolySpecError::UnboundT));
    }

    #[test]
    fn malformed_specs() {
        assert_eq!(parse_poly_spec("", None), Err(PolySpecError::Empty));
        assert!(matches!(parse_poly_spec("1 + + 2", None), Err(PolySpecError::BadFactor(_))));
        assert!(matches!(parse_poly_spec("y^2", None), Err(PolySpecError::BadFactor(_))));
        assert!(matches!(parse_poly_spec("V:n=2", None), Err(PolySpecError::UnknownFamily(_))));
        assert!(matches!(parse_poly_spec("Z:m=2", None), Err(PolySpecError::MissingParam { .. })));
        assert!(matches!(parse_poly_spec("Z:m=two,tau=1", None), Err(PolySpecError::BadParam(_))));
        assert!(matches!(parse_poly_spec("0.5*x", None), Err(PolySpecError::BadFactor(_))));
    }
}
