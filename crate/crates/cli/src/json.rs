//! Canonical JSON renderings. Object keys come out sorted, polynomial
//! coefficients ascend by exponent, and `p_λ` terms follow the partition
//! order (size, then reverse lexicographic).

use chromabij::{IntPolynomial, MonomialMap, PSymFunc};
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

/// An exact integer, never rounded through `f64`.
pub fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

pub fn poly(p: &IntPolynomial) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(big).collect::<Vec<_>>() })
}

pub fn psym(f: &PSymFunc) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .map(|(lambda, c)| json!({ "partition": lambda.parts(), "coeff": big(c) }))
        .collect();
    json!({ "basis": "p", "terms": terms })
}

pub fn monomials(m: &MonomialMap) -> Value {
    let terms: Vec<Value> = m
        .terms()
        .iter()
        .map(|(e, c)| json!({ "exponents": e, "coeff": big(c) }))
        .collect();
    json!({ "basis": "monomial", "vars": m.vars(), "terms": terms })
}

/// Compact single-line output, or indented when `pretty`.
pub fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("serializable")
    } else {
        serde_json::to_string(v).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_shape() {
        let p = IntPolynomial::from_i64(&[0, -2, 5, -4, 1]);
        assert_eq!(render(&poly(&p), false), r#"{"coeffs":[0,-2,5,-4,1]}"#);
        assert_eq!(render(&poly(&IntPolynomial::zero()), false), r#"{"coeffs":[]}"#);
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(render(&big(&-huge), false), "-123456789012345678901234567890");
    }
}
