use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::AqcError;

/// One monomial `coeff · x₁^e₁ ⋯ x_k^e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i64,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyDoc {
    vars: usize,
    terms: Vec<(i64, Vec<u32>)>,
}

/// Integer polynomial evaluated over natural numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantinePolynomial {
    num_vars: usize,
    terms: Vec<Term>,
}

impl DiophantinePolynomial {
    /// Validate and canonicalize: terms sorted by exponent vector,
    /// zero coefficients dropped.
    pub fn new(num_vars: usize, terms: Vec<(i64, Vec<u32>)>) -> Result<Self, AqcError> {
        if num_vars == 0 {
            return Err(AqcError::Validation("a polynomial needs at least one variable".into()));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (coeff, exponents) in terms {
            if exponents.len() != num_vars {
                return Err(AqcError::Validation(format!(
                    "exponent vector {exponents:?} has length {}, expected {num_vars}",
                    exponents.len()
                )));
            }
            if !seen.insert(exponents.clone()) {
                return Err(AqcError::Validation(format!("duplicate exponent vector {exponents:?}")));
            }
            if coeff != 0 {
                out.push(Term { coeff, exponents });
            }
        }
        out.sort_by(|a, b| b.exponents.cmp(&a.exponents));
        Ok(DiophantinePolynomial { num_vars, terms: out })
    }

    pub fn from_json(text: &str) -> Result<Self, AqcError> {
        let doc: PolyDoc = serde_json::from_str(text).map_err(|e| AqcError::Document(e.to_string()))?;
        Self::new(doc.vars, doc.terms)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// `D(x)` exactly, or an overflow error.
    pub fn eval(&self, x: &[u64]) -> Result<i128, AqcError> {
        if x.len() != self.num_vars {
            return Err(AqcError::Shape(format!("{} values for {} variables", x.len(), self.num_vars)));
        }
        let overflow = || AqcError::Overflow(format!("D{x:?} does not fit in 128 bits"));
        let mut acc: i128 = 0;
        for t in &self.terms {
            let mut m = t.coeff as i128;
            for (&xi, &e) in x.iter().zip(&t.exponents) {
                let p = (xi as i128).checked_pow(e).ok_or_else(overflow)?;
                m = m.checked_mul(p).ok_or_else(overflow)?;
            }
            acc = acc.checked_add(m).ok_or_else(overflow)?;
        }
        Ok(acc)
    }

    /// `D(x)²`, the problem Hamiltonian's eigenvalue at `x`.
    pub fn energy(&self, x: &[u64]) -> Result<u128, AqcError> {
        let d = self.eval(x)?.unsigned_abs();
        d.checked_mul(d).ok_or_else(|| AqcError::Overflow(format!("D{x:?}² does not fit in 128 bits")))
    }
}

impl fmt::Display for DiophantinePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let sign = if t.coeff < 0 { "-" } else { "+" };
            if i == 0 {
                if t.coeff < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = t.coeff.unsigned_abs();
            let vars: Vec<String> = t
                .exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| if e == 1 { format!("x{}", j + 1) } else { format!("x{}^{e}", j + 1) })
                .collect();
            match (mag, vars.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{}", vars.join("·"))?,
                _ => write!(f, "{mag}·{}", vars.join("·"))?,
            }
        }
        Ok(())
    }
}
