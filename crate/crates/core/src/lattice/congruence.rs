use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{hermite_normal_form, integer_kernel, solve_integer_system, IntMatrix, LatticeError};

/// `Σ coeff·var + constant` over named integer variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForm {
    #[serde(with = "crate::serde_dec::named")]
    terms: Vec<(String, BigInt)>,
    #[serde(with = "crate::serde_dec")]
    constant: BigInt,
}

impl LinearForm {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn term(mut self, var: &str, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        match self.terms.iter_mut().find(|(v, _)| v == var) {
            Some((_, c)) => *c += coeff,
            None => self.terms.push((var.to_string(), coeff)),
        }
        self
    }

    pub fn constant(mut self, c: impl Into<BigInt>) -> Self {
        self.constant += c.into();
        self
    }

    pub fn terms(&self) -> &[(String, BigInt)] {
        &self.terms
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.constant
    }

    pub fn coefficient(&self, var: &str) -> BigInt {
        self.terms
            .iter()
            .filter(|(v, _)| v == var)
            .map(|(_, c)| c.clone())
            .sum()
    }

    pub fn evaluate(&self, value_of: impl Fn(&str) -> BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(v, c)| c * value_of(v))
            .sum::<BigInt>()
            + &self.constant
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, c) in &self.terms {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs().is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "{}{v}", c.abs())?;
            }
            first = false;
        }
        if first {
            write!(f, "{}", self.constant)
        } else if self.constant.is_zero() {
            Ok(())
        } else if self.constant.is_negative() {
            write!(f, " - {}", self.constant.abs())
        } else {
            write!(f, " + {}", self.constant)
        }
    }
}

/// `form ≡ 0 (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub form: LinearForm,
    #[serde(with = "crate::serde_dec")]
    pub modulus: BigInt,
}

impl Congruence {
    pub fn new(form: LinearForm, modulus: impl Into<BigInt>) -> Self {
        Self {
            form,
            modulus: modulus.into(),
        }
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ≡ 0 mod {}", self.form, self.modulus)
    }
}

/// A solution together with the evaluated forms it was checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceWitness {
    #[serde(with = "crate::serde_dec::named")]
    pub assignments: Vec<(String, BigInt)>,
    /// (value of the linear form, modulus) for every constraint
    #[serde(with = "crate::serde_dec::pairs")]
    pub checks: Vec<(BigInt, BigInt)>,
}

impl CongruenceWitness {
    pub fn get(&self, var: &str) -> Option<&BigInt> {
        self.assignments
            .iter()
            .find(|(v, _)| v == var)
            .map(|(_, x)| x)
    }

    /// Re-evaluates every recorded check.
    pub fn holds(&self) -> bool {
        self.checks
            .iter()
            .all(|(value, m)| value.mod_floor(m).is_zero())
    }
}

/// Lexicographically smallest solution with every variable in `[0, L)`,
/// where `L` is the lcm of the moduli; `Ok(None)` when the system has no
/// integer solution. Variables are ordered by first appearance.
///
/// The solution set is `x₀ + Λ` with `Λ ⊇ L·Zᵛ`, so the Hermite basis of `Λ`
/// lets the coordinates be reduced greedily, one at a time.
pub fn solve_linear_congruences(
    system: &[Congruence],
) -> Result<Option<CongruenceWitness>, LatticeError> {
    if system.is_empty() {
        return Err(LatticeError::EmptySystem);
    }
    if let Some(bad) = system.iter().find(|c| !c.modulus.is_positive()) {
        return Err(LatticeError::NonPositiveModulus(bad.modulus.clone()));
    }

    let mut vars: Vec<String> = Vec::new();
    for c in system {
        for (v, _) in c.form.terms() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    let nv = vars.len();
    let nc = system.len();
    let lcm = system
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.modulus));

    let assignment = if nv == 0 {
        if system.iter().all(|c| c.form.constant_term().mod_floor(&c.modulus).is_zero()) {
            Vec::new()
        } else {
            return Ok(None);
        }
    } else {
        // [A | diag(m)] · (x, y) = -c
        let mut a = IntMatrix::zeros(nc, nv + nc);
        let mut rhs = Vec::with_capacity(nc);
        for (i, c) in system.iter().enumerate() {
            for (j, v) in vars.iter().enumerate() {
                a[(i, j)] = c.form.coefficient(v);
            }
            a[(i, nv + i)] = c.modulus.clone();
            rhs.push(-c.form.constant_term());
        }
        let Some(z) = solve_integer_system(&a, &rhs)? else {
            return Ok(None);
        };
        let mut x: Vec<BigInt> = z[..nv].to_vec();

        let mut gens: Vec<BigInt> = Vec::new();
        let mut rows = 0;
        for k in integer_kernel(&a) {
            gens.extend(k[..nv].iter().cloned());
            rows += 1;
        }
        for i in 0..nv {
            gens.extend((0..nv).map(|j| if i == j { lcm.clone() } else { BigInt::zero() }));
            rows += 1;
        }
        let lattice = hermite_normal_form(&IntMatrix::new(rows, nv, gens)?);
        debug_assert_eq!(lattice.pivots, (0..nv).collect::<Vec<_>>());
        let basis = &lattice.form;
        for i in 0..nv {
            let q = x[i].div_floor(&basis[(i, i)]);
            if q.is_zero() {
                continue;
            }
            for (j, xj) in x.iter_mut().enumerate().skip(i) {
                *xj -= &q * &basis[(i, j)];
            }
        }
        vars.into_iter().zip(x).collect()
    };

    let lookup = |name: &str| -> BigInt {
        assignment
            .iter()
            .find(|(v, _): &&(String, BigInt)| v == name)
            .map(|(_, x)| x.clone())
            .unwrap_or_default()
    };
    let checks = system
        .iter()
        .map(|c| (c.form.evaluate(&lookup), c.modulus.clone()))
        .collect();
    let witness = CongruenceWitness {
        assignments: assignment.clone(),
        checks,
    };
    debug_assert!(witness.holds());
    Ok(Some(witness))
}
