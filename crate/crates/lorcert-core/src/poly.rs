//! Sparse homogeneous polynomials over exact rationals.
//!
//! A polynomial of degree `d` in `n` variables is a map from exponent
//! vectors (length `n`, entries summing to `d`) to nonzero rational
//! coefficients. The zero polynomial is the empty map carrying its `(n, d)`
//! tag, so slices and derivatives can return it without losing shape
//! information. Coefficient nonnegativity is deliberately not an invariant
//! here; the certifiers check it where membership requires it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::{factorial, multi_factorial, parse_rational};

/// Multi-index: exponent vector of a monomial. Ordered lexicographically by
/// its entries, which fixes every enumeration order in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zeros(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// d * e_i in n variables.
    pub fn scaled_unit(n: usize, i: usize, d: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = d;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Entrywise difference; `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    /// self - e_i + e_j; `None` if entry i is zero.
    pub fn exchange(&self, i: usize, j: usize) -> Option<Exponent> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        e[j] += 1;
        Some(Exponent(e))
    }

    /// Whether every entry is 0 or 1.
    pub fn is_multiaffine(&self) -> bool {
        self.0.iter().all(|&a| a <= 1)
    }

    /// alpha!
    pub fn factorial(&self) -> BigInt {
        multi_factorial(&self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// All exponent vectors of length `n` summing to `d`, in descending
/// lexicographic order: `(d,0,...,0)` first, `(0,...,0,d)` last. This is the
/// order used for witness reporting everywhere.
pub fn simplex(n: usize, d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut stack = vec![0u32; n];
    fn rec(n: usize, left: u32, pos: usize, stack: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if pos + 1 == n {
            stack[pos] = left;
            out.push(Exponent(stack.clone()));
            return;
        }
        for v in (0..=left).rev() {
            stack[pos] = v;
            rec(n, left - v, pos + 1, stack, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Exponent(Vec::new()));
        }
        return out;
    }
    rec(n, d, 0, &mut stack, &mut out);
    out
}

/// Homogeneous polynomial with exact rational coefficients, sparse over its
/// support. Stored exponents always sum to `d`; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomoPoly {
    n: usize,
    d: u32,
    terms: BTreeMap<Exponent, BigRational>,
}

impl HomoPoly {
    /// The zero polynomial with shape tag `(n, d)`.
    pub fn zero(n: usize, d: u32) -> Self {
        HomoPoly {
            n,
            d,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from raw terms; duplicates are summed, zero
    /// results dropped. Fails on exponent vectors of wrong length or sum.
    pub fn from_terms(
        n: usize,
        d: u32,
        terms: impl IntoIterator<Item = (Exponent, BigRational)>,
    ) -> Result<Self, Error> {
        let mut map: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::ExponentLength {
                    found: e.len(),
                    expected: n,
                });
            }
            if e.sum() != d {
                return Err(Error::NotHomogeneous {
                    term: e.to_string(),
                    found: e.sum(),
                    expected: d,
                });
            }
            let entry = map.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomoPoly { n, d, terms: map })
    }

    /// Convenience constructor from integer-ish data, for tests and fixtures.
    pub fn from_int_terms(n: usize, d: u32, terms: &[(&[u32], i64)]) -> Self {
        HomoPoly::from_terms(
            n,
            d,
            terms.iter().map(|(e, c)| {
                (
                    Exponent(e.to_vec()),
                    BigRational::from_integer(BigInt::from(*c)),
                )
            }),
        )
        .expect("inconsistent test term data")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `alpha` (zero when absent).
    pub fn coeff(&self, alpha: &Exponent) -> BigRational {
        self.terms.get(alpha).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    /// Support in descending lexicographic order (paper-display order).
    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().rev().cloned().collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// First (descending-lex) negative coefficient, if any.
    pub fn first_negative_term(&self) -> Option<(Exponent, BigRational)> {
        self.terms
            .iter()
            .rev()
            .find(|(_, c)| c.is_negative())
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Max exponent of variable `i` over the support; 0 for the zero
    /// polynomial.
    pub fn degree_in_var(&self, i: usize) -> Result<u32, Error> {
        if i >= self.n {
            return Err(Error::VariableIndex { index: i, n: self.n });
        }
        Ok(self.terms.keys().map(|e| e.0[i]).max().unwrap_or(0))
    }

    /// Whether every exponent entry is 0 or 1.
    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(|e| e.is_multiaffine())
    }

    /// Sum of all coefficients, i.e. the value at (1,...,1).
    pub fn coeff_sum(&self) -> BigRational {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigRational) -> HomoPoly {
        if c.is_zero() {
            return HomoPoly::zero(self.n, self.d);
        }
        HomoPoly {
            n: self.n,
            d: self.d,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &HomoPoly) -> Result<HomoPoly, Error> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        if self.d != other.d && !self.is_zero() && !other.is_zero() {
            return Err(Error::MixedDegrees(self.d, other.d));
        }
        let d = if self.is_zero() { other.d } else { self.d };
        HomoPoly::from_terms(
            self.n,
            d,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn sub(&self, other: &HomoPoly) -> Result<HomoPoly, Error> {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Exact product; degrees add, variable counts must match.
    pub fn mul(&self, other: &HomoPoly) -> Result<HomoPoly, Error> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        let d = self.d + other.d;
        let mut map: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                let entry = map.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomoPoly {
            n: self.n,
            d,
            terms: map,
        })
    }

    /// x_i^k as a polynomial in `n` variables.
    pub fn monomial_power(n: usize, i: usize, k: u32) -> Result<HomoPoly, Error> {
        if i >= n {
            return Err(Error::VariableIndex { index: i, n });
        }
        Ok(HomoPoly {
            n,
            d: k,
            terms: BTreeMap::from([(Exponent::scaled_unit(n, i, k), BigRational::one())]),
        })
    }

    /// f(Ax) for a nonnegative n x m matrix A: variable x_i is replaced by
    /// the linear form given by row i. Exact, degree-preserving.
    pub fn substitute_linear(&self, a: &[Vec<BigRational>]) -> Result<HomoPoly, Error> {
        if a.len() != self.n {
            return Err(Error::MatrixRows {
                found: a.len(),
                expected: self.n,
            });
        }
        let m = a.first().map_or(0, |row| row.len());
        for (i, row) in a.iter().enumerate() {
            if row.len() != m {
                return Err(Error::invalid(
                    "substitution matrix",
                    format!("row {i} has {} entries, expected {m}", row.len()),
                ));
            }
            for (j, v) in row.iter().enumerate() {
                if v.is_negative() {
                    return Err(Error::NegativeMatrixEntry {
                        row: i,
                        col: j,
                        value: crate::rational::format_rational(v),
                    });
                }
            }
        }
        // Linear forms for each source variable, as degree-1 polynomials in m
        // variables.
        let rows: Vec<HomoPoly> = (0..self.n)
            .map(|i| {
                HomoPoly::from_terms(
                    m,
                    1,
                    (0..m).map(|j| (Exponent::scaled_unit(m, j, 1), a[i][j].clone())),
                )
                .expect("linear form construction")
            })
            .collect();
        let mut acc = HomoPoly::zero(m, self.d);
        for (e, c) in &self.terms {
            let mut term = HomoPoly {
                n: m,
                d: 0,
                terms: BTreeMap::from([(Exponent::zeros(m), c.clone())]),
            };
            for (i, &exp) in e.0.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&rows[i])?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Iterated partial derivative d^alpha f, degree d - |alpha|.
    pub fn partial(&self, alpha: &Exponent) -> Result<HomoPoly, Error> {
        if alpha.len() != self.n {
            return Err(Error::ExponentLength {
                found: alpha.len(),
                expected: self.n,
            });
        }
        let order = alpha.sum();
        if order > self.d {
            return Ok(HomoPoly::zero(self.n, 0));
        }
        let d = self.d - order;
        let mut map: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            if let Some(target) = e.checked_sub(alpha) {
                // falling factorial multiplier prod_i e_i!/(e_i - a_i)!
                let mut mult = BigInt::one();
                for (&ei, &ai) in e.0.iter().zip(&alpha.0) {
                    mult *= factorial(ei) / factorial(ei - ai);
                }
                let entry = map.entry(target).or_insert_with(BigRational::zero);
                *entry += c * BigRational::from_integer(mult);
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomoPoly {
            n: self.n,
            d,
            terms: map,
        })
    }

    /// Decomposition along variable `i`: returns `[f_0, ..., f_d]` with
    /// `f = sum_j x_i^(d-j) * f_j` and `f_j` homogeneous of degree `j` in the
    /// remaining n-1 variables.
    pub fn slices(&self, i: usize) -> Result<Vec<HomoPoly>, Error> {
        if i >= self.n {
            return Err(Error::VariableIndex { index: i, n: self.n });
        }
        let mut out: Vec<BTreeMap<Exponent, BigRational>> =
            (0..=self.d).map(|_| BTreeMap::new()).collect();
        for (e, c) in &self.terms {
            let power = e.0[i];
            let j = (self.d - power) as usize;
            let rest: Vec<u32> = e
                .0
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, &v)| v)
                .collect();
            out[j].insert(Exponent(rest), c.clone());
        }
        Ok(out
            .into_iter()
            .enumerate()
            .map(|(j, terms)| HomoPoly {
                n: self.n - 1,
                d: j as u32,
                terms,
            })
            .collect())
    }

    /// Inverse of [`HomoPoly::slices`]: rebuilds `sum_j x_i^(d-j) * f_j`.
    pub fn assemble_slices(n: usize, d: u32, i: usize, slices: &[HomoPoly]) -> Result<HomoPoly, Error> {
        if i >= n {
            return Err(Error::VariableIndex { index: i, n });
        }
        let mut terms: Vec<(Exponent, BigRational)> = Vec::new();
        for (j, fj) in slices.iter().enumerate() {
            let power = d - j as u32;
            for (e, c) in &fj.terms {
                let mut full = Vec::with_capacity(n);
                full.extend_from_slice(&e.0[..i]);
                full.push(power);
                full.extend_from_slice(&e.0[i..]);
                terms.push((Exponent(full), c.clone()));
            }
        }
        HomoPoly::from_terms(n, d, terms)
    }

    /// Divides by x_i^k; the quotient keeps all n variables. Fails when a
    /// support exponent has entry i below k.
    pub fn div_monomial_power(&self, i: usize, k: u32) -> Result<HomoPoly, Error> {
        if i >= self.n {
            return Err(Error::VariableIndex { index: i, n: self.n });
        }
        let mut map = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.0[i] < k {
                return Err(Error::invalid(
                    "monomial division",
                    format!("term {e} has exponent {} < {k} in variable {}", e.0[i], i + 1),
                ));
            }
            let mut v = e.0.clone();
            v[i] -= k;
            map.insert(Exponent(v), c.clone());
        }
        Ok(HomoPoly {
            n: self.n,
            d: self.d - k,
            terms: map,
        })
    }

    /// Evaluation at an exact rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, Error> {
        if point.len() != self.n {
            return Err(Error::VariableMismatch(point.len(), self.n));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                for _ in 0..k {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// The normalized coefficient table V_alpha = alpha! c_alpha / d!.
    pub fn normalized_coeffs(&self) -> NormalizedCoeffs {
        let dfac = BigRational::from_integer(factorial(self.d));
        let table = self
            .terms
            .iter()
            .map(|(e, c)| {
                let v = c * BigRational::from_integer(e.factorial()) / dfac.clone();
                (e.clone(), v)
            })
            .collect();
        NormalizedCoeffs {
            n: self.n,
            d: self.d,
            table,
        }
    }
}

/// Normalized coefficients V_alpha of a homogeneous polynomial: the values
/// that play the role of mixed volumes when the polynomial is a volume
/// polynomial. Zero entries are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedCoeffs {
    n: usize,
    d: u32,
    table: BTreeMap<Exponent, BigRational>,
}

impl NormalizedCoeffs {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// V_alpha, zero where absent. Panics on a malformed index length.
    pub fn get(&self, alpha: &Exponent) -> BigRational {
        assert_eq!(alpha.len(), self.n, "index length mismatch");
        self.table.get(alpha).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.table.iter()
    }

    /// Rebuilds the polynomial sum_alpha (d!/alpha!) V_alpha x^alpha.
    pub fn to_poly(&self) -> HomoPoly {
        let dfac = BigRational::from_integer(factorial(self.d));
        let terms = self
            .table
            .iter()
            .map(|(e, v)| {
                let c = v * dfac.clone() / BigRational::from_integer(e.factorial());
                (e.clone(), c)
            })
            .collect();
        HomoPoly {
            n: self.n,
            d: self.d,
            terms,
        }
    }
}

impl fmt::Display for HomoPoly {
    /// Descending-lex term order, coefficients as reduced rationals; parses
    /// back via `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", crate::rational::format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(
                    f,
                    "{}*{}",
                    crate::rational::format_rational(&mag),
                    vars.join("*")
                )?;
            }
        }
        Ok(())
    }
}

/// Parses the human-readable term syntax, e.g.
/// `14*x1^3 + 6*x1^2*x2 + 3/2*x2*x3^2`. Whitespace and `*` both separate
/// factors. The variable count is the largest index mentioned; pass an
/// explicit `n` via [`parse_text_with_n`] to widen it.
pub fn parse_text(input: &str) -> Result<HomoPoly, Error> {
    parse_text_with_n(input, None)
}

pub fn parse_text_with_n(input: &str, n: Option<usize>) -> Result<HomoPoly, Error> {
    let raw_terms = split_terms(input)?;
    if raw_terms.is_empty() {
        return Err(Error::invalid("polynomial text", "empty input"));
    }
    let mut parsed: Vec<(BigRational, Vec<(usize, u32)>)> = Vec::new();
    let mut max_var = 0usize;
    for (sign, body) in &raw_terms {
        let (coeff, factors) = parse_term(body)?;
        for &(v, _) in &factors {
            max_var = max_var.max(v + 1);
        }
        let c = if *sign { -coeff } else { coeff };
        parsed.push((c, factors));
    }
    let n = match n {
        Some(n) if n >= max_var => n,
        Some(n) => {
            return Err(Error::VariableIndex {
                index: max_var - 1,
                n,
            })
        }
        None => max_var,
    };
    // Degree comes from the first term; homogeneity of the rest is enforced
    // by from_terms.
    let degree_of = |factors: &[(usize, u32)]| factors.iter().map(|&(_, k)| k).sum::<u32>();
    let d = degree_of(&parsed[0].1);
    HomoPoly::from_terms(
        n,
        d,
        parsed.into_iter().map(|(c, factors)| {
            let mut e = vec![0u32; n];
            for (v, k) in factors {
                e[v] += k;
            }
            (Exponent(e), c)
        }),
    )
}

/// Splits on top-level `+`/`-`, keeping each term's sign.
fn split_terms(input: &str) -> Result<Vec<(bool, String)>, Error> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut sign = false;
    let mut seen_any = false;
    for ch in input.chars() {
        match ch {
            '+' | '-' => {
                if current.trim().is_empty() && !seen_any {
                    // leading sign
                    sign = ch == '-';
                    seen_any = true;
                } else if current.trim().is_empty() {
                    return Err(Error::invalid("polynomial text", "dangling sign"));
                } else {
                    terms.push((sign, std::mem::take(&mut current)));
                    sign = ch == '-';
                }
                seen_any = true;
            }
            _ => {
                if !ch.is_whitespace() {
                    seen_any = true;
                }
                current.push(ch);
            }
        }
    }
    if !current.trim().is_empty() {
        terms.push((sign, current));
    } else if seen_any && !terms.is_empty() {
        return Err(Error::invalid("polynomial text", "trailing sign"));
    }
    Ok(terms)
}

/// One term: optional rational coefficient followed by `x<i>[^k]` factors.
fn parse_term(body: &str) -> Result<(BigRational, Vec<(usize, u32)>), Error> {
    let mut coeff = BigRational::one();
    let mut factors: Vec<(usize, u32)> = Vec::new();
    let mut saw_coeff = false;
    for piece in body.split(|c: char| c == '*' || c.is_whitespace()) {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        if let Some(rest) = piece.strip_prefix('x') {
            let (var_str, exp) = match rest.split_once('^') {
                Some((v, e)) => {
                    let exp: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::invalid("polynomial text", format!("bad exponent in '{piece}'")))?;
                    if exp < 0 {
                        return Err(Error::NegativeExponent(piece.to_string()));
                    }
                    (v.trim(), exp as u32)
                }
                None => (rest.trim(), 1),
            };
            let idx: usize = var_str
                .trim_start_matches('_')
                .parse()
                .map_err(|_| Error::invalid("polynomial text", format!("bad variable '{piece}'")))?;
            if idx == 0 {
                return Err(Error::invalid("polynomial text", "variables are 1-based"));
            }
            factors.push((idx - 1, exp));
        } else {
            if saw_coeff {
                coeff *= parse_rational(piece)?;
            } else {
                coeff = parse_rational(piece)?;
                saw_coeff = true;
            }
        }
    }
    Ok((coeff, factors))
}

impl FromStr for HomoPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{big_rational, int_rational};

    fn p(text: &str) -> HomoPoly {
        parse_text(text).unwrap()
    }

    #[test]
    fn simplex_order_is_descending_lex() {
        let s = simplex(3, 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s[0], Exponent(vec![2, 0, 0]));
        assert_eq!(s[1], Exponent(vec![1, 1, 0]));
        assert_eq!(s[5], Exponent(vec![0, 0, 2]));
        // sizes: C(n+d-1, d)
        assert_eq!(simplex(4, 3).len(), 20);
        assert_eq!(simplex(1, 5).len(), 1);
        assert_eq!(simplex(2, 0).len(), 1);
    }

    #[test]
    fn structured_terms_merge_and_drop_zeros() {
        let f = HomoPoly::from_terms(
            2,
            2,
            vec![
                (Exponent(vec![1, 1]), int_rational(1)),
                (Exponent(vec![1, 1]), int_rational(1)),
                (Exponent(vec![2, 0]), int_rational(3)),
                (Exponent(vec![2, 0]), int_rational(-3)),
            ],
        )
        .unwrap();
        assert_eq!(f, p("2*x1*x2"));
        assert_eq!(f.num_terms(), 1);
    }

    #[test]
    fn from_terms_rejects_inhomogeneous_and_bad_lengths() {
        let r = HomoPoly::from_terms(2, 2, vec![(Exponent(vec![1, 0]), int_rational(1))]);
        assert!(matches!(r, Err(Error::NotHomogeneous { .. })));
        let r = HomoPoly::from_terms(2, 2, vec![(Exponent(vec![1, 1, 0]), int_rational(1))]);
        assert!(matches!(r, Err(Error::ExponentLength { .. })));
    }

    #[test]
    fn text_parse_examples() {
        let f = p("x1^2 + 3*x1*x2 + 3*x2^2");
        assert_eq!(f.n(), 2);
        assert_eq!(f.degree(), 2);
        assert_eq!(f.coeff(&Exponent(vec![1, 1])), int_rational(3));

        let g = p("x1^3");
        assert_eq!((g.n(), g.degree(), g.num_terms()), (1, 3, 1));

        // duplicate merge
        let h = p("x1*x2 + x1*x2");
        assert_eq!(h.coeff(&Exponent(vec![1, 1])), int_rational(2));

        // rational coefficient and implicit multiplication by whitespace
        let k = p("1/2 x1 x2 + x1^2");
        assert_eq!(k.coeff(&Exponent(vec![1, 1])), big_rational(1, 2));
    }

    #[test]
    fn text_parse_errors() {
        assert!(parse_text("x1^2 + x2").is_err()); // inhomogeneous
        assert!(parse_text("x1^-1 * x2^3").is_err()); // negative exponent
        assert!(parse_text("1/0 * x1").is_err()); // malformed rational
        assert!(parse_text("x0").is_err()); // 1-based variables
    }

    #[test]
    fn display_round_trips() {
        let f = p("14*x1^3 + 6*x1^2*x2 + 24*x1^2*x3 + 12*x1*x2*x3 + 6*x1*x3^2 + 3*x2*x3^2");
        let shown = f.to_string();
        assert_eq!(p(&shown), f);
        assert_eq!(HomoPoly::zero(2, 3).to_string(), "0");
        let g = p("x1*x2 - 1/2*x2^2");
        assert_eq!(parse_text(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn mul_matches_hand_expansion() {
        let x = p("x1").mul(&HomoPoly::zero(1, 0)).unwrap();
        assert!(x.is_zero());

        let f = parse_text_with_n("x1", Some(2)).unwrap();
        let g = p("x1^2 + 3*x1*x2 + 3*x2^2");
        assert_eq!(f.mul(&g).unwrap(), p("x1^3 + 3*x1^2*x2 + 3*x1*x2^2"));

        let bad = p("x1").mul(&p("x1*x2"));
        assert!(matches!(bad, Err(Error::VariableMismatch(1, 2))));
    }

    #[test]
    fn substitution_identity_and_merge() {
        let g = p("x1^2 + 3*x1*x2 + 3*x2^2");
        let id = vec![
            vec![int_rational(1), int_rational(0)],
            vec![int_rational(0), int_rational(1)],
        ];
        assert_eq!(g.substitute_linear(&id).unwrap(), g);

        // xy with both variables mapped to the single output variable
        let f = p("x1*x2");
        let a = vec![vec![int_rational(1)], vec![int_rational(1)]];
        assert_eq!(f.substitute_linear(&a).unwrap(), p("x1^2"));

        // x_n -> x_n + x_{n+1}
        let a = vec![
            vec![int_rational(1), int_rational(0), int_rational(0)],
            vec![int_rational(0), int_rational(1), int_rational(1)],
        ];
        let widened = f.substitute_linear(&a).unwrap();
        assert_eq!(widened, p("x1*x2 + x1*x3"));
    }

    #[test]
    fn substitution_rejects_bad_matrices() {
        let f = p("x1*x2");
        let bad_rows = vec![vec![int_rational(1)]];
        assert!(matches!(
            f.substitute_linear(&bad_rows),
            Err(Error::MatrixRows { .. })
        ));
        let negative = vec![vec![int_rational(1)], vec![int_rational(-1)]];
        assert!(matches!(
            f.substitute_linear(&negative),
            Err(Error::NegativeMatrixEntry { .. })
        ));
    }

    #[test]
    fn partial_derivatives() {
        let g = p("x1^2 + 3*x1*x2 + 3*x2^2");
        assert_eq!(g.partial(&Exponent(vec![1, 0])).unwrap(), p("2*x1 + 3*x2"));
        assert_eq!(g.partial(&Exponent(vec![0, 0])).unwrap(), g);
        let cube = p("x1^3");
        let d3 = cube.partial(&Exponent(vec![3])).unwrap();
        assert_eq!(d3.coeff(&Exponent(vec![0])), int_rational(6));
        assert_eq!(d3.degree(), 0);
    }

    #[test]
    fn slices_of_pure_power() {
        let f = p("x1^3");
        let s = f.slices(0).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s[0].coeff(&Exponent(vec![])), int_rational(1));
        assert!(s[1].is_zero() && s[2].is_zero() && s[3].is_zero());
    }

    #[test]
    fn slices_reassemble() {
        let f = p("x1^3 + 3*x1^2*x2 + 3*x1*x2^2");
        for i in 0..2 {
            let s = f.slices(i).unwrap();
            let back = HomoPoly::assemble_slices(2, 3, i, &s).unwrap();
            assert_eq!(back, f);
        }
    }

    #[test]
    fn normalized_coeffs_examples() {
        // n=2 d=2, xy -> V_(1,1) = 1/2
        let v = p("x1*x2").normalized_coeffs();
        assert_eq!(v.get(&Exponent(vec![1, 1])), big_rational(1, 2));
        assert_eq!(v.get(&Exponent(vec![2, 0])), int_rational(0));

        let v = p("x1^3").normalized_coeffs();
        assert_eq!(v.get(&Exponent(vec![3])), int_rational(1));

        let bh = p("14*x1^3 + 6*x1^2*x2 + 24*x1^2*x3 + 12*x1*x2*x3 + 6*x1*x3^2 + 3*x2*x3^2");
        let v = bh.normalized_coeffs();
        let expect = [
            (vec![3, 0, 0], int_rational(14)),
            (vec![2, 1, 0], int_rational(2)),
            (vec![2, 0, 1], int_rational(8)),
            (vec![1, 1, 1], int_rational(2)),
            (vec![1, 0, 2], int_rational(2)),
            (vec![0, 1, 2], int_rational(1)),
        ];
        for (e, val) in expect {
            assert_eq!(v.get(&Exponent(e.clone())), val, "V at {e:?}");
        }
        assert_eq!(v.to_poly(), bh);
    }

    #[test]
    fn degree_in_var_and_support() {
        let f = p("x1^2 + 3*x1*x2 + 3*x2^2");
        assert_eq!(f.degree_in_var(0).unwrap(), 2);
        let g = p("x1^3 + 3*x1^2*x2 + 3*x1*x2^2");
        assert_eq!(
            g.support(),
            vec![
                Exponent(vec![3, 0]),
                Exponent(vec![2, 1]),
                Exponent(vec![1, 2])
            ]
        );
        assert!(f.degree_in_var(5).is_err());
    }

    #[test]
    fn eval_exact() {
        let f = p("x1^2 + 3*x1*x2 + 3*x2^2");
        let v = f.eval(&[int_rational(1), big_rational(1, 2)]).unwrap();
        assert_eq!(v, big_rational(13, 4)); // 1 + 3/2 + 3/4
    }
}
