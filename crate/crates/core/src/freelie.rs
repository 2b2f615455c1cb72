//! Lie polynomials over indexed generators.
//!
//! A [`LiePoly`] is stored exactly as written: a rational combination of
//! bracket trees, with no antisymmetry or Jacobi rewriting. Equality is
//! decided by expanding [a, b] to ab - ba in the free associative algebra,
//! into which the free Lie algebra embeds.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Default bound on the degree of terms expanded into words.
pub const DEFAULT_MAX_LIE_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieTerm {
    Generator(usize),
    Bracket(Box<LieTerm>, Box<LieTerm>),
}

impl LieTerm {
    pub fn generator(i: usize) -> Self {
        LieTerm::Generator(i)
    }

    pub fn bracket(left: LieTerm, right: LieTerm) -> Self {
        LieTerm::Bracket(Box::new(left), Box::new(right))
    }

    /// Number of generator leaves.
    pub fn degree(&self) -> usize {
        match self {
            LieTerm::Generator(_) => 1,
            LieTerm::Bracket(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LieTerm::Generator(_) => 0,
            LieTerm::Bracket(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Occurrence count of each generator.
    pub fn occurrences(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        self.count_into(&mut out);
        out
    }

    fn count_into(&self, out: &mut BTreeMap<usize, usize>) {
        match self {
            LieTerm::Generator(i) => *out.entry(*i).or_insert(0) += 1,
            LieTerm::Bracket(l, r) => {
                l.count_into(out);
                r.count_into(out);
            }
        }
    }

    fn expand(&self, memo: &mut HashMap<LieTerm, AssocPoly>) -> AssocPoly {
        if let Some(done) = memo.get(self) {
            return done.clone();
        }
        let out = match self {
            LieTerm::Generator(i) => AssocPoly::word(vec![*i]),
            LieTerm::Bracket(l, r) => {
                let (a, b) = (l.expand(memo), r.expand(memo));
                a.mul(&b).sub(&b.mul(&a))
            }
        };
        memo.insert(self.clone(), out.clone());
        out
    }
}

impl fmt::Display for LieTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTerm::Generator(i) => write!(f, "g{}", i + 1),
            LieTerm::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// A rational combination of bracket trees.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LiePoly {
    terms: BTreeMap<LieTerm, Rational>,
}

impl LiePoly {
    pub fn zero() -> Self {
        LiePoly::default()
    }

    pub fn generator(i: usize) -> Self {
        LiePoly::term(Rational::one(), LieTerm::Generator(i))
    }

    pub fn term(c: Rational, t: LieTerm) -> Self {
        let mut p = LiePoly::zero();
        p.add_term(t, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (LieTerm, Rational)>>(terms: I) -> Self {
        let mut p = LiePoly::zero();
        for (t, c) in terms {
            p.add_term(t, c);
        }
        p
    }

    pub fn add_term(&mut self, t: LieTerm, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LieTerm, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// No stored terms. A syntactically nonempty polynomial may still be
    /// zero in the free Lie algebra; use [`lie_equal`] for that.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &LiePoly) -> LiePoly {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LiePoly {
        LiePoly::from_terms(self.terms.iter().map(|(t, a)| (t.clone(), a * c)))
    }

    pub fn sub(&self, other: &LiePoly) -> LiePoly {
        self.add(&other.scale(&rat(-1)))
    }

    /// Bilinear extension of the bracket to polynomials.
    pub fn bracket(&self, other: &LiePoly) -> LiePoly {
        let mut out = LiePoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(LieTerm::bracket(a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }

    /// Largest term degree.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(LieTerm::degree).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.terms.keys().map(LieTerm::depth).max().unwrap_or(0)
    }

    pub fn generators(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|t| t.occurrences().into_keys())
            .collect()
    }
}

impl fmt::Display for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{abs}*{t}")?;
            }
        }
        Ok(())
    }
}

/// Noncommutative polynomial: words over generator indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AssocPoly {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl AssocPoly {
    pub fn zero() -> Self {
        AssocPoly::default()
    }

    pub fn word(w: Vec<usize>) -> Self {
        AssocPoly {
            terms: BTreeMap::from([(w, Rational::one())]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, w: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn sub(&self, other: &AssocPoly) -> AssocPoly {
        self.add(&other.scale(&rat(-1)))
    }

    /// Concatenation product.
    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let w: Vec<usize> = u.iter().chain(v).copied().collect();
                out.add_term(w, a * b);
            }
        }
        out
    }
}

impl fmt::Display for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let word = w.iter().map(|i| format!("g{}", i + 1)).join("");
            write!(f, "({c})*{word}")?;
        }
        Ok(())
    }
}

/// Expands every bracket [a, b] into ab - ba.
pub fn expand_to_words(f: &LiePoly) -> AssocPoly {
    let mut memo = HashMap::new();
    let mut out = AssocPoly::zero();
    for (t, c) in &f.terms {
        out = out.add(&t.expand(&mut memo).scale(c));
    }
    out
}

/// [`expand_to_words`] refusing terms above `max_degree`; the expansion of
/// a degree-d term has up to 2^(d-1) words.
pub fn expand_to_words_capped(f: &LiePoly, max_degree: usize) -> Result<AssocPoly> {
    let degree = f.degree();
    if degree > max_degree {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: max_degree,
        });
    }
    Ok(expand_to_words(f))
}

/// Equality in the free Lie algebra.
pub fn lie_equal(f: &LiePoly, g: &LiePoly) -> bool {
    expand_to_words(&f.sub(g)).is_zero()
}

/// True when `f` is zero in the free Lie algebra.
pub fn lie_is_zero(f: &LiePoly) -> bool {
    expand_to_words(f).is_zero()
}

/// Sign of the permutation given as images of 0..n.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// ad a_1 ad a_2 ... ad a_k (target) = [a_1, [a_2, ... [a_k, target]]].
pub fn ad_chain(args: &[usize], target: usize) -> LieTerm {
    args.iter()
        .rev()
        .fold(LieTerm::Generator(target), |acc, &a| {
            LieTerm::bracket(LieTerm::Generator(a), acc)
        })
}

/// Alternating sum over all orderings of `args` of the ad-chain applied
/// to `target`.
pub fn alternating_ad_sum(args: &[usize], target: usize) -> LiePoly {
    let mut out = LiePoly::zero();
    for perm in (0..args.len()).permutations(args.len()) {
        let ordered: Vec<usize> = perm.iter().map(|&p| args[p]).collect();
        out.add_term(ad_chain(&ordered, target), rat(permutation_sign(&perm)));
    }
    out
}

/// The standard Lie polynomial St_n: the alternating sum over S_(n-1) of
/// ad x_σ(1) ... ad x_σ(n-1) z, with x_i = g_i (indices 0..n-2) and
/// z = g_n (index n-1).
pub fn standard_identity(n: usize) -> Result<LiePoly> {
    if n < 2 {
        return Err(Error::Usage(format!(
            "standard identity needs n >= 2, got {n}"
        )));
    }
    let args: Vec<usize> = (0..n - 1).collect();
    Ok(alternating_ad_sum(&args, n - 1))
}

/// The triple bracket <g_i, g_j, g_k> applied to `target`: six signed
/// ad-chains of depth three. Expects `target` distinct from i, j, k.
pub fn triple_bracket_term(i: usize, j: usize, k: usize, target: usize) -> LiePoly {
    // Build chains directly so repeated arguments produce repeated tuples
    // whose signs cancel.
    let args = [i, j, k];
    let mut out = LiePoly::zero();
    for perm in (0..3).permutations(3) {
        let ordered: Vec<usize> = perm.iter().map(|&p| args[p]).collect();
        out.add_term(ad_chain(&ordered, target), rat(permutation_sign(&perm)));
    }
    out
}

/// Every term contains each listed generator exactly once.
pub fn is_multilinear(f: &LiePoly, vars: &BTreeSet<usize>) -> bool {
    f.terms.keys().all(|t| {
        let occ = t.occurrences();
        vars.iter().all(|v| occ.get(v) == Some(&1))
    })
}

/// A vector space with a bilinear bracket, into which Lie polynomials can
/// be evaluated.
pub trait LieCarrier {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn scale(&self, c: &Rational, a: &Self::Elem) -> Result<Self::Elem>;

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> Result<bool>;
}

/// Evaluates `f` by structural recursion, replacing each bracket with the
/// carrier bracket. Shared subtrees are evaluated once.
pub fn evaluate<C: LieCarrier>(
    f: &LiePoly,
    carrier: &C,
    assignment: &BTreeMap<usize, C::Elem>,
) -> Result<C::Elem> {
    let mut memo: HashMap<&LieTerm, C::Elem> = HashMap::new();
    let mut acc = carrier.zero();
    for (t, c) in &f.terms {
        let value = eval_term(t, carrier, assignment, &mut memo)?;
        acc = carrier.add(&acc, &carrier.scale(c, &value)?)?;
    }
    Ok(acc)
}

fn eval_term<'t, C: LieCarrier>(
    t: &'t LieTerm,
    carrier: &C,
    assignment: &BTreeMap<usize, C::Elem>,
    memo: &mut HashMap<&'t LieTerm, C::Elem>,
) -> Result<C::Elem> {
    if let Some(v) = memo.get(t) {
        return Ok(v.clone());
    }
    let value = match t {
        LieTerm::Generator(i) => assignment
            .get(i)
            .cloned()
            .ok_or(Error::UnboundGenerator(*i))?,
        LieTerm::Bracket(l, r) => {
            let a = eval_term(l, carrier, assignment, memo)?;
            let b = eval_term(r, carrier, assignment, memo)?;
            carrier.bracket(&a, &b)?
        }
    };
    memo.insert(t, value.clone());
    Ok(value)
}

/// The free associative algebra with the commutator bracket.
#[derive(Debug, Clone, Copy, Default)]
pub struct CommutatorWords;

impl LieCarrier for CommutatorWords {
    type Elem = AssocPoly;

    fn zero(&self) -> AssocPoly {
        AssocPoly::zero()
    }

    fn add(&self, a: &AssocPoly, b: &AssocPoly) -> Result<AssocPoly> {
        Ok(a.add(b))
    }

    fn scale(&self, c: &Rational, a: &AssocPoly) -> Result<AssocPoly> {
        Ok(a.scale(c))
    }

    fn bracket(&self, a: &AssocPoly, b: &AssocPoly) -> Result<AssocPoly> {
        Ok(a.mul(b).sub(&b.mul(a)))
    }

    fn is_zero(&self, a: &AssocPoly) -> Result<bool> {
        Ok(a.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize) -> LieTerm {
        LieTerm::generator(i)
    }

    fn br(a: LieTerm, b: LieTerm) -> LieTerm {
        LieTerm::bracket(a, b)
    }

    fn poly(t: LieTerm) -> LiePoly {
        LiePoly::term(rat(1), t)
    }

    fn word(w: &[usize], c: i64) -> AssocPoly {
        AssocPoly::word(w.to_vec()).scale(&rat(c))
    }

    #[test]
    fn defining_expansion() {
        let got = expand_to_words(&poly(br(g(0), g(1))));
        assert_eq!(got, word(&[0, 1], 1).add(&word(&[1, 0], -1)));
    }

    #[test]
    fn antisymmetry_and_jacobi_expand_to_zero() {
        assert!(lie_is_zero(&poly(br(g(0), g(0)))));
        let jacobi = poly(br(g(0), br(g(1), g(2))))
            .add(&poly(br(g(1), br(g(2), g(0)))))
            .add(&poly(br(g(2), br(g(0), g(1)))));
        assert_eq!(jacobi.len(), 3);
        assert!(lie_is_zero(&jacobi));
    }

    #[test]
    fn lie_equal_examples() {
        let a = poly(br(g(0), g(1)));
        let b = poly(br(g(1), g(0))).scale(&rat(-1));
        assert!(lie_equal(&a, &b));
        let left = poly(br(g(0), br(g(1), g(2))));
        let right = poly(br(br(g(0), g(1)), g(2)));
        // g1g2g3 - g1g3g2 - g2g3g1 + g3g2g1 versus
        // g1g2g3 - g2g1g3 - g3g1g2 + g3g2g1
        let expected_left = word(&[0, 1, 2], 1)
            .add(&word(&[0, 2, 1], -1))
            .add(&word(&[1, 2, 0], -1))
            .add(&word(&[2, 1, 0], 1));
        assert_eq!(expand_to_words(&left), expected_left);
        assert!(!lie_equal(&left, &right));
        assert!(lie_equal(&left, &left));
    }

    #[test]
    fn standard_identity_small_cases() {
        let st2 = standard_identity(2).unwrap();
        assert_eq!(st2, poly(br(g(0), g(1))));
        let st3 = standard_identity(3).unwrap();
        let expected = poly(br(g(0), br(g(1), g(2)))).sub(&poly(br(g(1), br(g(0), g(2)))));
        assert_eq!(st3, expected);
        assert_eq!(st3.to_string(), "[g1,[g2,g3]] - [g2,[g1,g3]]");
        assert!(standard_identity(1).is_err());
    }

    #[test]
    fn st5_shape() {
        let st5 = standard_identity(5).unwrap();
        assert_eq!(st5.len(), 24);
        assert!(st5.terms().all(|(t, _)| t.depth() == 4 && t.degree() == 5));
        assert!(is_multilinear(&st5, &(0..5).collect()));
    }

    #[test]
    fn triple_bracket_terms() {
        let t = triple_bracket_term(0, 1, 2, 3);
        assert_eq!(t.len(), 6);
        assert!(t.terms().all(|(term, _)| term.depth() == 3));
        let swapped = triple_bracket_term(1, 0, 2, 3);
        assert!(lie_equal(&swapped, &t.scale(&rat(-1))));
        assert!(lie_is_zero(&triple_bracket_term(0, 0, 2, 3)));
    }

    #[test]
    fn multilinearity() {
        let f = poly(br(g(0), br(g(0), g(1))));
        assert!(!is_multilinear(&f, &[0, 1].into()));
        assert!(is_multilinear(&LiePoly::zero(), &[0, 1].into()));
    }

    #[test]
    fn degree_cap() {
        let st5 = standard_identity(5).unwrap();
        assert!(expand_to_words_capped(&st5, 8).is_ok());
        assert!(matches!(
            expand_to_words_capped(&st5, 4),
            Err(Error::DegreeCapExceeded { degree: 5, cap: 4 })
        ));
    }

    #[test]
    fn evaluation_in_commutator_words_matches_expansion() {
        let st4 = standard_identity(4).unwrap();
        let assignment: BTreeMap<usize, AssocPoly> =
            (0..4).map(|i| (i, AssocPoly::word(vec![i]))).collect();
        let value = evaluate(&st4, &CommutatorWords, &assignment).unwrap();
        assert_eq!(value, expand_to_words(&st4));
        let err = evaluate(&st4, &CommutatorWords, &BTreeMap::new()).unwrap_err();
        assert!(matches!(err, Error::UnboundGenerator(_)));
    }

    #[test]
    fn abelian_carrier_kills_brackets() {
        struct Abelian;
        impl LieCarrier for Abelian {
            type Elem = Rational;
            fn zero(&self) -> Rational {
                Rational::zero()
            }
            fn add(&self, a: &Rational, b: &Rational) -> Result<Rational> {
                Ok(a + b)
            }
            fn scale(&self, c: &Rational, a: &Rational) -> Result<Rational> {
                Ok(c * a)
            }
            fn bracket(&self, _: &Rational, _: &Rational) -> Result<Rational> {
                Ok(Rational::zero())
            }
            fn is_zero(&self, a: &Rational) -> Result<bool> {
                Ok(a.is_zero())
            }
        }
        let f = standard_identity(3).unwrap().add(&poly(br(g(0), g(1))));
        let assignment = (0..3).map(|i| (i, rat(i as i64 + 2))).collect();
        assert!(evaluate(&f, &Abelian, &assignment).unwrap().is_zero());
    }
}
