use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DeformSeries;
use crate::{Error, Result};

/// Ordered generator symbols. The position of a symbol is its rank in the
/// termination order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new(symbols: &[&str]) -> Arc<Self> {
        Arc::new(Self { symbols: symbols.iter().map(|s| s.to_string()).collect() })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn name(&self, i: u8) -> &str {
        &self.symbols[i as usize]
    }

    pub fn index(&self, name: &str) -> Result<u8> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .map(|i| i as u8)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator {name:?}")))
    }
}

/// A word in the generators, ordered degree-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u8>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Noncommutative polynomial with [`DeformSeries`] coefficients.
#[derive(Clone, PartialEq)]
pub struct NCPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, DeformSeries>,
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let names: Vec<&str> = w.0.iter().map(|&s| self.alphabet.name(s)).collect();
            write!(f, "{c:?}·[{}]", names.join(" "))?;
        }
        Ok(())
    }
}

impl NCPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        Self { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: DeformSeries) -> Self {
        Self::from_word(alphabet, Vec::new(), c)
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, DeformSeries::one())
    }

    pub fn from_word(alphabet: &Arc<Alphabet>, word: Vec<u8>, c: DeformSeries) -> Self {
        let mut p = Self::zero(alphabet);
        p.accumulate(Word(word), c);
        p
    }

    /// The word spelled by generator names, with coefficient 1.
    pub fn word(alphabet: &Arc<Alphabet>, names: &[&str]) -> Result<Self> {
        let w = names.iter().map(|n| alphabet.index(n)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_word(alphabet, w, DeformSeries::one()))
    }

    pub fn generator(alphabet: &Arc<Alphabet>, name: &str) -> Result<Self> {
        Self::word(alphabet, &[name])
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &DeformSeries)> + '_ {
        self.terms.iter().map(|(w, c)| (w.0.as_slice(), c))
    }

    pub fn coefficient(&self, word: &[u8]) -> DeformSeries {
        self.terms.get(&Word(word.to_vec())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest numerator coefficient over all terms.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.max_abs()))
    }

    /// Largest word length present.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.0.len()).max().unwrap_or(0)
    }

    fn accumulate(&mut self, w: Word, c: DeformSeries) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    fn check(&self, other: &NCPoly) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &NCPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.plus(other))
    }

    pub fn sub(&self, other: &NCPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.minus(other))
    }

    pub fn mul(&self, other: &NCPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.times(other))
    }

    pub fn commutator(&self, other: &NCPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.times(other).minus(&other.times(self)))
    }

    pub(crate) fn plus(&self, other: &NCPoly) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), c.clone());
        }
        out
    }

    pub(crate) fn minus(&self, other: &NCPoly) -> Self {
        self.plus(&other.scale(&DeformSeries::real(-1.0)))
    }

    pub(crate) fn times(&self, other: &NCPoly) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut w = a.0.clone();
                w.extend_from_slice(&b.0);
                out.accumulate(Word(w), c * d);
            }
        }
        out
    }

    pub fn scale(&self, c: &DeformSeries) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (w, d) in &self.terms {
            out.accumulate(w.clone(), d * c);
        }
        out
    }

    pub fn scale_complex(&self, c: Complex64) -> Self {
        self.scale(&DeformSeries::constant(c))
    }

    /// Replace every coefficient by its value at the numeric parameter `q`.
    pub fn specialize(&self, q: f64) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.accumulate(w.clone(), DeformSeries::constant(c.eval(q)));
        }
        out
    }

    /// Polynomial of Taylor coefficients of order `j` in the parameter.
    pub fn taylor(&self, j: usize) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.accumulate(w.clone(), DeformSeries::constant(c.taylor(j)));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.alphabet), |acc, _| acc.times(self))
    }

    /// Apply a derivation given by its values on generators, extended by the
    /// Leibniz rule.
    pub fn derive_with(&self, images: &[NCPoly]) -> Result<Self> {
        if images.len() != self.alphabet.len() {
            return Err(Error::DimensionMismatch { expected: self.alphabet.len(), found: images.len() });
        }
        for im in images {
            self.check(im)?;
        }
        let mut out = Self::zero(&self.alphabet);
        for (w, c) in &self.terms {
            for (i, &s) in w.0.iter().enumerate() {
                let left = Self::from_word(&self.alphabet, w.0[..i].to_vec(), c.clone());
                let right = Self::from_word(&self.alphabet, w.0[i + 1..].to_vec(), DeformSeries::one());
                out = out.plus(&left.times(&images[s as usize]).times(&right));
            }
        }
        Ok(out)
    }
}

pub fn nc_multiply(p: &NCPoly, r: &NCPoly) -> Result<NCPoly> {
    p.mul(r)
}

pub fn nc_commutator(p: &NCPoly, r: &NCPoly) -> Result<NCPoly> {
    p.commutator(r)
}

/// Rewriting rule `lhs → rhs` with a two-letter left side.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub lhs: [u8; 2],
    pub rhs: NCPoly,
}

/// Rules generating a two-sided ideal, oriented along the degree-lexicographic
/// order of the alphabet.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    alphabet: Arc<Alphabet>,
    rules: Vec<Rule>,
    index: HashMap<[u8; 2], Vec<usize>>,
    budget: usize,
}

/// Default limit on single rewrite steps per normal-form computation.
pub const DEFAULT_REWRITE_BUDGET: usize = 1_000_000;

impl RewriteSystem {
    pub fn new(alphabet: &Arc<Alphabet>, rules: Vec<Rule>) -> Result<Self> {
        let mut index: HashMap<[u8; 2], Vec<usize>> = HashMap::new();
        for (i, rule) in rules.iter().enumerate() {
            if rule.rhs.alphabet() != alphabet || rule.lhs.iter().any(|&s| s as usize >= alphabet.len()) {
                return Err(Error::AlphabetMismatch);
            }
            let lhs = Word(rule.lhs.to_vec());
            if rule.rhs.terms.keys().any(|w| *w >= lhs) {
                return Err(Error::NonDecreasingRule(i));
            }
            index.entry(rule.lhs).or_default().push(i);
        }
        Ok(Self { alphabet: alphabet.clone(), rules, index, budget: DEFAULT_REWRITE_BUDGET })
    }

    /// Build a rule from generator names.
    pub fn rule(alphabet: &Arc<Alphabet>, lhs: [&str; 2], rhs: NCPoly) -> Result<Rule> {
        Ok(Rule { lhs: [alphabet.index(lhs[0])?, alphabet.index(lhs[1])?], rhs })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// The ideal generators `lhs − rhs`.
    pub fn relations(&self) -> Vec<NCPoly> {
        self.rules
            .iter()
            .map(|r| NCPoly::from_word(&self.alphabet, r.lhs.to_vec(), DeformSeries::one()).minus(&r.rhs))
            .collect()
    }

    fn redexes(&self, w: &[u8]) -> impl Iterator<Item = (usize, &Vec<usize>)> + '_ {
        let w = w.to_vec();
        (0..w.len().saturating_sub(1)).filter_map(move |i| self.index.get(&[w[i], w[i + 1]]).map(|r| (i, r)))
    }

    fn reduce(&self, p: &NCPoly, mut choose: impl FnMut(&[(usize, &Vec<usize>)]) -> (usize, usize)) -> Result<NCPoly> {
        if p.alphabet != self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut pending = p.terms.clone();
        let mut out = NCPoly::zero(&self.alphabet);
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_last() {
            let redexes: Vec<_> = self.redexes(&w.0).collect();
            if redexes.is_empty() {
                out.accumulate(w, c);
                continue;
            }
            steps += 1;
            if steps > self.budget {
                return Err(Error::NonTermination(self.budget));
            }
            let (pos, rule) = choose(&redexes);
            let rhs = &self.rules[rule].rhs;
            for (v, d) in &rhs.terms {
                let mut nw = w.0[..pos].to_vec();
                nw.extend_from_slice(&v.0);
                nw.extend_from_slice(&w.0[pos + 2..]);
                let coeff = &c * d;
                let key = Word(nw);
                match pending.get_mut(&key) {
                    Some(slot) => {
                        *slot = &*slot + &coeff;
                        if slot.is_zero() {
                            pending.remove(&key);
                        }
                    }
                    None if !coeff.is_zero() => {
                        pending.insert(key, coeff);
                    }
                    None => {}
                }
            }
        }
        Ok(out)
    }

    /// Reduce with the leftmost redex and the first matching rule.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        self.reduce(p, |r| (r[0].0, r[0].1[0]))
    }

    /// Reduce with redexes and rules chosen at random.
    pub fn normal_form_random(&self, p: &NCPoly, rng: &mut impl Rng) -> Result<NCPoly> {
        self.reduce(p, |r| {
            let (pos, rules) = r[rng.gen_range(0..r.len())];
            (pos, rules[rng.gen_range(0..rules.len())])
        })
    }

    pub fn is_normal(&self, p: &NCPoly) -> bool {
        p.terms.keys().all(|w| self.redexes(&w.0).next().is_none())
    }
}

pub fn normal_form(p: &NCPoly, system: &RewriteSystem) -> Result<NCPoly> {
    system.normal_form(p)
}

/// Reduce random words with two independent random strategies and compare.
pub fn confluence_probe(system: &RewriteSystem, trials: usize, max_len: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = system.alphabet.len() as u8;
    for _ in 0..trials {
        let len = rng.gen_range(0..=max_len);
        let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let p = NCPoly::from_word(&system.alphabet, w, DeformSeries::one());
        let a = system.normal_form_random(&p, &mut rng)?;
        let b = system.normal_form_random(&p, &mut rng)?;
        if !a.minus(&b).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn random_poly(rng: &mut impl Rng, alphabet: &Arc<Alphabet>, terms: usize, max_len: usize) -> NCPoly {
        let n = alphabet.len() as u8;
        (0..terms).fold(NCPoly::zero(alphabet), |acc, _| {
            let len = rng.gen_range(0..=max_len);
            let w = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let c = DeformSeries::polynomial(&[rng.gen_range(-3..=3) as f64, rng.gen_range(-2..=2) as f64]);
            acc.plus(&NCPoly::from_word(alphabet, w, c))
        })
    }

    #[test]
    fn words_and_products() {
        let al = Alphabet::new(&["a", "a+"]);
        let a = NCPoly::generator(&al, "a").unwrap();
        let ad = NCPoly::generator(&al, "a+").unwrap();
        assert_eq!(a.mul(&ad).unwrap(), NCPoly::word(&al, &["a", "a+"]).unwrap());
        assert!(a.commutator(&a).unwrap().is_zero());
        let n = ad.mul(&a).unwrap();
        let raw = a.commutator(&n).unwrap();
        let expected = NCPoly::word(&al, &["a", "a+", "a"]).unwrap().minus(&NCPoly::word(&al, &["a+", "a", "a"]).unwrap());
        assert_eq!(raw, expected);
        let other = Alphabet::new(&["x"]);
        assert_eq!(a.mul(&NCPoly::one(&other)), Err(Error::AlphabetMismatch));
        assert!(NCPoly::word(&al, &["b"]).is_err());
    }

    #[test]
    fn deglex_order() {
        assert!(Word(vec![1]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
    }

    #[test]
    fn rule_validation() {
        let al = Alphabet::new(&["a", "b"]);
        let up = NCPoly::word(&al, &["b", "a"]).unwrap();
        let rule = RewriteSystem::rule(&al, ["a", "b"], up).unwrap();
        assert_eq!(RewriteSystem::new(&al, vec![rule]).unwrap_err(), Error::NonDecreasingRule(0));
    }

    #[test]
    fn adversarial_system_is_not_confluent() {
        let al = Alphabet::new(&["a", "b"]);
        let a = NCPoly::generator(&al, "a").unwrap();
        let b = NCPoly::generator(&al, "b").unwrap();
        let sys = RewriteSystem::new(
            &al,
            vec![RewriteSystem::rule(&al, ["a", "b"], a).unwrap(), RewriteSystem::rule(&al, ["a", "b"], b).unwrap()],
        )
        .unwrap();
        assert!(!confluence_probe(&sys, 200, 6, 1).unwrap());
    }

    #[test]
    fn budget_exhaustion() {
        let al = Alphabet::new(&["a", "b"]);
        let sys = RewriteSystem::new(&al, vec![RewriteSystem::rule(&al, ["b", "a"], NCPoly::word(&al, &["a", "b"]).unwrap()).unwrap()])
            .unwrap()
            .with_budget(3);
        let w = NCPoly::word(&al, &["b", "b", "a", "a"]).unwrap();
        assert_eq!(sys.normal_form(&w), Err(Error::NonTermination(3)));
    }
}
