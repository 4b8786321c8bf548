//! Exact arithmetic in `F / gamma_{D+1}(F)` for a free group `F` of rank `d`.
//!
//! A free-group element is represented by its Magnus image: the letter `x_i`
//! maps to `1 + X_i` in the ring of noncommutative integer polynomials in
//! `X_1, ..., X_d`, and everything of degree greater than the truncation `D`
//! is discarded. An element lies in `gamma_w(F)` exactly when its image has
//! no nonconstant term of degree below `w` (for `w <= D + 1`), which makes
//! the lowest nonconstant degree a computable witness of lower central
//! series depth.
//!
//! Coefficients are arbitrary precision. Each homogeneous layer is stored
//! sparsely with words encoded as base-`d` integers of a fixed length.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hall::Commutator;

type Layer = BTreeMap<u64, BigInt>;

/// Lowest nonconstant degree of a Magnus series; `Infinite` for the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinite
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

fn encode(word: &[u32], d: usize) -> u64 {
    word.iter().fold(0u64, |acc, &letter| acc * d as u64 + (letter as u64 - 1))
}

fn decode(mut code: u64, len: usize, d: usize) -> Vec<u32> {
    let mut word = vec![0u32; len];
    for slot in word.iter_mut().rev() {
        *slot = (code % d as u64) as u32 + 1;
        code /= d as u64;
    }
    word
}

/// Renders a word as its letter indices, e.g. `[2, 1]` as `"21"`.
pub fn word_to_string(word: &[u32]) -> String {
    if word.iter().all(|&l| l < 10) {
        word.iter().map(|l| l.to_string()).collect()
    } else {
        word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(".")
    }
}

/// A truncated Magnus series `sum c_w X_w` over words of length `<= D`.
#[derive(Clone, PartialEq, Eq)]
pub struct MagnusElement {
    alphabet: usize,
    truncation: u32,
    layers: Vec<Layer>,
    // powers[k] = alphabet^k, for k <= truncation
    powers: Arc<[u64]>,
}

impl fmt::Debug for MagnusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (word, coeff) in self.terms() {
            map.entry(&word_to_string(&word), &coeff.to_string());
        }
        map.finish()
    }
}

impl MagnusElement {
    fn zero(alphabet: usize, truncation: u32) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::InvalidArgument("alphabet size must be at least 1".into()));
        }
        if truncation == 0 {
            return Err(Error::InvalidArgument("truncation must be at least 1".into()));
        }
        let mut powers = Vec::with_capacity(truncation as usize + 1);
        let mut p = 1u64;
        powers.push(p);
        for _ in 0..truncation {
            p = p.checked_mul(alphabet as u64).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{alphabet} letters at truncation {truncation} exceed the word encoding"
                ))
            })?;
            powers.push(p);
        }
        Ok(MagnusElement {
            alphabet,
            truncation,
            layers: vec![Layer::new(); truncation as usize + 1],
            powers: powers.into(),
        })
    }

    fn empty_like(&self) -> Self {
        MagnusElement {
            alphabet: self.alphabet,
            truncation: self.truncation,
            layers: vec![Layer::new(); self.truncation as usize + 1],
            powers: self.powers.clone(),
        }
    }

    pub fn identity(alphabet: usize, truncation: u32) -> Result<Self> {
        let mut e = Self::zero(alphabet, truncation)?;
        e.layers[0].insert(0, BigInt::one());
        Ok(e)
    }

    /// The image `1 + X_i` of the letter `x_i`.
    pub fn generator(index: u32, alphabet: usize, truncation: u32) -> Result<Self> {
        if index == 0 || index as usize > alphabet {
            return Err(Error::GeneratorOutOfRange { index, alphabet });
        }
        let mut e = Self::identity(alphabet, truncation)?;
        e.layers[1].insert(index as u64 - 1, BigInt::one());
        Ok(e)
    }

    /// Builds an element from explicit `(word, coefficient)` terms; words
    /// longer than the truncation are dropped.
    pub fn from_terms<I>(alphabet: usize, truncation: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut e = Self::zero(alphabet, truncation)?;
        for (word, coeff) in terms {
            if let Some(&bad) = word.iter().find(|&&l| l == 0 || l as usize > alphabet) {
                return Err(Error::GeneratorOutOfRange { index: bad, alphabet });
            }
            if word.len() > truncation as usize {
                continue;
            }
            *e.layers[word.len()].entry(encode(&word, alphabet)).or_default() += coeff;
        }
        e.prune();
        Ok(e)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn coefficient(&self, word: &[u32]) -> BigInt {
        if word.len() > self.truncation as usize
            || word.iter().any(|&l| l == 0 || l as usize > self.alphabet)
        {
            return BigInt::zero();
        }
        self.layers[word.len()]
            .get(&encode(word, self.alphabet))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms ordered by degree, then lexicographically by word.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &BigInt)> + '_ {
        self.layers.iter().enumerate().flat_map(move |(deg, layer)| {
            layer
                .iter()
                .map(move |(&code, coeff)| (decode(code, deg, self.alphabet), coeff))
        })
    }

    pub fn num_terms(&self) -> usize {
        self.layers.iter().map(Layer::len).sum()
    }

    pub fn is_group_element(&self) -> bool {
        self.layers[0].len() == 1 && self.layers[0].get(&0).is_some_and(One::is_one)
    }

    pub fn is_identity(&self) -> bool {
        self.is_group_element() && self.layers[1..].iter().all(Layer::is_empty)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet || self.truncation != other.truncation {
            return Err(Error::Mismatch {
                left_alphabet: self.alphabet,
                left_truncation: self.truncation,
                right_alphabet: other.alphabet,
                right_truncation: other.truncation,
            });
        }
        Ok(())
    }

    fn require_group_element(&self) -> Result<()> {
        if self.is_group_element() {
            Ok(())
        } else {
            Err(Error::NotGroupElement)
        }
    }

    fn prune(&mut self) {
        for layer in &mut self.layers {
            layer.retain(|_, v| !v.is_zero());
        }
    }

    /// Adds `x * y` into `out`, where `y` has degree `deg_y`.
    fn accumulate_layer_product(&self, out: &mut Layer, x: &Layer, y: &Layer, deg_y: usize) {
        let shift = self.powers[deg_y];
        for (&u, cu) in x {
            let base = u * shift;
            for (&v, cv) in y {
                let slot = out.entry(base + v).or_default();
                *slot += cu * cv;
            }
        }
    }

    /// Product with every monomial of degree above `max_degree` discarded.
    fn mul_up_to(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = self.empty_like();
        let top = max_degree.min(self.truncation as usize);
        for i in 0..=top {
            if self.layers[i].is_empty() {
                continue;
            }
            for j in 0..=top - i {
                if other.layers[j].is_empty() {
                    continue;
                }
                let mut target = std::mem::take(&mut out.layers[i + j]);
                self.accumulate_layer_product(&mut target, &self.layers[i], &other.layers[j], j);
                out.layers[i + j] = target;
            }
        }
        out.prune();
        out
    }

    fn sub_assign(&mut self, other: &Self) {
        for (mine, theirs) in self.layers.iter_mut().zip(&other.layers) {
            for (k, v) in theirs {
                *mine.entry(*k).or_default() -= v;
            }
        }
        self.prune();
    }

    /// The element minus its constant term.
    fn augmentation_part(&self) -> Self {
        let mut out = self.clone();
        out.layers[0].clear();
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_up_to(other, self.truncation as usize))
    }

    /// Two-sided inverse, by degree-wise back-substitution:
    /// `b_0 = 1`, `b_k = -sum_{j=1..k} A_j b_{k-j}` where `A = a - 1`.
    pub fn inv(&self) -> Result<Self> {
        self.require_group_element()?;
        let top = self.truncation as usize;
        let mut out = self.empty_like();
        out.layers[0].insert(0, BigInt::one());
        for k in 1..=top {
            let mut layer = Layer::new();
            for j in 1..=k {
                if self.layers[j].is_empty() || out.layers[k - j].is_empty() {
                    continue;
                }
                self.accumulate_layer_product(&mut layer, &self.layers[j], &out.layers[k - j], k - j);
            }
            layer.retain(|_, v| !v.is_zero());
            for v in layer.values_mut() {
                *v = -std::mem::take(v);
            }
            out.layers[k] = layer;
        }
        Ok(out)
    }

    pub fn pow(&self, exponent: i64) -> Result<Self> {
        self.require_group_element()?;
        let base = if exponent < 0 { self.inv()? } else { self.clone() };
        let mut result = Self::identity(self.alphabet, self.truncation)?;
        let mut square = base;
        let mut e = exponent.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_up_to(&square, self.truncation as usize);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul_up_to(&square, self.truncation as usize);
            }
        }
        Ok(result)
    }

    /// The group commutator `[a, b] = a^-1 b^-1 a b`.
    ///
    /// Evaluated as `1 + a^-1 b^-1 (AB - BA)` with `A = a - 1`, `B = b - 1`;
    /// the bracket `AB - BA` starts in degree `val(a) + val(b)`, so only a
    /// short prefix of `a^-1 b^-1` is ever needed.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        self.require_group_element()?;
        other.require_group_element()?;
        let top = self.truncation as usize;
        let a = self.augmentation_part();
        let b = other.augmentation_part();
        let mut bracket = a.mul_up_to(&b, top);
        bracket.sub_assign(&b.mul_up_to(&a, top));
        let mut out = match bracket.valuation() {
            Valuation::Infinite => return Self::identity(self.alphabet, self.truncation),
            Valuation::Finite(v) => {
                let headroom = top - v as usize;
                let prefix = self.inv()?.mul_up_to(&other.inv()?, headroom);
                prefix.mul_up_to(&bracket, top)
            }
        };
        out.layers[0].insert(0, BigInt::one());
        Ok(out)
    }

    /// Lowest degree `w >= 1` carrying a nonzero coefficient.
    pub fn valuation(&self) -> Valuation {
        self.layers
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, layer)| !layer.is_empty())
            .map_or(Valuation::Infinite, |(deg, _)| Valuation::Finite(deg as u32))
    }

    /// Homogeneous component in degree [`Self::valuation`].
    pub fn leading_term(&self) -> Result<LeadingTermVector> {
        self.require_group_element()?;
        match self.valuation() {
            Valuation::Infinite => Err(Error::IdentityElement),
            Valuation::Finite(w) => Ok(LeadingTermVector {
                alphabet: self.alphabet,
                weight: w,
                coords: self.layers[w as usize].clone(),
            }),
        }
    }
}

/// `1 + X_i` in the Magnus ring on `alphabet` letters truncated at `truncation`.
pub fn embed_generator(index: u32, alphabet: usize, truncation: u32) -> Result<MagnusElement> {
    MagnusElement::generator(index, alphabet, truncation)
}

pub fn group_commutator(a: &MagnusElement, b: &MagnusElement) -> Result<MagnusElement> {
    a.commutator(b)
}

pub fn lcs_valuation(a: &MagnusElement) -> Valuation {
    a.valuation()
}

/// Magnus image of a commutator tree: letters become generators and pairs
/// become group commutators.
pub fn eval_commutator(c: &Commutator, alphabet: usize, truncation: u32) -> Result<MagnusElement> {
    let mut ev = CommutatorEvaluator::new(alphabet, truncation)?;
    Ok(ev.eval(c)?.as_ref().clone())
}

/// Evaluates commutator trees with a cache of already evaluated subtrees.
#[derive(Debug)]
pub struct CommutatorEvaluator {
    alphabet: usize,
    truncation: u32,
    cache: HashMap<Commutator, Arc<MagnusElement>>,
}

impl CommutatorEvaluator {
    pub fn new(alphabet: usize, truncation: u32) -> Result<Self> {
        // Validates the parameters once up front.
        MagnusElement::identity(alphabet, truncation)?;
        Ok(CommutatorEvaluator {
            alphabet,
            truncation,
            cache: HashMap::new(),
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn identity(&self) -> MagnusElement {
        MagnusElement::identity(self.alphabet, self.truncation).expect("validated in new")
    }

    pub fn eval(&mut self, c: &Commutator) -> Result<Arc<MagnusElement>> {
        if c.weight() > self.truncation {
            return Err(Error::WeightExceedsTruncation {
                weight: c.weight(),
                truncation: self.truncation,
            });
        }
        if let Some(hit) = self.cache.get(c) {
            return Ok(hit.clone());
        }
        let value = match (c.as_leaf(), c.as_pair()) {
            (Some(g), _) => MagnusElement::generator(g.index(), self.alphabet, self.truncation)?,
            (None, Some((left, right))) => {
                let l = self.eval(left)?;
                let r = self.eval(right)?;
                l.commutator(&r)?
            }
            (None, None) => unreachable!("a commutator is a leaf or a pair"),
        };
        let value = Arc::new(value);
        self.cache.insert(c.clone(), value.clone());
        Ok(value)
    }

    /// `c^exponent`.
    pub fn eval_power(&mut self, c: &Commutator, exponent: i64) -> Result<MagnusElement> {
        self.eval(c)?.pow(exponent)
    }
}

/// Degree-`weight` homogeneous part of a Magnus series.
#[derive(Clone, PartialEq, Eq)]
pub struct LeadingTermVector {
    alphabet: usize,
    weight: u32,
    coords: Layer,
}

impl fmt::Debug for LeadingTermVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (word, coeff) in self.coords() {
            map.entry(&word_to_string(&word), &coeff.to_string());
        }
        map.finish()
    }
}

impl LeadingTermVector {
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn coords(&self) -> impl Iterator<Item = (Vec<u32>, &BigInt)> + '_ {
        self.coords
            .iter()
            .map(move |(&code, v)| (decode(code, self.weight as usize, self.alphabet), v))
    }

    pub fn coefficient(&self, word: &[u32]) -> BigInt {
        if word.len() != self.weight as usize
            || word.iter().any(|&l| l == 0 || l as usize > self.alphabet)
        {
            return BigInt::zero();
        }
        self.coords
            .get(&encode(word, self.alphabet))
            .cloned()
            .unwrap_or_default()
    }
}

/// Rank over the rationals of the coefficient matrix whose rows are the
/// given vectors, by fraction-free (Bareiss) elimination.
pub fn integer_rank(vectors: &[LeadingTermVector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    if let Some(bad) = vectors
        .iter()
        .find(|v| v.weight != first.weight || v.alphabet != first.alphabet)
    {
        return Err(Error::InvalidArgument(format!(
            "integer_rank needs vectors of one weight and alphabet: got weight {} / {} letters and weight {} / {} letters",
            first.weight, first.alphabet, bad.weight, bad.alphabet
        )));
    }
    let columns: BTreeMap<u64, usize> = vectors
        .iter()
        .flat_map(|v| v.coords.keys().copied())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    let rows = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigInt::zero(); columns.len()];
            for (k, val) in &v.coords {
                row[columns[k]] = val.clone();
            }
            row
        })
        .collect();
    Ok(bareiss_rank(rows))
}

/// Rank of a dense integer matrix. Every entry after step `k` is a
/// `(k+1)`-minor of the input, so the division by the previous pivot is exact.
pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // Smallest nonzero pivot keeps intermediate entries short.
        let Some(pivot_row) = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()))
        else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let p = pivot[col].clone();
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..ncols {
                let updated = &p * &row[j] - &factor * &pivot[j];
                row[j] = if prev.is_one() { updated } else { updated / &prev };
            }
        }
        prev = p;
        rank += 1;
    }
    rank
}
