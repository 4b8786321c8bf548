//! Commutators on an ordered alphabet and Hall bases of basic commutators.
//!
//! A pair `[b, a]` is written larger-first: it is basic when both parts are
//! basic, `b > a`, and, if `b = [b1, b2]`, also `b2 <= a`. Commutators are
//! ordered by weight first and then lexicographically on `(left, right)`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::witt::chi;

/// Default cap on the number of elements an enumeration may produce.
pub const DEFAULT_MAX_ELEMENTS: usize = 10_000_000;

/// A letter `x_i` of the alphabet, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(u32);

impl Generator {
    pub fn new(index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidArgument("generator index must be at least 1".into()));
        }
        Ok(Generator(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Node {
    Leaf(Generator),
    Pair {
        left: Commutator,
        right: Commutator,
        weight: u32,
    },
}

/// A bracketed word over the alphabet. Cheap to clone; subtrees are shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Commutator(Arc<Node>);

impl Commutator {
    pub fn leaf(generator: Generator) -> Self {
        Commutator(Arc::new(Node::Leaf(generator)))
    }

    /// Shorthand for `leaf(Generator::new(index))`.
    pub fn generator(index: u32) -> Result<Self> {
        Generator::new(index).map(Self::leaf)
    }

    /// The bracket `[left, right]`.
    pub fn pair(left: Commutator, right: Commutator) -> Self {
        let weight = left.weight() + right.weight();
        Commutator(Arc::new(Node::Pair { left, right, weight }))
    }

    pub fn weight(&self) -> u32 {
        match &*self.0 {
            Node::Leaf(_) => 1,
            Node::Pair { weight, .. } => *weight,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(&*self.0, Node::Leaf(_))
    }

    pub fn as_leaf(&self) -> Option<Generator> {
        match &*self.0 {
            Node::Leaf(g) => Some(*g),
            Node::Pair { .. } => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Commutator, &Commutator)> {
        match &*self.0 {
            Node::Leaf(_) => None,
            Node::Pair { left, right, .. } => Some((left, right)),
        }
    }

    /// Largest generator index occurring in the tree.
    pub fn max_generator(&self) -> u32 {
        match &*self.0 {
            Node::Leaf(g) => g.index(),
            Node::Pair { left, right, .. } => left.max_generator().max(right.max_generator()),
        }
    }
}

impl fmt::Display for Commutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Leaf(g) => write!(f, "x{}", g.index()),
            Node::Pair { left, right, .. } => write!(f, "[{left},{right}]"),
        }
    }
}

impl fmt::Debug for Commutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for Commutator {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_commutators(self, other)
    }
}

impl PartialOrd for Commutator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on commutators: lighter first, then leaves by index and
/// pairs lexicographically on `(left, right)`.
pub fn compare_commutators(a: &Commutator, b: &Commutator) -> Ordering {
    if Arc::ptr_eq(&a.0, &b.0) {
        return Ordering::Equal;
    }
    a.weight().cmp(&b.weight()).then_with(|| match (&*a.0, &*b.0) {
        (Node::Leaf(x), Node::Leaf(y)) => x.cmp(y),
        (
            Node::Pair { left: l1, right: r1, .. },
            Node::Pair { left: l2, right: r2, .. },
        ) => compare_commutators(l1, l2).then_with(|| compare_commutators(r1, r2)),
        // Equal weight forces both to be leaves or both pairs.
        (Node::Leaf(_), Node::Pair { .. }) => Ordering::Less,
        (Node::Pair { .. }, Node::Leaf(_)) => Ordering::Greater,
    })
}

pub fn is_basic(c: &Commutator) -> bool {
    match &*c.0 {
        Node::Leaf(_) => true,
        Node::Pair { left: b, right: a, .. } => {
            b > a
                && is_basic(b)
                && is_basic(a)
                && b.as_pair().is_none_or(|(_, b2)| b2 <= a)
        }
    }
}

/// All basic commutators on `d` letters up to `max_weight`, in order.
#[derive(Debug, Clone)]
pub struct HallBasis {
    alphabet_size: u32,
    max_weight: u32,
    elements: Vec<Commutator>,
    // offsets[w] is the index of the first element of weight w; len max_weight + 2
    offsets: Vec<usize>,
}

impl HallBasis {
    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn elements(&self) -> &[Commutator] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements of exactly weight `w` (empty outside `1..=max_weight`).
    pub fn of_weight(&self, w: u32) -> &[Commutator] {
        if w == 0 || w > self.max_weight {
            return &[];
        }
        let w = w as usize;
        &self.elements[self.offsets[w]..self.offsets[w + 1]]
    }

    /// Elements with weight in `lo..=hi`, order preserved.
    pub fn weight_range(&self, lo: u32, hi: u32) -> &[Commutator] {
        let lo = lo.max(1);
        let hi = hi.min(self.max_weight);
        if lo > hi {
            return &[];
        }
        &self.elements[self.offsets[lo as usize]..self.offsets[hi as usize + 1]]
    }

    pub fn into_elements(self) -> Vec<Commutator> {
        self.elements
    }
}

/// Enumerates the Hall basis with the default element cap.
pub fn enumerate_hall_basis(d: u32, max_weight: u32) -> Result<HallBasis> {
    enumerate_hall_basis_capped(d, max_weight, DEFAULT_MAX_ELEMENTS)
}

pub fn enumerate_hall_basis_capped(d: u32, max_weight: u32, cap: usize) -> Result<HallBasis> {
    if d == 0 {
        return Err(Error::InvalidArgument("alphabet size must be at least 1".into()));
    }
    if max_weight == 0 {
        return Err(Error::InvalidArgument("maximum weight must be at least 1".into()));
    }

    let mut expected = Vec::with_capacity(max_weight as usize + 1);
    expected.push(0usize);
    let mut total = BigUint::from(0u32);
    for w in 1..=max_weight {
        let count = chi(w, d)?;
        total += &count;
        if total > BigUint::from(cap) {
            return Err(Error::ResourceLimit {
                requested: total.to_string(),
                cap,
            });
        }
        expected.push(count.to_usize().expect("bounded by cap"));
    }

    let mut by_weight: Vec<Vec<Commutator>> = vec![Vec::new(); max_weight as usize + 1];
    by_weight[1] = (1..=d).map(|i| Commutator::leaf(Generator(i))).collect();

    for w in 2..=max_weight as usize {
        let mut level = Vec::with_capacity(expected[w]);
        for wa in 1..=w / 2 {
            let wb = w - wa;
            for b in &by_weight[wb] {
                let b_right = b.as_pair().map(|(_, r)| r);
                for a in &by_weight[wa] {
                    // Same weight: candidates for `a` run in increasing order.
                    if wa == wb && a >= b {
                        break;
                    }
                    if b_right.is_none_or(|b2| b2 <= a) {
                        level.push(Commutator::pair(b.clone(), a.clone()));
                    }
                }
            }
        }
        level.sort();
        if level.len() != expected[w] {
            return Err(Error::Internal(format!(
                "enumerated {} basic commutators of weight {w} on {d} letters, Witt count is {}",
                level.len(),
                expected[w]
            )));
        }
        by_weight[w] = level;
    }

    let mut offsets = vec![0usize; max_weight as usize + 2];
    let mut elements = Vec::with_capacity(by_weight.iter().map(Vec::len).sum());
    for w in 1..=max_weight as usize {
        offsets[w] = elements.len();
        elements.append(&mut by_weight[w]);
    }
    offsets[max_weight as usize + 1] = elements.len();

    Ok(HallBasis {
        alphabet_size: d,
        max_weight,
        elements,
        offsets,
    })
}

/// Basic commutators on `d` letters with weight in `w_lo..=w_hi`.
pub fn basic_commutators_of_weight_range(d: u32, w_lo: u32, w_hi: u32) -> Result<Vec<Commutator>> {
    if w_lo == 0 || w_lo > w_hi {
        return Err(Error::InvalidArgument(format!(
            "weight range must satisfy 1 <= lo <= hi, got {w_lo}..={w_hi}"
        )));
    }
    let basis = enumerate_hall_basis(d, w_hi)?;
    Ok(basis.weight_range(w_lo, w_hi).to_vec())
}
