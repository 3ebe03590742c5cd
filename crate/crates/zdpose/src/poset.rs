//! Finite posets with least element and the order-theoretic primitives
//! everything else consumes: lower cones, down-sets, annihilators, ideals,
//! primality, minimal elements.
//!
//! Elements are canonical indices into a label table; after construction the
//! least element always sits at index 0. Subsets of the poset are `u64`
//! bitmasks, which caps instances at 64 elements — far above anything the
//! sweeps or the named examples need.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Largest poset this representation supports.
pub const MAX_ELEMENTS: usize = 64;

/// Index of an element in a poset's label table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(pub usize);

/// An arbitrary subset of a poset's elements (bitmask semantics).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Subset {
    bits: u64,
}

impl Subset {
    pub const EMPTY: Subset = Subset { bits: 0 };

    pub fn from_bits(bits: u64) -> Subset {
        Subset { bits }
    }

    pub fn singleton(x: ElementId) -> Subset {
        Subset { bits: 1 << x.0 }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, x: ElementId) -> bool {
        self.bits >> x.0 & 1 == 1
    }

    pub fn insert(&mut self, x: ElementId) {
        self.bits |= 1 << x.0;
    }

    pub fn remove(&mut self, x: ElementId) {
        self.bits &= !(1 << x.0);
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset { bits: self.bits | other.bits }
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset { bits: self.bits & other.bits }
    }

    pub fn without(self, other: Subset) -> Subset {
        Subset { bits: self.bits & !other.bits }
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_strict_subset_of(self, other: Subset) -> bool {
        self.bits != other.bits && self.is_subset_of(other)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<ElementId> {
        if self.bits == 0 {
            None
        } else {
            Some(ElementId(self.bits.trailing_zeros() as usize))
        }
    }

    /// Members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = ElementId> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(ElementId(i))
            }
        })
    }
}

impl FromIterator<ElementId> for Subset {
    fn from_iter<T: IntoIterator<Item = ElementId>>(iter: T) -> Subset {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

/// A down-closed, non-empty subset of a poset. Always contains the least
/// element. Equality is bitmask equality.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IdealSet(Subset);

impl IdealSet {
    pub(crate) fn from_subset_unchecked(s: Subset) -> IdealSet {
        IdealSet(s)
    }

    pub fn members(self) -> Subset {
        self.0
    }

    pub fn contains(self, x: ElementId) -> bool {
        self.0.contains(x)
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset_of(self, other: IdealSet) -> bool {
        self.0.is_subset_of(other.0)
    }

    pub fn is_strict_subset_of(self, other: IdealSet) -> bool {
        self.0.is_strict_subset_of(other.0)
    }
}

/// A finite poset with least element.
///
/// `up[i]` / `down[i]` are the closed up-set and down-set bitmasks of element
/// `i`; both include `i` itself. The least element is index 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<u64>,
    down: Vec<u64>,
}

fn valid_label(l: &str) -> bool {
    !l.is_empty() && !l.contains(char::is_whitespace) && !l.contains('<') && !l.contains('#')
}

impl Poset {
    /// Builds a poset from labels and generating pairs `(a, b)` meaning
    /// `a < b`. The relation is the reflexive-transitive closure of the
    /// generators; it must be antisymmetric and possess a least element,
    /// which is moved to index 0 (other elements keep their relative order).
    pub fn build(labels: Vec<String>, pairs: &[(String, String)]) -> Result<Poset> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NoElements);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements { n, max: MAX_ELEMENTS });
        }
        for l in &labels {
            if !valid_label(l) {
                return Err(Error::InvalidLabel(l.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }

        let index_of = |l: &str| -> Result<usize> {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };

        // Reflexive relation plus generators, then Warshall closure.
        let mut up: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for (a, b) in pairs {
            let (i, j) = (index_of(a)?, index_of(b)?);
            up[i] |= 1 << j;
        }
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }

        for i in 0..n {
            for j in i + 1..n {
                if up[i] >> j & 1 == 1 && up[j] >> i & 1 == 1 {
                    return Err(Error::Cycle(labels[i].clone(), labels[j].clone()));
                }
            }
        }

        let full = full_mask(n);
        let zero = (0..n).find(|&i| up[i] == full).ok_or(Error::NoLeastElement)?;

        // Relocate the least element to index 0.
        let mut order: Vec<usize> = Vec::with_capacity(n);
        order.push(zero);
        order.extend((0..n).filter(|&i| i != zero));
        let mut new_of_old = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        let remap = |mask: u64| -> u64 {
            let mut out = 0u64;
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                out |= 1 << new_of_old[i];
            }
            out
        };

        let new_labels: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        let new_up: Vec<u64> = order.iter().map(|&i| remap(up[i])).collect();
        let mut down = vec![0u64; n];
        for i in 0..n {
            let mut m = new_up[i];
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                down[j] |= 1 << i;
            }
        }

        Ok(Poset { labels: new_labels, up: new_up, down })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The least element (always index 0).
    pub fn zero(&self) -> ElementId {
        ElementId(0)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x.0]
    }

    pub fn find(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label).map(ElementId)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.len()).map(ElementId)
    }

    /// All elements as a subset.
    pub fn universe(&self) -> Subset {
        Subset::from_bits(full_mask(self.len()))
    }

    /// P^× = all elements except the least.
    pub fn nonzero(&self) -> Subset {
        Subset::from_bits(full_mask(self.len()) & !1)
    }

    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.up[a.0] >> b.0 & 1 == 1
    }

    pub fn strictly_less(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.leq(a, b)
    }

    /// L(x, y): the set of common lower bounds of `x` and `y`. Down-closed
    /// and never empty (it contains the least element).
    pub fn lower_cone(&self, x: ElementId, y: ElementId) -> IdealSet {
        IdealSet(Subset::from_bits(self.down[x.0] & self.down[y.0]))
    }

    /// The principal ideal of `x`: everything below or equal to `x`.
    pub fn down_set(&self, x: ElementId) -> IdealSet {
        IdealSet(Subset::from_bits(self.down[x.0]))
    }

    pub(crate) fn down_mask(&self, x: ElementId) -> u64 {
        self.down[x.0]
    }

    /// Minimal elements of a non-empty subset `q`: members with no other
    /// member of `q` strictly below them.
    pub fn minimal_elements(&self, q: Subset) -> Result<Subset> {
        if q.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(q.iter()
            .filter(|&x| self.down[x.0] & q.bits() == 1 << x.0)
            .collect())
    }

    /// ann(x): all y with L(x, y) = {0}. Always an ideal. For the least
    /// element this is the whole poset (L(0, y) = {0} for every y); callers
    /// that need zero-divisor semantics must not pass the least element.
    pub fn annihilator(&self, x: ElementId) -> IdealSet {
        let mut bits = 0u64;
        for y in 0..self.len() {
            if self.down[x.0] & self.down[y] == 1 {
                bits |= 1 << y;
            }
        }
        IdealSet(Subset::from_bits(bits))
    }

    /// Z(P)^×: non-zero elements whose annihilator exceeds {0}.
    pub fn zero_divisors(&self) -> Subset {
        self.nonzero()
            .iter()
            .filter(|&x| self.annihilator(x).len() >= 2)
            .collect()
    }

    /// True iff `s` is non-empty and down-closed.
    pub fn is_ideal(&self, s: Subset) -> bool {
        !s.is_empty() && s.iter().all(|x| self.down[x.0] & s.bits() == self.down[x.0])
    }

    /// True iff `s` is a proper ideal and L(x, y) ⊆ s forces x ∈ s or y ∈ s.
    pub fn is_prime_ideal(&self, s: Subset) -> bool {
        if !self.is_ideal(s) || s.bits() == full_mask(self.len()) {
            return false;
        }
        let n = self.len();
        for x in 0..n {
            for y in x..n {
                if self.down[x] & self.down[y] & !s.bits() == 0
                    && !s.contains(ElementId(x))
                    && !s.contains(ElementId(y))
                {
                    return false;
                }
            }
        }
        true
    }

    /// All ideals of the poset, sorted by bitmask value. Brute-force over
    /// subsets; refuses posets above the configured oracle cap.
    pub fn enumerate_ideals(&self) -> Result<Vec<IdealSet>> {
        let n = self.len();
        let cap = crate::oracle_caps().ideal_elements;
        if n > cap {
            return Err(Error::OracleCapExceeded { n, cap });
        }
        let mut out = Vec::new();
        for bits in 1..=full_mask(n) {
            let s = Subset::from_bits(bits);
            if self.is_ideal(s) {
                out.push(IdealSet(s));
            }
        }
        Ok(out)
    }

    /// Covering pairs (a, b): a < b with nothing strictly between.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || self.up[a] >> b & 1 == 0 {
                    continue;
                }
                let between = (0..n).any(|k| {
                    k != a && k != b && self.up[a] >> k & 1 == 1 && self.up[k] >> b & 1 == 1
                });
                if !between {
                    out.push((ElementId(a), ElementId(b)));
                }
            }
        }
        out.sort();
        out
    }

    pub fn subset_labels(&self, s: Subset) -> Vec<String> {
        s.iter().map(|x| self.label(x).to_string()).collect()
    }

    pub fn render_subset(&self, s: Subset) -> String {
        format!("[{}]", self.subset_labels(s).join(", "))
    }

    /// Canonical text encoding: one `elements:` line in index order followed
    /// by one `rel:` line per covering pair. Parsing it back reproduces the
    /// poset exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::from("elements:");
        for l in &self.labels {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
        for (a, b) in self.covers() {
            out.push_str(&format!("rel: {} < {}\n", self.label(a), self.label(b)));
        }
        out
    }

    /// Parses the line-based text format: `#` starts a comment, one
    /// `elements: a b c` line declares labels, `rel: a < b` lines declare
    /// generating pairs. Errors carry 1-based line numbers.
    pub fn parse_text(input: &str) -> Result<Poset> {
        let mut labels: Option<Vec<String>> = None;
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("elements:") {
                if labels.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "duplicate `elements:` line".into(),
                    });
                }
                let ls: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if ls.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "`elements:` line declares no labels".into(),
                    });
                }
                labels = Some(ls);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let parts: Vec<&str> = rest.split('<').map(str::trim).collect();
                if parts.len() != 2 || parts[0].is_empty() || parts[1].is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected `rel: a < b`, got `{}`", line),
                    });
                }
                let known = labels.as_ref().ok_or(Error::Parse {
                    line: line_no,
                    msg: "`rel:` line before `elements:` line".into(),
                })?;
                for p in &parts {
                    if !known.iter().any(|l| l == p) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("unknown label `{}`", p),
                        });
                    }
                }
                pairs.push((parts[0].to_string(), parts[1].to_string()));
            } else {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unrecognized line `{}`", line),
                });
            }
        }
        let labels = labels.ok_or(Error::Parse {
            line: input.lines().count().max(1),
            msg: "missing `elements:` line".into(),
        })?;
        Poset::build(labels, &pairs)
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
