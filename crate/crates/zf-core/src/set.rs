use std::fmt;

/// Hard cap on graph order imposed by the bitmask representation.
pub const MAX_VERTICES: usize = 64;

/// A subset of vertex ids 0..64, stored as a bitmask.
///
/// Copy-cheap and hashable, so closures can be memoized on the raw mask.
/// All operations are pure; "mutating" methods return a new set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set {0, 1, .., n-1}.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex set capacity is {MAX_VERTICES}");
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending member lists, e.g.
    /// {0,5} < {1,2} even though the {1,2} mask is numerically smaller.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over all k-element subsets of a ground list of ids, in
/// lexicographic order of the ascending member lists.
pub struct Combinations {
    ground: Vec<usize>,
    indices: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(ground: Vec<usize>, k: usize) -> Self {
        let done = k > ground.len();
        Combinations {
            ground,
            indices: (0..k).collect(),
            started: false,
            done,
        }
    }

    fn current(&self) -> VertexSet {
        self.indices.iter().map(|&i| self.ground[i]).collect()
    }

    /// Classic lexicographic successor on the index tuple.
    fn advance(&mut self) -> bool {
        let k = self.indices.len();
        let n = self.ground.len();
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.indices[i] != i + n - k {
                break;
            }
        }
        self.indices[i] += 1;
        for j in i + 1..k {
            self.indices[j] = self.indices[j - 1] + 1;
        }
        true
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// All k-subsets of {0, .., n-1} in lexicographic order.
pub fn subsets_of_range(n: usize, k: usize) -> Combinations {
    Combinations::new((0..n).collect(), k)
}

/// All k-subsets of an arbitrary base set, in lexicographic order.
pub fn subsets_of_set(base: VertexSet, k: usize) -> Combinations {
    Combinations::new(base.to_vec(), k)
}
