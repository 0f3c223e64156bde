//! Degree sequences and the sequence-level predicates: Erdős–Gallai
//! graphicality, membership in the bounded class `K(a, b)`, and the
//! inequalities characterizing connected k-factorability.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonincreasing sequence of vertex degrees.
///
/// Zero entries are allowed so that derived sequences such as `d - k` stay
/// representable; [`DegreeSequence::positive`] rejects them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(position) = degrees.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonincreasing {
                position: position + 1,
            });
        }
        Ok(Self { degrees })
    }

    /// Like [`DegreeSequence::new`] but also requires every degree to be positive.
    pub fn positive(degrees: Vec<usize>) -> Result<Self> {
        let seq = Self::new(degrees)?;
        if seq.min() == 0 {
            let position = seq.degrees.iter().position(|&d| d == 0).unwrap();
            return Err(Error::ZeroDegree { position });
        }
        Ok(seq)
    }

    /// Sorts into nonincreasing order before validating.
    pub fn from_unsorted(mut degrees: Vec<usize>) -> Result<Self> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.degrees[0]
    }

    pub fn min(&self) -> usize {
        *self.degrees.last().unwrap()
    }

    pub fn has_even_sum(&self) -> bool {
        self.sum().is_multiple_of(2)
    }

    /// `(d_1 - k, ..., d_n - k)`.
    pub fn subtract_k(&self, k: usize) -> Result<Self> {
        if self.min() < k {
            return Err(Error::KTooLarge {
                k,
                min_degree: self.min(),
            });
        }
        Ok(Self {
            degrees: self.degrees.iter().map(|d| d - k).collect(),
        })
    }

    pub fn add_k(&self, k: usize) -> Self {
        Self {
            degrees: self.degrees.iter().map(|d| d + k).collect(),
        }
    }

    /// Per-vertex degrees `n - 1 - d_i` of the complement, in vertex order
    /// (nondecreasing, so not itself a `DegreeSequence`). `None` if some
    /// degree exceeds `n - 1`.
    pub fn complement_degrees(&self) -> Option<Vec<usize>> {
        let top = self.len() - 1;
        self.degrees
            .iter()
            .map(|&d| top.checked_sub(d))
            .collect()
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = Error;

    fn try_from(degrees: Vec<usize>) -> Result<Self> {
        Self::new(degrees)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(seq: DegreeSequence) -> Self {
        seq.degrees
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Erdős–Gallai test. Runs in `O(n)` on a sorted sequence.
///
/// For each `k` the right-hand side `sum_{i>k} min(k, d_i)` splits at the
/// number of entries with `d_i >= k`, which only shrinks as `k` grows, so a
/// single pointer walks it down.
pub fn is_graphic(seq: &DegreeSequence) -> bool {
    let d = seq.degrees();
    let n = d.len();
    if !seq.has_even_sum() {
        return false;
    }
    if d[0] >= n {
        return false;
    }
    // suffix[i] = d[i] + ... + d[n-1]
    let mut suffix = vec![0u128; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + d[i] as u128;
    }
    let mut at_least = n; // number of entries with d_i >= k
    let mut prefix = 0u128;
    for k in 1..=n {
        prefix += d[k - 1] as u128;
        while at_least > 0 && d[at_least - 1] < k {
            at_least -= 1;
        }
        let kk = k as u128;
        let capped = at_least.saturating_sub(k) as u128 * kk;
        let rest = suffix[at_least.max(k)];
        if prefix > kk * (kk - 1) + capped + rest {
            return false;
        }
    }
    true
}

/// Upper and lower degree bounds of the class `K(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KabParams {
    pub a: u64,
    pub b: u64,
}

impl KabParams {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if b == 0 || a < b {
            return Err(Error::InvalidBounds { a, b });
        }
        Ok(Self { a, b })
    }

    /// The length threshold `(a + b + 1)^2 / 4b`, exact.
    pub fn threshold(&self) -> Ratio<u64> {
        let s = self.a + self.b + 1;
        Ratio::new(s * s, 4 * self.b)
    }

    /// `4 / (2 + b - a)`; only defined when `a - b < 2`.
    pub fn connected_threshold(&self) -> Result<Ratio<u64>> {
        let gap = self.a - self.b;
        if gap >= 2 {
            return Err(Error::ConnectedBoundUnavailable {
                a: self.a,
                b: self.b,
            });
        }
        Ok(Ratio::new(4, 2 - gap))
    }
}

/// Which lower bound on the sequence length to enforce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthBound {
    /// Graphicality only: `n > l`.
    Plain,
    /// Additionally `n > 4 / (2 + b - a)`, which forces the connectivity inequalities.
    Connected,
}

/// Smallest integer strictly greater than the selected threshold.
pub fn min_length(p: &KabParams, bound: LengthBound) -> Result<usize> {
    let mut threshold = p.threshold();
    if bound == LengthBound::Connected {
        threshold = threshold.max(p.connected_threshold()?);
    }
    Ok((threshold.floor().to_integer() + 1) as usize)
}

/// Membership in `K(a, b)` together with the even-sum and `n >= l` conditions
/// under which membership implies graphicality.
pub fn in_kab(seq: &DegreeSequence, p: &KabParams) -> bool {
    let n = seq.len() as u64;
    seq.max() as u64 <= p.a
        && seq.min() as u64 >= p.b
        && seq.has_even_sum()
        && Ratio::from_integer(n) >= p.threshold()
}

/// Outcome of the connected k-factor inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RaoVerdict {
    ConnectedFactorable,
    NotConnectedFactorable { witness: usize },
}

impl RaoVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, RaoVerdict::ConnectedFactorable)
    }

    pub fn witness(&self) -> Option<usize> {
        match self {
            RaoVerdict::ConnectedFactorable => None,
            RaoVerdict::NotConnectedFactorable { witness } => Some(*witness),
        }
    }
}

/// Checks `sum_{i<=s} d_i < s(n-s-1) + sum_{i<s} d_{n-i}` for every
/// `1 <= s < n/2` and reports the smallest failing `s`.
pub fn rao_connected(seq: &DegreeSequence) -> RaoVerdict {
    let d = seq.degrees();
    let n = d.len();
    let mut head = 0i128;
    let mut tail = 0i128;
    // s < n/2  <=>  2s < n
    for s in (1..).take_while(|s| 2 * s < n) {
        head += d[s - 1] as i128;
        tail += d[n - s] as i128;
        let si = s as i128;
        if head >= si * (n as i128 - si - 1) + tail {
            return RaoVerdict::NotConnectedFactorable { witness: s };
        }
    }
    RaoVerdict::ConnectedFactorable
}

/// Both `d` and `d - k` graphic, with `d_n >= k`.
pub fn is_k_factorable(seq: &DegreeSequence, k: usize) -> bool {
    is_graphic(seq)
        && seq
            .subtract_k(k)
            .map(|reduced| is_graphic(&reduced))
            .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[usize]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    /// Direct transcription of the inequalities, quadratic.
    fn graphic_naive(d: &[usize]) -> bool {
        let n = d.len();
        if d.iter().sum::<usize>() % 2 == 1 {
            return false;
        }
        (1..=n).all(|k| {
            let lhs: usize = d[..k].iter().sum();
            let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
            lhs <= rhs
        })
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(DegreeSequence::new(vec![]), Err(Error::EmptySequence));
        assert_eq!(
            DegreeSequence::new(vec![1, 2]),
            Err(Error::NotNonincreasing { position: 1 })
        );
        assert_eq!(
            DegreeSequence::positive(vec![2, 1, 0]),
            Err(Error::ZeroDegree { position: 2 })
        );
        assert_eq!(
            DegreeSequence::from_unsorted(vec![1, 3, 2]).unwrap().degrees(),
            &[3, 2, 1]
        );
    }

    #[test]
    fn graphic_examples() {
        assert!(is_graphic(&seq(&[3, 3, 2, 2, 2, 2])));
        assert!(!is_graphic(&seq(&[1, 1, 1])));
        assert!(!is_graphic(&seq(&[3, 3, 3, 1])));
        assert!(is_graphic(&seq(&[0])));
        assert!(is_graphic(&seq(&[1, 1, 0, 0, 0, 0])));
        assert!(!is_graphic(&seq(&[4, 1, 1, 1])));
    }

    #[test]
    fn graphic_matches_naive_on_random_input() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5000 {
            let n = rng.random_range(1..30);
            let mut d: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
            d.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(is_graphic(&seq(&d)), graphic_naive(&d), "{d:?}");
        }
    }

    #[test]
    fn kab_membership() {
        let p = KabParams::new(10, 3).unwrap();
        let d = seq(&[10, 10, 10, 10, 9, 9, 9, 9, 8, 8, 8, 8, 7, 7, 7, 7, 6, 4]);
        assert!(in_kab(&d, &p));
        assert!(is_graphic(&d));

        let p = KabParams::new(2, 2).unwrap();
        assert_eq!(p.threshold(), Ratio::new(25, 8));
        assert!(!in_kab(&seq(&[2, 2]), &p));

        let p = KabParams::new(6, 5).unwrap();
        assert!(in_kab(&seq(&[6, 6, 6, 6, 5, 5, 5, 5]), &p));
        // n = 7 is below l = 7.2
        assert!(!in_kab(&seq(&[6, 6, 6, 6, 6, 5, 5]), &p));
    }

    #[test]
    fn kab_threshold_is_inclusive_at_integers() {
        // a = 3, b = 1: l = 25/4; a = 7, b = 1: l = 81/4; a = 2, b = 1: l = 4
        let p = KabParams::new(2, 1).unwrap();
        assert_eq!(p.threshold(), Ratio::from_integer(4));
        assert!(in_kab(&seq(&[2, 2, 1, 1]), &p));
        assert!(!in_kab(&seq(&[2, 1, 1]), &p));
    }

    #[test]
    fn bounds_validation() {
        assert!(KabParams::new(3, 4).is_err());
        assert!(KabParams::new(3, 0).is_err());
    }

    #[test]
    fn min_length_examples() {
        let p = KabParams::new(10, 3).unwrap();
        assert_eq!(min_length(&p, LengthBound::Plain), Ok(17));
        let p = KabParams::new(6, 5).unwrap();
        assert_eq!(min_length(&p, LengthBound::Connected), Ok(8));
        // l = 9/4, so the first integer above it is 3.
        let p = KabParams::new(1, 1).unwrap();
        assert_eq!(p.threshold(), Ratio::new(9, 4));
        assert_eq!(min_length(&p, LengthBound::Plain), Ok(3));
        // a = b: connected threshold 4/2 = 2 is dominated by l.
        assert_eq!(min_length(&p, LengthBound::Connected), Ok(3));
        let p = KabParams::new(9, 3).unwrap();
        assert_eq!(
            min_length(&p, LengthBound::Connected),
            Err(Error::ConnectedBoundUnavailable { a: 9, b: 3 })
        );
        let p = KabParams::new(5, 3).unwrap();
        assert!(min_length(&p, LengthBound::Connected).is_err());
        assert_eq!(min_length(&p, LengthBound::Plain), Ok(7)); // l = 81/12
    }

    #[test]
    fn rao_examples() {
        assert!(rao_connected(&seq(&[3, 3, 2, 2, 2, 2])).holds());
        let family = [15, 15, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 2, 2];
        assert_eq!(
            rao_connected(&seq(&family)),
            RaoVerdict::NotConnectedFactorable { witness: 2 }
        );
        assert_eq!(
            rao_connected(&seq(&[9, 9, 9, 6, 6, 6, 6, 3, 3, 3])),
            RaoVerdict::NotConnectedFactorable { witness: 3 }
        );
        assert!(rao_connected(&seq(&[4])).holds());
    }

    #[test]
    fn rao_range_stops_below_half() {
        // n = 4: only s = 1 is checked (s = 2 is not < 2).
        // s = 1: 3 < 1*2 + 1 fails.
        assert_eq!(
            rao_connected(&seq(&[3, 2, 2, 1])),
            RaoVerdict::NotConnectedFactorable { witness: 1 }
        );
        // n = 5: s in {1, 2}; s = 1: 2 < 3 + 2 holds, s = 2: 4 < 4 + 4 holds.
        assert!(rao_connected(&seq(&[2, 2, 2, 2, 2])).holds());
    }

    #[test]
    fn subtract_examples() {
        assert_eq!(
            seq(&[3, 3, 2, 2, 2, 2]).subtract_k(2).unwrap().degrees(),
            &[1, 1, 0, 0, 0, 0]
        );
        let mut fam = vec![15, 15];
        fam.extend([6; 12]);
        fam.extend([2, 2]);
        let mut expected = vec![13, 13];
        expected.extend([4; 12]);
        expected.extend([0, 0]);
        assert_eq!(seq(&fam).subtract_k(2).unwrap().degrees(), &expected[..]);
        assert_eq!(
            seq(&[5, 5]).subtract_k(6),
            Err(Error::KTooLarge { k: 6, min_degree: 5 })
        );
    }

    #[test]
    fn k_factorable_examples() {
        assert!(is_k_factorable(&seq(&[3, 3, 2, 2, 2, 2]), 2));
        assert!(!is_k_factorable(&seq(&[3, 3, 2, 2, 2, 2]), 3));
        assert!(!is_k_factorable(&seq(&[2, 2, 2, 1, 1]), 2));
        assert!(is_k_factorable(&seq(&[2, 2, 2]), 0));
    }

    #[test]
    fn complement_degrees() {
        assert_eq!(
            seq(&[3, 3, 3, 3, 2, 2]).complement_degrees().unwrap(),
            vec![2, 2, 2, 2, 3, 3]
        );
        assert_eq!(seq(&[3, 1]).complement_degrees(), None);
    }

    #[test]
    fn serde_validates() {
        let s: DegreeSequence = serde_json::from_str("[3,2,1]").unwrap();
        assert_eq!(s.degrees(), &[3, 2, 1]);
        assert!(serde_json::from_str::<DegreeSequence>("[1,2]").is_err());
        assert_eq!(serde_json::to_string(&s).unwrap(), "[3,2,1]");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sorted_seq(max_len: usize, max_deg: usize) -> impl Strategy<Value = Vec<usize>> {
            prop::collection::vec(0..=max_deg, 1..=max_len).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            })
        }

        proptest! {
            #[test]
            fn subtract_then_add_is_identity(d in sorted_seq(30, 40), k in 0usize..10) {
                let s = seq(&d);
                if let Ok(r) = s.subtract_k(k) {
                    prop_assert_eq!(r.add_k(k), s);
                } else {
                    prop_assert!(s.min() < k);
                }
            }

            #[test]
            fn rao_witness_is_minimal(d in sorted_seq(30, 40)) {
                let s = seq(&d);
                let n = d.len();
                let violates = |t: usize| {
                    let head: usize = d[..t].iter().sum();
                    let tail: usize = (0..t).map(|i| d[n - 1 - i]).sum();
                    head >= t * (n - t - 1) + tail
                };
                let first = (1..).take_while(|t| 2 * t < n).find(|&t| violates(t));
                prop_assert_eq!(rao_connected(&s).witness(), first);
            }
        }
    }
}
