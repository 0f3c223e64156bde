//! Sequence generators.
//!
//! * [`generate_heuristic`]: draw from `K(a, b)` and retry until `d - k` is
//!   graphic and the connectivity inequalities hold.
//! * [`generate_connected`]: pick the length large enough that every draw from
//!   `K(a, b)` satisfies the connectivity inequalities.
//! * [`generate_disconnected`] / [`family_sequence`]: the
//!   `(n-1)^s x^(n-2s) s^s` family, which is k-factorable but never has a
//!   connected k-factor.
//! * [`packing_demo_sequence`]: `3^t 2^m` sequences, 2-factorable by packing
//!   a matching onto a cycle.
//!
//! All randomness comes from a ChaCha8 stream seeded with the caller's `u64`,
//! so a `(params, seed)` pair always reproduces the same sequence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{
    in_kab, is_graphic, is_k_factorable, min_length, rao_connected, DegreeSequence, KabParams,
    LengthBound,
};

/// Identifier of the PRNG construction, echoed in generator output.
pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64";

pub const DEFAULT_MAX_RETRIES: u32 = 1000;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationParams {
    pub a: u64,
    pub b: u64,
    pub k: usize,
    pub seed: u64,
    pub max_retries: u32,
}

impl GenerationParams {
    pub fn new(a: u64, b: u64, k: usize, seed: u64) -> Self {
        Self {
            a,
            b,
            k,
            seed,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    fn validate(&self) -> Result<KabParams> {
        let kab = KabParams::new(self.a, self.b)?;
        if self.k == 0 {
            return Err(Error::InvalidGenerationParams("k must be at least 1".into()));
        }
        if self.max_retries == 0 {
            return Err(Error::InvalidGenerationParams(
                "max_retries must be at least 1".into(),
            ));
        }
        if (self.k as u64) > self.b {
            return Err(Error::InvalidGenerationParams(format!(
                "k = {} exceeds the lower degree bound b = {}",
                self.k, self.b
            )));
        }
        Ok(kab)
    }
}

/// Draws `n` degrees uniformly from `[b, a]` with an even total.
///
/// The first `n - 1` values are free; the last is `b` or `b + 1`, whichever
/// fixes the parity. If that value falls outside `[b, a]` (only when `a == b`)
/// an earlier draw is nudged by one, and failing that the sequence grows by
/// one entry.
fn draw_even_sum(rng: &mut ChaCha8Rng, n: usize, a: u64, b: u64) -> Result<Vec<usize>> {
    let (a, b) = (a as usize, b as usize);
    let mut values: Vec<usize> = (0..n.saturating_sub(1))
        .map(|_| rng.random_range(b..=a))
        .collect();
    // Each pass either finishes or adds one entry; two growth steps always suffice.
    for _ in 0..3 {
        let parity = values.iter().sum::<usize>() % 2;
        let last = if b % 2 == parity { b } else { b + 1 };
        if last <= a {
            values.push(last);
            return Ok(values);
        }
        if let Some(v) = values.iter_mut().find(|v| **v < a || **v > b) {
            if *v < a {
                *v += 1;
            } else {
                *v -= 1;
            }
            continue;
        }
        values.push(rng.random_range(b..=a));
    }
    Err(Error::ParityUnfixable {
        a: a as u64,
        b: b as u64,
    })
}

/// A k-regular factor on `n` vertices needs `n k` even, so an odd product
/// bumps the length by one (still above the threshold).
fn factor_length(n: usize, k: usize) -> usize {
    if n * k % 2 == 1 {
        n + 1
    } else {
        n
    }
}

fn sorted(values: Vec<usize>) -> DegreeSequence {
    DegreeSequence::from_unsorted(values).expect("generator output is nonempty")
}

/// Trial-and-error search for a sequence in `K(a, b)` that is k-factorable
/// and satisfies the connected k-factor inequalities.
pub fn generate_heuristic(p: &GenerationParams) -> Result<DegreeSequence> {
    let kab = p.validate()?;
    let n = factor_length(min_length(&kab, LengthBound::Plain)?, p.k);
    let mut rng = rng_from_seed(p.seed);
    for _ in 0..p.max_retries {
        let seq = sorted(draw_even_sum(&mut rng, n, p.a, p.b)?);
        debug_assert!(in_kab(&seq, &kab));
        if is_k_factorable(&seq, p.k) && rao_connected(&seq).holds() {
            return Ok(seq);
        }
    }
    Err(Error::RetriesExhausted {
        attempts: p.max_retries,
    })
}

/// Deterministic-length generator: with `a - b < 2` and
/// `n > max(4 / (2 + b - a), l)` every even-sum draw from `K(a, b)` is
/// graphic and satisfies the connectivity inequalities. Only `d - k`
/// graphicality needs re-drawing.
pub fn generate_connected(p: &GenerationParams) -> Result<DegreeSequence> {
    let kab = p.validate()?;
    let n = factor_length(min_length(&kab, LengthBound::Connected)?, p.k);
    let mut rng = rng_from_seed(p.seed);
    for _ in 0..p.max_retries {
        let seq = sorted(draw_even_sum(&mut rng, n, p.a, p.b)?);
        debug_assert!(in_kab(&seq, &kab) && is_graphic(&seq) && rao_connected(&seq).holds());
        if is_k_factorable(&seq, p.k) {
            return Ok(seq);
        }
    }
    Err(Error::KFactorabilityFailed {
        k: p.k,
        attempts: p.max_retries,
    })
}

/// Which published range for the middle degree `x` to enforce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyClaim {
    /// `2s <= x <= n - s - 1`, `n` even.
    #[default]
    General,
    /// `s = 2`, `4 <= x <= n - 3`, `(n - 4) x` even; `n` may be odd.
    TwoFactor,
    /// `s = 3`, `6 <= x <= n - 4`, `n` even.
    ThreeFactor,
}

impl FamilyClaim {
    fn check_shape(self, n: usize, k: usize) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidFamilyParams(msg));
        if k == 0 {
            return fail("k must be at least 1".into());
        }
        if 2 * k >= n {
            return fail(format!("k = {k} must be below n/2 = {}", n as f64 / 2.0));
        }
        if 3 * k + 1 > n {
            return fail(format!("need 3k + 1 <= n, got k = {k}, n = {n}"));
        }
        match self {
            FamilyClaim::TwoFactor if k != 2 => fail(format!("two-factor claim needs k = 2, got {k}")),
            FamilyClaim::ThreeFactor if k != 3 => {
                fail(format!("three-factor claim needs k = 3, got {k}"))
            }
            FamilyClaim::General | FamilyClaim::ThreeFactor if n % 2 == 1 => {
                fail(format!("n = {n} must be even"))
            }
            _ => Ok(()),
        }
    }

    fn x_range(self, n: usize, k: usize) -> (usize, usize) {
        (2 * k, n - k - 1)
    }

    fn x_admissible(self, n: usize, k: usize, x: usize) -> bool {
        let (lo, hi) = self.x_range(n, k);
        let in_range = lo <= x && x <= hi;
        let sum = k * (n - 1) + (n - 2 * k) * x + k * k;
        match self {
            FamilyClaim::TwoFactor => in_range && ((n - 4) * x).is_multiple_of(2),
            _ => in_range && sum.is_multiple_of(2),
        }
    }
}

/// Parameters of the sequence `(n-1)^k x^(n-2k) k^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub n: usize,
    pub k: usize,
    pub x: usize,
}

impl FamilyParams {
    pub fn new(n: usize, k: usize, x: usize) -> Result<Self> {
        Self::with_claim(n, k, x, FamilyClaim::General)
    }

    pub fn with_claim(n: usize, k: usize, x: usize, claim: FamilyClaim) -> Result<Self> {
        claim.check_shape(n, k)?;
        if !claim.x_admissible(n, k, x) {
            let (lo, hi) = claim.x_range(n, k);
            return Err(Error::InvalidFamilyParams(format!(
                "x = {x} not admissible: need {lo} <= x <= {hi} with an even degree sum"
            )));
        }
        Ok(Self { n, k, x })
    }

    pub fn sequence(&self) -> DegreeSequence {
        let FamilyParams { n, k, x } = *self;
        let mut d = Vec::with_capacity(n);
        d.extend(std::iter::repeat_n(n - 1, k));
        d.extend(std::iter::repeat_n(x, n - 2 * k));
        d.extend(std::iter::repeat_n(k, k));
        DegreeSequence::positive(d).expect("family sequence is nonincreasing and positive")
    }
}

/// Builds the family sequence for fully specified parameters.
pub fn family_sequence(fp: &FamilyParams) -> DegreeSequence {
    fp.sequence()
}

/// Draws `x` uniformly among the admissible middle degrees and returns the
/// resulting family member.
pub fn generate_disconnected(
    n: usize,
    k: usize,
    claim: FamilyClaim,
    seed: u64,
) -> Result<(FamilyParams, DegreeSequence)> {
    claim.check_shape(n, k)?;
    let (lo, hi) = claim.x_range(n, k);
    let choices: Vec<usize> = (lo..=hi).filter(|&x| claim.x_admissible(n, k, x)).collect();
    if choices.is_empty() {
        return Err(Error::NoValidX { low: lo, high: hi });
    }
    let mut rng = rng_from_seed(seed);
    let x = choices[rng.random_range(0..choices.len())];
    let fp = FamilyParams { n, k, x };
    Ok((fp, fp.sequence()))
}

/// `(3, ..., 3, 2, ..., 2)` with `num_threes` threes and `num_twos` twos.
pub fn packing_demo_sequence(num_threes: usize, num_twos: usize) -> Result<DegreeSequence> {
    if num_threes < 2 || num_threes % 2 == 1 {
        return Err(Error::InvalidPackingParams(format!(
            "number of 3's must be even and at least 2, got {num_threes}"
        )));
    }
    if num_threes + num_twos < 3 {
        return Err(Error::InvalidPackingParams(
            "sequence must have at least 3 entries".into(),
        ));
    }
    let mut d = vec![3; num_threes];
    d.extend(std::iter::repeat_n(2, num_twos));
    DegreeSequence::positive(d)
}
