//! Redesign algorithms: map `(ℓ^o, a†, t)` to the round-`t` game `ℓ^t`.
//!
//! * **Interior**: time-invariant. Every non-target action of player `i` is
//!   made worse than `a_i†` by exactly `(1 − 1/M)ρ` while the target cell keeps
//!   its original losses. Needs `ℓ^o_i(a†) ∈ [L+ρ, U−ρ]` for all `i`.
//! * **Boundary**: interior design centred on an interior vector `v` (the
//!   source game), blended towards the constant game `ℓ^o(a†)` (the
//!   destination) with weight `w_t = t^(α+ε−1)`.
//! * **Discrete**: the boundary game rounded cellwise to `{L, U}` with the
//!   unbiased probabilities `(x − L)/(U − L)`, resampled every round.
//!
//! Any of the three may be thresholded against the original game: cells on
//! the player's target action take `min(designed, original)`, the others
//! `max(designed, original)`. For discrete designs the threshold is applied
//! to the continuous game, before rounding.

use rand::{Rng, RngExt};

use crate::error::{Error, Result};
use crate::game::{ActionProfile, LossVector, NormalFormGame, DEFAULT_TOLERANCE};

/// Slack for interiority checks (`−10√10` and similar are not exact).
const INTERIOR_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DesignerKind {
    /// Play the original game.
    Identity,
    Interior,
    Boundary,
    Discrete,
}

impl DesignerKind {
    pub fn name(&self) -> &'static str {
        match self {
            DesignerKind::Identity => "none",
            DesignerKind::Interior => "interior",
            DesignerKind::Boundary => "boundary",
            DesignerKind::Discrete => "discrete",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "none" | "identity" => Some(DesignerKind::Identity),
            "interior" => Some(DesignerKind::Interior),
            "boundary" => Some(DesignerKind::Boundary),
            "discrete" => Some(DesignerKind::Discrete),
            _ => None,
        }
    }

    /// Whether the design interpolates with `w_t` (and so uses `v`, `α`, `ε`).
    pub fn is_time_varying(&self) -> bool {
        matches!(self, DesignerKind::Boundary | DesignerKind::Discrete)
    }
}

/// Choice of the interior vector `v` for boundary and discrete designs.
#[derive(Debug, Clone, PartialEq)]
pub enum InteriorVector {
    /// Constant `(L + U) / 2`; always valid.
    Midpoint,
    /// Constant mean of `ℓ^o(a†)`; keeps zero-sum games zero-sum when valid.
    TargetMean,
    Explicit(Vec<f64>),
}

impl InteriorVector {
    pub fn resolve(&self, original: &NormalFormGame, target: &ActionProfile) -> Result<LossVector> {
        let m = original.num_players();
        match self {
            InteriorVector::Midpoint => Ok(LossVector::constant(m, 0.5 * (original.lower() + original.upper()))),
            InteriorVector::TargetMean => {
                let at_target = original.loss_at(target)?;
                let mean = at_target.iter().sum::<f64>() / m as f64;
                if !(mean > original.lower() && mean < original.upper()) {
                    return Err(Error::Precondition(format!(
                        "mean target loss {mean} is not interior to [{}, {}]",
                        original.lower(),
                        original.upper()
                    )));
                }
                Ok(LossVector::constant(m, mean))
            }
            InteriorVector::Explicit(v) => {
                if v.len() != m {
                    return Err(Error::arg(format!("v has {} entries, expected {m}", v.len())));
                }
                LossVector::new(v.clone())
            }
        }
    }
}

/// Which redesign to run and with what parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignerSpec {
    pub kind: DesignerKind,
    pub target: ActionProfile,
    /// Margin `ρ`.
    pub rho: f64,
    pub v: InteriorVector,
    /// Players' regret rate `α`.
    pub alpha: f64,
    pub epsilon: f64,
    pub thresholded: bool,
}

impl DesignerSpec {
    pub fn identity(target: ActionProfile) -> Self {
        DesignerSpec {
            kind: DesignerKind::Identity,
            target,
            rho: 1.0,
            v: InteriorVector::Midpoint,
            alpha: 0.5,
            epsilon: 0.25,
            thresholded: false,
        }
    }

    pub fn interior(target: ActionProfile, rho: f64) -> Self {
        DesignerSpec {
            kind: DesignerKind::Interior,
            rho,
            ..Self::identity(target)
        }
    }

    pub fn boundary(target: ActionProfile, rho: f64, alpha: f64, epsilon: f64) -> Self {
        DesignerSpec {
            kind: DesignerKind::Boundary,
            rho,
            alpha,
            epsilon,
            ..Self::identity(target)
        }
    }

    pub fn discrete(target: ActionProfile, rho: f64, alpha: f64, epsilon: f64) -> Self {
        DesignerSpec {
            kind: DesignerKind::Discrete,
            ..Self::boundary(target, rho, alpha, epsilon)
        }
    }

    pub fn thresholded(mut self, on: bool) -> Self {
        self.thresholded = on;
        self
    }

    pub fn with_vector(mut self, v: InteriorVector) -> Self {
        self.v = v;
        self
    }

    pub fn with_kind(mut self, kind: DesignerKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }
}

/// A round-`t` game together with the interpolation weight that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct RedesignedRound {
    pub t: u64,
    pub game: NormalFormGame,
    /// `w_t`; `None` for time-invariant designs.
    pub weight: Option<f64>,
}

/// `w_t = t^(α+ε−1)`.
pub fn boundary_weight(t: u64, alpha: f64, epsilon: f64) -> f64 {
    (t as f64).powf(alpha + epsilon - 1.0)
}

fn check_rate(alpha: f64, epsilon: f64) -> Result<()> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::arg(format!("regret rate alpha must lie in [0, 1), got {alpha}")));
    }
    if !(epsilon > 0.0 && epsilon <= 1.0 - alpha + INTERIOR_SLACK) {
        return Err(Error::arg(format!(
            "epsilon must lie in (0, 1 - alpha] = (0, {}], got {epsilon}",
            1.0 - alpha
        )));
    }
    Ok(())
}

fn check_rho(rho: f64) -> Result<()> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::arg(format!("margin rho must be positive, got {rho}")));
    }
    Ok(())
}

fn check_interior(center: &[f64], lower: f64, upper: f64, rho: f64, what: &str) -> Result<()> {
    for (i, &c) in center.iter().enumerate() {
        if c < lower + rho - INTERIOR_SLACK || c > upper - rho + INTERIOR_SLACK {
            return Err(Error::Precondition(format!(
                "player {i}: {what} = {c} is not in [L + rho, U - rho] = [{}, {}]",
                lower + rho,
                upper - rho
            )));
        }
    }
    Ok(())
}

/// Largest margin keeping `center` at least that far inside `[L, U]`.
pub fn max_interior_margin(center: &[f64], lower: f64, upper: f64) -> f64 {
    center
        .iter()
        .map(|&c| (c - lower).min(upper - c))
        .fold(f64::INFINITY, f64::min)
}

/// Writes the interior design centred on `center` into `out` (flat buffer).
fn fill_interior(out: &mut [f64], shape: &NormalFormGame, target: &[usize], center: &[f64], rho: f64) {
    let m = shape.num_players();
    let mf = m as f64;
    let mut profile = vec![0usize; m];
    for (idx, row) in out.chunks_exact_mut(m).enumerate() {
        decode(shape, idx, &mut profile);
        let d = profile.iter().zip(target).filter(|(a, b)| a == b).count() as f64;
        for i in 0..m {
            row[i] = if profile[i] == target[i] {
                center[i] - (1.0 - d / mf) * rho
            } else {
                center[i] + (d / mf) * rho
            };
        }
    }
}

fn decode(shape: &NormalFormGame, mut idx: usize, out: &mut [usize]) {
    for (i, slot) in out.iter_mut().enumerate() {
        let stride = shape.stride(i);
        *slot = idx / stride;
        idx %= stride;
    }
}

/// Cellwise `on_target[c*M+i]`: does player `i` play `a_i†` in profile `c`?
fn target_mask(game: &NormalFormGame, target: &[usize]) -> Vec<bool> {
    let m = game.num_players();
    let mut mask = vec![false; game.num_profiles() * m];
    let mut profile = vec![0usize; m];
    for (idx, row) in mask.chunks_exact_mut(m).enumerate() {
        decode(game, idx, &mut profile);
        for i in 0..m {
            row[i] = profile[i] == target[i];
        }
    }
    mask
}

fn apply_threshold(designed: &mut [f64], original: &[f64], mask: &[bool]) {
    for ((x, &o), &on) in designed.iter_mut().zip(original).zip(mask) {
        *x = if on { x.min(o) } else { x.max(o) };
    }
}

fn blend(out: &mut [f64], source: &[f64], destination: &[f64], w: f64) {
    let m = destination.len();
    for (row, src) in out.chunks_exact_mut(m).zip(source.chunks_exact(m)) {
        for ((x, &s), &d) in row.iter_mut().zip(src).zip(destination) {
            *x = w * s + (1.0 - w) * d;
        }
    }
}

fn round_to_extremes<R: Rng + ?Sized>(out: &mut [f64], continuous: &[f64], lower: f64, upper: f64, rng: &mut R) {
    let range = upper - lower;
    for (x, &c) in out.iter_mut().zip(continuous) {
        let p_upper = (c - lower) / range;
        let u: f64 = rng.random();
        *x = if u < p_upper { upper } else { lower };
    }
}

/// Time-invariant interior design around `ℓ^o(a†)`.
pub fn interior_design(original: &NormalFormGame, target: &ActionProfile, rho: f64) -> Result<NormalFormGame> {
    original.validate_profile(target)?;
    check_rho(rho)?;
    let center = original.loss_at(target)?;
    check_interior(&center, original.lower(), original.upper(), rho, "original target loss")?;
    let mut out = original.clone();
    fill_interior(out.losses_mut(), original, target, &center, rho);
    Ok(out)
}

/// Interior design with `center` substituted for `ℓ^o(a†)`; this is the
/// source game of the boundary design.
pub fn interior_design_about(
    original: &NormalFormGame,
    target: &ActionProfile,
    center: &[f64],
    rho: f64,
) -> Result<NormalFormGame> {
    original.validate_profile(target)?;
    check_rho(rho)?;
    if center.len() != original.num_players() {
        return Err(Error::arg("center vector length differs from the player count"));
    }
    check_interior(center, original.lower(), original.upper(), rho, "v")?;
    let mut out = original.clone();
    fill_interior(out.losses_mut(), original, target, center, rho);
    Ok(out)
}

/// Cellwise min/max of `designed` against `original`.
pub fn threshold(designed: &NormalFormGame, original: &NormalFormGame, target: &ActionProfile) -> Result<NormalFormGame> {
    if !designed.same_shape(original) {
        return Err(Error::arg("designed and original games differ in shape"));
    }
    original.validate_profile(target)?;
    let mask = target_mask(original, target);
    let mut out = designed.clone();
    apply_threshold(out.losses_mut(), original.losses(), &mask);
    Ok(out)
}

/// Boundary design at round `t`. `ρ` is capped so that `v` stays interior.
pub fn boundary_design(
    original: &NormalFormGame,
    target: &ActionProfile,
    v: &[f64],
    rho: f64,
    alpha: f64,
    epsilon: f64,
    t: u64,
) -> Result<RedesignedRound> {
    if t < 1 {
        return Err(Error::arg("rounds are numbered from 1"));
    }
    check_rate(alpha, epsilon)?;
    check_rho(rho)?;
    let rho = effective_boundary_rho(original, v, rho)?;
    let source = interior_design_about(original, target, v, rho)?;
    let destination = original.loss_at(target)?;
    let w = boundary_weight(t, alpha, epsilon);
    let mut game = original.clone();
    blend(game.losses_mut(), source.losses(), &destination, w);
    Ok(RedesignedRound {
        t,
        game,
        weight: Some(w),
    })
}

fn effective_boundary_rho(original: &NormalFormGame, v: &[f64], rho: f64) -> Result<f64> {
    if v.len() != original.num_players() {
        return Err(Error::arg(format!(
            "v has {} entries, expected {}",
            v.len(),
            original.num_players()
        )));
    }
    let cap = max_interior_margin(v, original.lower(), original.upper());
    if !(cap > 0.0) {
        return Err(Error::Precondition(format!(
            "v = {v:?} is not in the interior of [{}, {}]",
            original.lower(),
            original.upper()
        )));
    }
    Ok(rho.min(cap))
}

/// Randomized rounding of a continuous round to `{L, U}`, cell by cell and
/// player by player.
pub fn discrete_design<R: Rng + ?Sized>(
    continuous: &RedesignedRound,
    lower: f64,
    upper: f64,
    rng: &mut R,
) -> Result<NormalFormGame> {
    if !(upper > lower) {
        return Err(Error::arg(format!("rounding range requires U > L, got [{lower}, {upper}]")));
    }
    let values = continuous.game.losses();
    if let Some(bad) = values
        .iter()
        .find(|&&x| !(x >= lower - DEFAULT_TOLERANCE && x <= upper + DEFAULT_TOLERANCE))
    {
        return Err(Error::arg(format!("value {bad} outside [{lower}, {upper}]")));
    }
    let mut out = continuous.game.clone();
    round_to_extremes(out.losses_mut(), values, lower, upper, rng);
    Ok(out)
}

/// One-shot round construction. For repeated rounds prefer [`Designer`],
/// which caches the time-invariant parts.
pub fn make_round<R: Rng + ?Sized>(
    spec: &DesignerSpec,
    original: &NormalFormGame,
    t: u64,
    rng: &mut R,
) -> Result<NormalFormGame> {
    let mut designer = Designer::new(spec.clone(), original.clone())?;
    Ok(designer.round(t, rng)?.clone())
}

enum Mode {
    Identity,
    Fixed,
    Interpolated {
        source: Vec<f64>,
        destination: Vec<f64>,
        discrete: bool,
    },
}

/// Per-trial designer: validates the spec once, caches the interior design
/// (or the boundary source/destination pair) and reuses its output buffers.
pub struct Designer {
    spec: DesignerSpec,
    original: NormalFormGame,
    mask: Vec<bool>,
    mode: Mode,
    current: NormalFormGame,
    continuous: Vec<f64>,
    rho: f64,
}

impl Designer {
    pub fn new(spec: DesignerSpec, original: NormalFormGame) -> Result<Self> {
        original.validate_profile(&spec.target)?;
        let mask = target_mask(&original, &spec.target);
        let mut rho = spec.rho;
        let mut current = original.clone();
        let mode = match spec.kind {
            DesignerKind::Identity => Mode::Identity,
            DesignerKind::Interior => {
                let mut g = interior_design(&original, &spec.target, spec.rho)?;
                if spec.thresholded {
                    apply_threshold(g.losses_mut(), original.losses(), &mask);
                }
                current = g;
                Mode::Fixed
            }
            DesignerKind::Boundary | DesignerKind::Discrete => {
                check_rate(spec.alpha, spec.epsilon)?;
                check_rho(spec.rho)?;
                let v = spec.v.resolve(&original, &spec.target)?;
                rho = effective_boundary_rho(&original, &v, spec.rho)?;
                let source = interior_design_about(&original, &spec.target, &v, rho)?;
                Mode::Interpolated {
                    source: source.losses().to_vec(),
                    destination: original.loss_at(&spec.target)?.into_inner(),
                    discrete: spec.kind == DesignerKind::Discrete,
                }
            }
        };
        let continuous = vec![0.0; original.losses().len()];
        Ok(Designer {
            spec,
            original,
            mask,
            mode,
            current,
            continuous,
            rho,
        })
    }

    pub fn spec(&self) -> &DesignerSpec {
        &self.spec
    }

    pub fn original(&self) -> &NormalFormGame {
        &self.original
    }

    /// Margin actually used (boundary designs cap `ρ` to keep `v` interior).
    pub fn effective_rho(&self) -> f64 {
        self.rho
    }

    /// `w_t` for time-varying designs.
    pub fn weight(&self, t: u64) -> Option<f64> {
        self.spec
            .kind
            .is_time_varying()
            .then(|| boundary_weight(t, self.spec.alpha, self.spec.epsilon))
    }

    /// The game played in round `t` (1-based). `rng` is only consumed by the
    /// discrete design, which draws a fresh matrix on every call.
    pub fn round<R: Rng + ?Sized>(&mut self, t: u64, rng: &mut R) -> Result<&NormalFormGame> {
        if t < 1 {
            return Err(Error::arg("rounds are numbered from 1"));
        }
        match &self.mode {
            Mode::Identity => Ok(&self.original),
            Mode::Fixed => Ok(&self.current),
            Mode::Interpolated {
                source,
                destination,
                discrete,
            } => {
                let w = boundary_weight(t, self.spec.alpha, self.spec.epsilon);
                let (lower, upper) = (self.original.lower(), self.original.upper());
                if *discrete {
                    blend(&mut self.continuous, source, destination, w);
                    if self.spec.thresholded {
                        apply_threshold(&mut self.continuous, self.original.losses(), &self.mask);
                    }
                    round_to_extremes(self.current.losses_mut(), &self.continuous, lower, upper, rng);
                } else {
                    let out = self.current.losses_mut();
                    blend(out, source, destination, w);
                    if self.spec.thresholded {
                        apply_threshold(out, self.original.losses(), &self.mask);
                    }
                }
                Ok(&self.current)
            }
        }
    }

    /// Like [`round`](Self::round) but packaged with `t` and `w_t`.
    pub fn redesigned_round<R: Rng + ?Sized>(&mut self, t: u64, rng: &mut R) -> Result<RedesignedRound> {
        let weight = self.weight(t);
        let game = self.round(t, rng)?.clone();
        Ok(RedesignedRound { t, game, weight })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rps() -> NormalFormGame {
        let table = [[0.0, 1.0, -1.0], [-1.0, 0.0, 1.0], [1.0, -1.0, 0.0]];
        NormalFormGame::from_fn(vec![3, 3], -1.0, 1.0, |a, out| {
            out[0] = table[a[0]][a[1]];
            out[1] = -out[0];
        })
        .unwrap()
        .with_natural_values(vec![-1.0, 0.0, 1.0])
        .unwrap()
    }

    fn pd() -> NormalFormGame {
        NormalFormGame::new(vec![2, 2], vec![2.0, 2.0, 5.0, 1.0, 1.0, 5.0, 4.0, 4.0], 1.0, 5.0).unwrap()
    }

    #[test]
    fn interior_keeps_target_cell() {
        let g = interior_design(&pd(), &[0, 0].into(), 1.0).unwrap();
        assert_eq!(g.cell(0), &[2.0, 2.0]);
        assert_eq!(g.cell(1), &[1.5, 2.5]);
        assert_eq!(g.cell(3), &[2.0, 2.0]);
        assert_eq!(g.dominance_gap(0, 0).unwrap(), 0.5);
    }

    #[test]
    fn interior_rejects_boundary_target() {
        let err = interior_design(&rps(), &[0, 1].into(), 1.0).unwrap_err();
        match err {
            Error::Precondition(msg) => assert!(msg.contains("player 0"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(interior_design(&pd(), &[0, 0].into(), 0.0).is_err());
        assert!(interior_design(&pd(), &[0, 0].into(), 1.5).is_err());
    }

    #[test]
    fn threshold_is_idempotent_and_shape_checked() {
        let target: ActionProfile = [0, 0].into();
        let once = threshold(&interior_design(&pd(), &target, 1.0).unwrap(), &pd(), &target).unwrap();
        assert_eq!(once.cell(3), &[4.0, 4.0]);
        let twice = threshold(&once, &pd(), &target).unwrap();
        assert_eq!(once, twice);
        assert!(threshold(&rps(), &pd(), &target).is_err());
    }

    #[test]
    fn boundary_weight_schedule() {
        assert_eq!(boundary_weight(1, 0.5, 0.3), 1.0);
        assert!((boundary_weight(1000, 0.5, 0.3) - 10f64.powf(-0.6)).abs() < 1e-15);
        let mut prev = f64::INFINITY;
        for t in [1, 2, 10, 100, 10_000, 1_000_000] {
            let w = boundary_weight(t, 0.5, 0.25);
            assert!(w <= prev);
            prev = w;
        }
        assert!(boundary_weight(u64::MAX, 0.5, 0.25) < 1e-4);
    }

    #[test]
    fn boundary_argument_errors() {
        let g = rps();
        let target: ActionProfile = [0, 1].into();
        assert!(boundary_design(&g, &target, &[0.0, 0.0], 1.0, 0.5, 0.0, 1).is_err());
        assert!(boundary_design(&g, &target, &[0.0, 0.0], 1.0, 0.5, 0.6, 1).is_err());
        assert!(boundary_design(&g, &target, &[0.0, 0.0], 1.0, 0.5, 0.5, 1).is_ok());
        assert!(boundary_design(&g, &target, &[0.0, 0.0], 1.0, 0.5, 0.3, 0).is_err());
        assert!(boundary_design(&g, &target, &[1.0, 0.0], 1.0, 0.5, 0.3, 1).is_err());
        assert!(boundary_design(&g, &target, &[0.0], 1.0, 0.5, 0.3, 1).is_err());
    }

    #[test]
    fn boundary_caps_rho() {
        let r = boundary_design(&rps(), &[0, 1].into(), &[0.5, -0.5], 1.0, 0.5, 0.3, 1).unwrap();
        // rho capped at 0.5 -> gap (1 - 1/2) * 0.5
        assert!((r.game.dominance_gap(0, 0).unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn discrete_extremes_and_errors() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let round = boundary_design(&rps(), &[0, 1].into(), &[0.0, 0.0], 1.0, 0.5, 0.3, 5).unwrap();
        let g = discrete_design(&round, -1.0, 1.0, &mut rng).unwrap();
        assert!(g.losses().iter().all(|&x| x == -1.0 || x == 1.0));
        assert_eq!(g.natural_values(), Some(&[-1.0, 0.0, 1.0][..]));
        assert!(discrete_design(&round, -0.5, 0.5, &mut rng).is_err());

        let top = RedesignedRound {
            t: 1,
            game: NormalFormGame::from_fn(vec![2, 2], -1.0, 1.0, |_, o| o.fill(1.0)).unwrap(),
            weight: None,
        };
        for _ in 0..100 {
            let g = discrete_design(&top, -1.0, 1.0, &mut rng).unwrap();
            assert!(g.losses().iter().all(|&x| x == 1.0));
        }
    }

    #[test]
    fn midpoint_rounds_fairly() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mid = RedesignedRound {
            t: 1,
            game: NormalFormGame::from_fn(vec![2], -1.0, 1.0, |_, o| o.fill(0.0)).unwrap(),
            weight: None,
        };
        let n = 50_000;
        let ups: usize = (0..n)
            .map(|_| discrete_design(&mid, -1.0, 1.0, &mut rng).unwrap().losses().iter().filter(|&&x| x == 1.0).count())
            .sum();
        let total = 2 * n;
        let sigma = (total as f64 * 0.25).sqrt();
        assert!((ups as f64 - total as f64 / 2.0).abs() < 3.0 * sigma);
    }

    #[test]
    fn identity_returns_original() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let spec = DesignerSpec::identity([1, 1].into());
        for t in [1, 10, 1000] {
            assert_eq!(make_round(&spec, &pd(), t, &mut rng).unwrap(), pd());
        }
    }

    #[test]
    fn designer_matches_free_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let target: ActionProfile = [0, 1].into();
        let spec = DesignerSpec::boundary(target.clone(), 1.0, 0.5, 0.3);
        let mut d = Designer::new(spec, rps()).unwrap();
        for t in [1, 7, 1000] {
            let direct = boundary_design(&rps(), &target, &[0.0, 0.0], 1.0, 0.5, 0.3, t).unwrap();
            let via = d.redesigned_round(t, &mut rng).unwrap();
            assert_eq!(via, direct);
        }
        assert!(d.round(0, &mut rng).is_err());
    }

    #[test]
    fn target_mean_vector_requires_interior_mean() {
        let g = rps();
        let v = InteriorVector::TargetMean.resolve(&g, &[0, 1].into()).unwrap();
        assert_eq!(&*v, &[0.0, 0.0]);
        let pd = pd();
        let v = InteriorVector::TargetMean.resolve(&pd, &[0, 0].into()).unwrap();
        assert_eq!(&*v, &[2.0, 2.0]);
        // a target cell whose mean sits on U
        let edge = NormalFormGame::new(vec![2], vec![1.0, 0.0], 0.0, 1.0).unwrap();
        assert!(InteriorVector::TargetMean.resolve(&edge, &[0].into()).is_err());
    }
}
