//! EXP3.P checked against a direct probability-domain implementation.

use game_redesign::learner::{Exp3P, Exp3PParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Naive {
    weights: Vec<f64>,
    gamma: f64,
    beta: f64,
    eta: f64,
    lower: f64,
    upper: f64,
}

impl Naive {
    fn probs(&self) -> Vec<f64> {
        let total: f64 = self.weights.iter().sum();
        let k = self.weights.len() as f64;
        self.weights.iter().map(|w| (1.0 - self.gamma) * w / total + self.gamma / k).collect()
    }

    fn update(&mut self, action: usize, loss: f64) {
        let p = self.probs();
        let gain = (self.upper - loss) / (self.upper - self.lower);
        for (i, w) in self.weights.iter_mut().enumerate() {
            let hit = if i == action { gain } else { 0.0 };
            *w *= (self.eta * (hit + self.beta) / p[i]).exp();
        }
    }
}

#[test]
fn matches_direct_implementation() {
    for (k, horizon) in [(2usize, 1_000u64), (3, 500), (5, 10_000)] {
        let params = Exp3PParams::standard(k, horizon);
        let (lower, upper) = (-1.0, 2.0);
        let mut learner = Exp3P::new(k, horizon, lower, upper).unwrap();
        let mut naive = Naive {
            weights: vec![1.0; k],
            gamma: params.gamma,
            beta: params.beta,
            eta: params.eta,
            lower,
            upper,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
        for t in 0..300 {
            let action = learner.sample_action(&mut rng).unwrap();
            // a fixed, action-dependent loss sequence
            let loss = lower + (upper - lower) * (((t * 7 + action * 3) % 11) as f64 / 10.0);
            learner.update(action, loss).unwrap();
            naive.update(action, loss);
            for (a, b) in learner.probabilities().iter().zip(naive.probs()) {
                assert!((a - b).abs() < 1e-12, "K={k} t={t}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn dominant_action_wins() {
    let mut learner = Exp3P::new(4, 20_000, 0.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut hits = 0;
    for _ in 0..20_000 {
        let a = learner.sample_action(&mut rng).unwrap();
        hits += (a == 2) as u32;
        learner.update(a, if a == 2 { 0.2 } else { 0.8 }).unwrap();
    }
    assert!(learner.probabilities()[2] > 0.9);
    assert!(hits > 14_000, "{hits}");
    assert!(learner.sample_action(&mut rng).is_err());
}
