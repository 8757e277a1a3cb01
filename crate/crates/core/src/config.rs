/// Knobs shared by the heavy constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest absolute field degree any construction may reach.
    pub degree_cap: usize,
    /// Seed for the randomized equal-degree splitting step of mod-p factorization.
    pub seed: u64,
    /// Primitive-element search tries c in 1, -1, 2, -2, ..., up to this bound.
    pub primitive_search_bound: i64,
    /// Number of good primes inspected before choosing one for Hensel lifting.
    pub trial_primes: usize,
    /// Largest permutation group the closure routines will enumerate.
    pub order_bound: usize,
    /// Primes sampled by the quintic Frobenius witness.
    pub witness_primes: Vec<u64>,
    /// Which nonlinear factor the splitting loop adjoins next.
    pub factor_choice: FactorChoice,
}

/// Which irreducible factor the splitting-field loop picks, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FactorChoice {
    #[default]
    First,
    Last,
}

pub const DEFAULT_DEGREE_CAP: usize = 64;
pub const DEFAULT_SEED: u64 = 0x5eed_6a10_15;

impl Default for Config {
    fn default() -> Self {
        Config {
            degree_cap: DEFAULT_DEGREE_CAP,
            seed: DEFAULT_SEED,
            primitive_search_bound: 20,
            trial_primes: 6,
            order_bound: 5040,
            witness_primes: crate::exact_poly::small_primes(100),
            factor_choice: FactorChoice::First,
        }
    }
}

impl Config {
    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}
