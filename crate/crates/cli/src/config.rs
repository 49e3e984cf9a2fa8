use std::fmt;
use std::path::PathBuf;

use syzlab::checks::DEFAULT_MAX_POINTS;
use syzlab::koszul::{backend, is_prime, RankBackend, DEFAULT_BUDGET, DEFAULT_PRIMES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Analyze,
    BettiSurface,
    BettiCurve,
    Verify,
    Resolve,
    Enumerate,
}

impl Command {
    pub fn tag(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::BettiSurface => "betti-surface",
            Command::BettiCurve => "betti-curve",
            Command::Verify => "verify",
            Command::Resolve => "resolve",
            Command::Enumerate => "enumerate",
        }
    }

    pub fn needs_input(self) -> bool {
        self != Command::Enumerate
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    /// Polygon JSON file; `-` reads standard input.
    pub input: Option<PathBuf>,
    pub seed: u64,
    pub trials: usize,
    pub primes: Vec<u64>,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    pub json: bool,
    pub cache_dir: Option<PathBuf>,
    pub budget: u128,
    /// Explicit curve equation, overriding any `f` in the input file.
    pub f: Option<String>,
    pub boundary_only: bool,
    pub backend: String,
    pub max_points: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            input: None,
            seed: 0,
            trials: 3,
            primes: DEFAULT_PRIMES.to_vec(),
            jobs: 0,
            json: false,
            cache_dir: None,
            budget: DEFAULT_BUDGET,
            f: None,
            boundary_only: false,
            backend: "blocked".to_string(),
            max_points: DEFAULT_MAX_POINTS,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.trials == 0 {
            return Err(ConfigError("--trials must be at least 1".into()));
        }
        if self.primes.is_empty() {
            return Err(ConfigError("--primes needs at least one prime".into()));
        }
        for (i, &p) in self.primes.iter().enumerate() {
            if p <= 2 || p >= 1 << 31 || !is_prime(p) {
                return Err(ConfigError(format!("{p} is not an odd prime below 2^31")));
            }
            if self.primes[..i].contains(&p) {
                return Err(ConfigError(format!("prime {p} is repeated")));
            }
        }
        if self.budget == 0 {
            return Err(ConfigError("--budget must be positive".into()));
        }
        if self.command.needs_input() && self.input.is_none() {
            return Err(ConfigError(format!(
                "{} needs an input polygon",
                self.command.tag()
            )));
        }
        self.rank_backend()?;
        Ok(())
    }

    pub fn rank_backend(&self) -> Result<&'static dyn RankBackend, ConfigError> {
        backend(&self.backend)
            .ok_or_else(|| ConfigError(format!("unknown rank backend {:?}", self.backend)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}
