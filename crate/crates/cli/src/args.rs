use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{normalize_key, BranchChoice, CommandKind, Format, Preset, Settings};

/// Bound-state spectra of the Dirac equation with a radial tensor potential
/// `U(r) = a/r + b`.
#[derive(Debug, Parser)]
#[command(name = "dirac-tensor", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy table for a range of kappa and levels.
    #[command(allow_negative_numbers = true)]
    Spectrum(SpectrumArgs),
    /// E/M of a fixed n_g versus kappa for several values of a.
    #[command(allow_negative_numbers = true)]
    Fig3(Fig3Args),
    /// Sampled radial components g(r), f(r) of one state.
    #[command(allow_negative_numbers = true)]
    Wavefunction(WavefunctionArgs),
    /// Check closed forms against the numerical eigensolver on a parameter grid.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
}

impl Command {
    pub fn kind(&self) -> CommandKind {
        match self {
            Command::Spectrum(_) => CommandKind::Spectrum,
            Command::Fig3(_) => CommandKind::Fig3,
            Command::Wavefunction(_) => CommandKind::Wavefunction,
            Command::Verify(_) => CommandKind::Verify,
        }
    }

    pub fn common(&self) -> &CommonArgs {
        match self {
            Command::Spectrum(a) => &a.common,
            Command::Fig3(a) => &a.common,
            Command::Wavefunction(a) => &a.common,
            Command::Verify(a) => &a.common,
        }
    }

    /// Flags that were given explicitly, as settings.
    pub fn settings(&self) -> Settings {
        let mut s = self.common().settings();
        let mut put = |key: &str, value: Option<String>| {
            if let Some(v) = value {
                s.insert(normalize_key(key), v);
            }
        };
        match self {
            Command::Spectrum(a) => put("conjugate", a.conjugate.then(|| "true".to_string())),
            Command::Fig3(a) => {
                put("a_grid", a.a_grid.clone());
                put("n_g", a.n_g.map(|v| v.to_string()));
                put("kappa_bar_min", a.kappa_bar_min.map(|v| v.to_string()));
                put("kappa_bar_max", a.kappa_bar_max.map(|v| v.to_string()));
            }
            Command::Wavefunction(a) => {
                put("kappa", a.kappa.map(|v| v.to_string()));
                put("n_g", a.n_g.map(|v| v.to_string()));
                put("n_f", a.n_f.map(|v| v.to_string()));
                put("r_min", a.r_min.map(|v| v.to_string()));
                put("r_max", a.r_max.map(|v| v.to_string()));
                put("points", a.points.map(|v| v.to_string()));
            }
            Command::Verify(a) => {
                put("a_grid", a.a_grid.clone());
                put("b_grid", a.b_grid.clone());
                put("tolerance", a.tolerance.map(|v| v.to_string()));
                put("perturb", a.perturb.map(|v| v.to_string()));
            }
        }
        s
    }
}

/// Options shared by every subcommand. Anything left unset falls back to the
/// config file, then the preset, then built-in defaults.
#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Fermion mass M.
    #[arg(long)]
    pub mass: Option<f64>,
    /// Coefficient of the 1/r tensor term.
    #[arg(long)]
    pub a: Option<f64>,
    /// Constant tensor term.
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub kappa_min: Option<i32>,
    #[arg(long)]
    pub kappa_max: Option<i32>,
    /// Highest level index per channel.
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long, value_enum)]
    pub branch: Option<BranchChoice>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Flat key=value settings file; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn enum_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

impl CommonArgs {
    fn settings(&self) -> Settings {
        let pairs = [
            ("mass", self.mass.map(|v| v.to_string())),
            ("a", self.a.map(|v| v.to_string())),
            ("b", self.b.map(|v| v.to_string())),
            ("kappa_min", self.kappa_min.map(|v| v.to_string())),
            ("kappa_max", self.kappa_max.map(|v| v.to_string())),
            ("n_max", self.n_max.map(|v| v.to_string())),
            ("branch", self.branch.as_ref().map(enum_name)),
            ("format", self.format.as_ref().map(enum_name)),
            ("out", self.out.as_ref().map(|p| p.display().to_string())),
            ("preset", self.preset.as_ref().map(enum_name)),
        ];
        pairs.into_iter().filter_map(|(k, v)| v.map(|v| (k.to_string(), v))).collect()
    }
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Tabulate the charge-conjugated spectrum E^c = -E at -kappa_bar.
    #[arg(long)]
    pub conjugate: bool,
}

#[derive(Debug, Args)]
pub struct Fig3Args {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Comma-separated values of a.
    #[arg(long, allow_hyphen_values = true)]
    pub a_grid: Option<String>,
    /// Upper-component degree of the plotted level.
    #[arg(long)]
    pub n_g: Option<u32>,
    /// Bound rows outside [kappa-bar-min, kappa-bar-max] are dropped.
    #[arg(long)]
    pub kappa_bar_min: Option<f64>,
    #[arg(long)]
    pub kappa_bar_max: Option<f64>,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub kappa: Option<i32>,
    #[arg(long, conflicts_with = "n_f")]
    pub n_g: Option<u32>,
    #[arg(long)]
    pub n_f: Option<u32>,
    /// First grid radius; default 1e-4/gamma.
    #[arg(long)]
    pub r_min: Option<f64>,
    /// Last grid radius; default 40/gamma.
    #[arg(long)]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Comma-separated values of b; 0 checks that nothing binds.
    #[arg(long, allow_hyphen_values = true)]
    pub b_grid: Option<String>,
    /// Comma-separated values of a.
    #[arg(long, allow_hyphen_values = true)]
    pub a_grid: Option<String>,
    /// Allowed |E_numeric - E_analytic|.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Added to every closed-form energy before comparison; checks that the
    /// harness notices.
    #[arg(long)]
    pub perturb: Option<f64>,
}
