use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use dirac_tensor::{Branch, ModelParams};

use crate::error::CliError;

/// Flat `key → value` settings. Layers are merged in the order
/// defaults, preset, config file, command-line flags.
pub type Settings = BTreeMap<String, String>;

const KNOWN_KEYS: &[&str] = &[
    "mass",
    "a",
    "b",
    "kappa_min",
    "kappa_max",
    "n_max",
    "branch",
    "format",
    "out",
    "preset",
    "conjugate",
    "a_grid",
    "b_grid",
    "kappa",
    "n_g",
    "n_f",
    "kappa_bar_min",
    "kappa_bar_max",
    "r_min",
    "r_max",
    "points",
    "tolerance",
    "perturb",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Fig1,
    Fig2,
    Fig3a,
    Fig3b,
}

impl Preset {
    fn settings(self) -> Settings {
        let pairs: &[(&str, &str)] = match self {
            Preset::Fig1 | Preset::Fig2 => &[
                ("mass", "1"),
                ("a", "0"),
                ("b", "1"),
                ("kappa_min", "-10"),
                ("kappa_max", "-1"),
                ("n_max", "4"),
                ("branch", "plus"),
            ],
            Preset::Fig3a => &[
                ("mass", "1"),
                ("b", "1"),
                ("a_grid", "-2,-1,0,1,2"),
                ("kappa_min", "-12"),
                ("kappa_max", "1"),
                ("kappa_bar_min", "-10"),
                ("kappa_bar_max", "-1"),
                ("n_g", "1"),
                ("branch", "plus"),
            ],
            Preset::Fig3b => &[
                ("mass", "1"),
                ("b", "-1"),
                ("a_grid", "-2,-1,0,1,2"),
                ("kappa_min", "-1"),
                ("kappa_max", "12"),
                ("kappa_bar_min", "1"),
                ("kappa_bar_max", "10"),
                ("n_g", "1"),
                ("branch", "plus"),
            ],
        };
        let mut s = to_settings(pairs);
        if self == Preset::Fig2 {
            s.insert("conjugate".into(), "true".into());
        }
        s
    }
}

impl Preset {
    fn from_str_value(s: &str) -> Result<Self, CliError> {
        <Preset as ValueEnum>::from_str(s, true).map_err(|_| CliError::usage(format!("unknown preset '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchChoice {
    Plus,
    Minus,
    Both,
}

impl BranchChoice {
    pub fn branches(self) -> Vec<Branch> {
        match self {
            BranchChoice::Plus => vec![Branch::Particle],
            BranchChoice::Minus => vec![Branch::Antiparticle],
            BranchChoice::Both => vec![Branch::Particle, Branch::Antiparticle],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Spectrum,
    Fig3,
    Wavefunction,
    Verify,
}

fn to_settings(pairs: &[(&str, &str)]) -> Settings {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn defaults(kind: CommandKind) -> Settings {
    let mut s = to_settings(&[
        ("mass", "1"),
        ("a", "0"),
        ("b", "1"),
        ("kappa_min", "-5"),
        ("kappa_max", "5"),
        ("n_max", "4"),
        ("branch", "plus"),
        ("format", "csv"),
        ("conjugate", "false"),
        ("points", "2001"),
        ("tolerance", "1e-7"),
        ("perturb", "0"),
        ("b_grid", "-2,-1,-0.5,0.5,1,2"),
    ]);
    let a_grid = match kind {
        CommandKind::Fig3 => "-2,-1,0,1,2",
        _ => "-2,-0.5,0,0.5,2",
    };
    s.insert("a_grid".into(), a_grid.into());
    if kind == CommandKind::Fig3 {
        s.insert("n_g".into(), "1".into());
    }
    if kind == CommandKind::Verify {
        s.insert("branch".into(), "both".into());
    }
    s
}

/// Parse `key = value` lines; `#` starts a comment. Keys may use `-` or `_`.
pub fn parse_config_text(text: &str) -> Result<Settings, CliError> {
    let mut out = Settings::new();
    for (number, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("config line {}: expected key=value", number + 1)))?;
        let key = normalize_key(key.trim());
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(CliError::usage(format!("config line {}: unknown key '{key}'", number + 1)));
        }
        out.insert(key, value.trim().to_string());
    }
    Ok(out)
}

pub fn normalize_key(key: &str) -> String {
    key.replace('-', "_")
}

/// Fully resolved settings for one command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mass: f64,
    pub a: f64,
    pub b: f64,
    pub kappa_min: i32,
    pub kappa_max: i32,
    pub n_max: u32,
    pub branch: BranchChoice,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub conjugate: bool,
    pub a_grid: Vec<f64>,
    pub b_grid: Vec<f64>,
    pub kappa: Option<i32>,
    pub n_g: Option<u32>,
    pub n_f: Option<u32>,
    pub kappa_bar_window: Option<(f64, f64)>,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub points: usize,
    pub tolerance: f64,
    pub perturb: f64,
}

impl RunConfig {
    pub fn resolve(kind: CommandKind, file: Option<Settings>, flags: Settings) -> Result<Self, CliError> {
        let file = file.unwrap_or_default();
        let preset = match flags.get("preset").or_else(|| file.get("preset")) {
            Some(name) => Some(Preset::from_str_value(name)?),
            None => None,
        };
        let mut merged = defaults(kind);
        if let Some(p) = preset {
            merged.extend(p.settings());
        }
        merged.extend(file);
        merged.extend(flags);
        Self::from_settings(&merged)
    }

    fn from_settings(s: &Settings) -> Result<Self, CliError> {
        let window = match (opt::<f64>(s, "kappa_bar_min")?, opt::<f64>(s, "kappa_bar_max")?) {
            (Some(lo), Some(hi)) => Some((lo, hi)),
            (None, None) => None,
            _ => return Err(CliError::usage("kappa_bar_min and kappa_bar_max must be given together")),
        };
        let cfg = Self {
            mass: req(s, "mass")?,
            a: req(s, "a")?,
            b: req(s, "b")?,
            kappa_min: req(s, "kappa_min")?,
            kappa_max: req(s, "kappa_max")?,
            n_max: req(s, "n_max")?,
            branch: choice(s, "branch")?,
            format: choice(s, "format")?,
            out: s.get("out").map(PathBuf::from),
            conjugate: req(s, "conjugate")?,
            a_grid: list(s, "a_grid")?,
            b_grid: list(s, "b_grid")?,
            kappa: opt(s, "kappa")?,
            n_g: opt(s, "n_g")?,
            n_f: opt(s, "n_f")?,
            kappa_bar_window: window,
            r_min: opt(s, "r_min")?,
            r_max: opt(s, "r_max")?,
            points: req(s, "points")?,
            tolerance: req(s, "tolerance")?,
            perturb: req(s, "perturb")?,
        };
        if cfg.kappa_min > cfg.kappa_max {
            return Err(CliError::usage(format!(
                "kappa_min ({}) exceeds kappa_max ({})",
                cfg.kappa_min, cfg.kappa_max
            )));
        }
        if !(cfg.tolerance > 0.0) {
            return Err(CliError::usage("tolerance must be positive"));
        }
        Ok(cfg)
    }

    pub fn params(&self) -> Result<ModelParams, CliError> {
        ModelParams::new(self.mass, self.a, self.b).map_err(|e| CliError::usage(e.to_string()))
    }

    /// Integers in `[kappa_min, kappa_max]` without 0.
    pub fn kappas(&self) -> Vec<i32> {
        (self.kappa_min..=self.kappa_max).filter(|&k| k != 0).collect()
    }
}

fn parse<T: FromStr>(key: &str, raw: &str) -> Result<T, CliError> {
    raw.trim().parse().map_err(|_| CliError::usage(format!("invalid value for {key}: '{raw}'")))
}

fn req<T: FromStr>(s: &Settings, key: &str) -> Result<T, CliError> {
    let raw = s.get(key).ok_or_else(|| CliError::usage(format!("missing setting {key}")))?;
    parse(key, raw)
}

fn opt<T: FromStr>(s: &Settings, key: &str) -> Result<Option<T>, CliError> {
    s.get(key).map(|raw| parse(key, raw)).transpose()
}

fn choice<T: ValueEnum>(s: &Settings, key: &str) -> Result<T, CliError> {
    let raw = s.get(key).ok_or_else(|| CliError::usage(format!("missing setting {key}")))?;
    T::from_str(raw.trim(), true).map_err(|_| CliError::usage(format!("invalid value for {key}: '{raw}'")))
}

fn list(s: &Settings, key: &str) -> Result<Vec<f64>, CliError> {
    let raw = s.get(key).ok_or_else(|| CliError::usage(format!("missing setting {key}")))?;
    raw.split(',').filter(|p| !p.trim().is_empty()).map(|p| parse(key, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layering_order() {
        let file = parse_config_text("# comment\nb = 2\nkappa-min = -3\nn_max=1\n").unwrap();
        let flags = to_settings(&[("n_max", "7"), ("preset", "fig1")]);
        let cfg = RunConfig::resolve(CommandKind::Spectrum, Some(file), flags).unwrap();
        assert_eq!(cfg.b, 2.0);
        assert_eq!(cfg.kappa_min, -3);
        assert_eq!(cfg.kappa_max, -1);
        assert_eq!(cfg.n_max, 7);
        assert!(!cfg.conjugate);
    }

    #[test]
    fn presets() {
        let fig2 = RunConfig::resolve(CommandKind::Spectrum, None, to_settings(&[("preset", "fig2")])).unwrap();
        assert!(fig2.conjugate);
        assert_eq!((fig2.kappa_min, fig2.kappa_max, fig2.n_max), (-10, -1, 4));
        let fig3b = RunConfig::resolve(CommandKind::Fig3, None, to_settings(&[("preset", "fig3b")])).unwrap();
        assert_eq!(fig3b.b, -1.0);
        assert_eq!(fig3b.a_grid, vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
        assert_eq!(fig3b.kappa_bar_window, Some((1.0, 10.0)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_config_text("bogus = 1").is_err());
        assert!(parse_config_text("mass 1").is_err());
        let flags = to_settings(&[("kappa_min", "3"), ("kappa_max", "1")]);
        assert!(RunConfig::resolve(CommandKind::Spectrum, None, flags).is_err());
        let flags = to_settings(&[("branch", "sideways")]);
        assert!(RunConfig::resolve(CommandKind::Spectrum, None, flags).is_err());
        let cfg = RunConfig::resolve(CommandKind::Spectrum, None, to_settings(&[("mass", "-1")])).unwrap();
        assert!(cfg.params().is_err());
    }

    #[test]
    fn kappa_list_skips_zero() {
        let cfg = RunConfig::resolve(CommandKind::Spectrum, None, Settings::new()).unwrap();
        assert_eq!(cfg.kappas(), vec![-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]);
    }
}
