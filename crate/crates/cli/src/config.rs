//! Optional TOML config. Keys are long flag names of the chosen subcommand
//! (plus the global `prec`); flags given on the command line win.

use std::path::Path;

use clap::{CommandFactory, FromArgMatches};

use crate::Cli;

pub enum Error {
    Clap(clap::Error),
    Config(String),
}

#[derive(Default)]
pub struct Config {
    table: toml::Table,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let table = text.parse::<toml::Table>().map_err(|e| format!("{}: {e}", path.display()))?;
        Ok(Config { table })
    }

    pub fn prec(&self) -> Option<u32> {
        self.table.get("prec").and_then(|v| v.as_integer()).and_then(|p| u32::try_from(p).ok())
    }
}

fn config_path(argv: &[String]) -> Option<String> {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

fn scalar(v: &toml::Value) -> Option<String> {
    match v {
        toml::Value::String(s) => Some(s.clone()),
        toml::Value::Integer(i) => Some(i.to_string()),
        toml::Value::Float(f) => Some(f.to_string()),
        _ => None,
    }
}

pub fn parse_with_config(argv: Vec<String>) -> Result<(Cli, Config), Error> {
    let cfg = match config_path(&argv) {
        Some(p) => Config::load(Path::new(&p)).map_err(Error::Config)?,
        None => Config::default(),
    };
    let mut cmd = Cli::command().args_override_self(true);
    let names: Vec<String> = cmd.get_subcommands().map(|s| s.get_name().to_string()).collect();
    for n in &names {
        cmd = cmd.mut_subcommand(n, |s| s.args_override_self(true));
    }
    let mut argv = argv;
    if let Some(pos) = argv.iter().skip(1).position(|a| names.contains(a)).map(|p| p + 1) {
        let sub = cmd.find_subcommand(&argv[pos]).expect("known subcommand");
        let mut extra = Vec::new();
        for (key, v) in &cfg.table {
            if key == "prec" || key == "config" {
                continue;
            }
            let Some(arg) = sub.get_arguments().find(|a| a.get_long() == Some(key.as_str())) else {
                continue;
            };
            if arg.get_action().takes_values() {
                let s = scalar(v).ok_or_else(|| Error::Config(format!("config key `{key}`: expected a scalar")))?;
                extra.push(format!("--{key}"));
                extra.push(s);
            } else if v.as_bool() == Some(true) {
                extra.push(format!("--{key}"));
            }
        }
        argv.splice(pos + 1..pos + 1, extra);
    }
    let matches = cmd.try_get_matches_from(argv).map_err(Error::Clap)?;
    let cli = Cli::from_arg_matches(&matches).map_err(Error::Clap)?;
    Ok((cli, cfg))
}
