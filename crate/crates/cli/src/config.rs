use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use mcv_core::{BPolicy, Graph, OnDisconnected, SelectionOrder};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Corrected,
    YehOriginal,
    Oracle,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Corrected => "corrected",
            Algorithm::YehOriginal => "yeh-original",
            Algorithm::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum YehPolicyArg {
    GotoStep1,
    GotoStep3,
    GotoStep4,
}

impl From<YehPolicyArg> for OnDisconnected {
    fn from(arg: YehPolicyArg) -> Self {
        match arg {
            YehPolicyArg::GotoStep1 => OnDisconnected::GotoStep1,
            YehPolicyArg::GotoStep3 => OnDisconnected::GotoStep3,
            YehPolicyArg::GotoStep4 => OnDisconnected::GotoStep4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum BPolicyArg {
    #[default]
    Scoped,
    Persistent,
}

impl From<BPolicyArg> for BPolicy {
    fn from(arg: BPolicyArg) -> Self {
        match arg {
            BPolicyArg::Scoped => BPolicy::Scoped,
            BPolicyArg::Persistent => BPolicy::Persistent,
        }
    }
}

impl BPolicyArg {
    pub fn as_str(self) -> &'static str {
        match self {
            BPolicyArg::Scoped => "scoped",
            BPolicyArg::Persistent => "persistent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Step-1 selection order in label form: `ascending`, `script:1,3`,
/// `random:SEED` or `priority:3,4`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum OrderSpec {
    #[default]
    Ascending,
    Script(Vec<String>),
    Random(u64),
    Priority(Vec<String>),
}

impl FromStr for OrderSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let labels = |rest: &str| -> Vec<String> {
            rest.split(',')
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect()
        };
        match s.split_once(':') {
            None if s == "ascending" => Ok(OrderSpec::Ascending),
            Some(("script", rest)) => Ok(OrderSpec::Script(labels(rest))),
            Some(("priority", rest)) => Ok(OrderSpec::Priority(labels(rest))),
            Some(("random", seed)) => seed
                .trim()
                .parse()
                .map(OrderSpec::Random)
                .map_err(|_| format!("invalid random seed `{seed}`")),
            _ => Err(format!(
                "unknown order `{s}` (expected ascending, script:A,B, random:SEED or priority:A,B)"
            )),
        }
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::Ascending => write!(f, "ascending"),
            OrderSpec::Script(l) => write!(f, "script:{}", l.join(",")),
            OrderSpec::Random(seed) => write!(f, "random:{seed}"),
            OrderSpec::Priority(l) => write!(f, "priority:{}", l.join(",")),
        }
    }
}

impl OrderSpec {
    pub fn resolve(&self, g: &Graph) -> Result<SelectionOrder, CliError> {
        let indices = |labels: &[String]| -> Result<Vec<usize>, CliError> {
            labels
                .iter()
                .map(|l| {
                    g.index_of(l)
                        .ok_or_else(|| CliError::Usage(format!("order names unknown or pruned node `{l}`")))
                })
                .collect()
        };
        Ok(match self {
            OrderSpec::Ascending => SelectionOrder::Ascending,
            OrderSpec::Random(seed) => SelectionOrder::Random(*seed),
            OrderSpec::Script(l) => SelectionOrder::Scripted(indices(l)?),
            OrderSpec::Priority(l) => SelectionOrder::Priority(indices(l)?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input_path: PathBuf,
    /// Defaults to `s` when that label exists.
    pub source: Option<String>,
    /// Defaults to `t` when that label exists.
    pub sink: Option<String>,
    pub algorithm: Algorithm,
    pub yeh_policy: Option<YehPolicyArg>,
    pub order: OrderSpec,
    pub b_policy: BPolicyArg,
    pub prune: bool,
    pub compare_oracle: bool,
    pub output_format: OutputFormat,
    pub emit_cuts: bool,
    pub all_sinks: bool,
    pub step_limit: Option<u64>,
    pub trace: bool,
}

impl RunConfig {
    pub fn new(input_path: impl Into<PathBuf>) -> Self {
        RunConfig {
            input_path: input_path.into(),
            source: None,
            sink: None,
            algorithm: Algorithm::Corrected,
            yeh_policy: None,
            order: OrderSpec::Ascending,
            b_policy: BPolicyArg::Scoped,
            prune: true,
            compare_oracle: false,
            output_format: OutputFormat::Text,
            emit_cuts: false,
            all_sinks: false,
            step_limit: None,
            trace: false,
        }
    }

    /// Checks flag combinations; returns warnings for flags that will be ignored.
    pub fn validate(&self) -> Result<Vec<String>, CliError> {
        let mut warnings = Vec::new();
        match (self.algorithm, self.yeh_policy) {
            (Algorithm::YehOriginal, None) => {
                return Err(CliError::Usage("--algorithm yeh-original requires --yeh-policy".into()))
            }
            (Algorithm::YehOriginal, Some(_)) => {}
            (_, Some(_)) => {
                return Err(CliError::Usage(
                    "--yeh-policy only applies to --algorithm yeh-original".into(),
                ))
            }
            (_, None) => {}
        }
        match self.step_limit {
            Some(0) => return Err(CliError::Usage("--step-limit must be positive".into())),
            Some(_) if self.algorithm != Algorithm::YehOriginal => {
                warnings.push("warning: --step-limit only applies to yeh-original; ignored".into())
            }
            _ => {}
        }
        Ok(warnings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_specs() {
        assert_eq!("ascending".parse(), Ok(OrderSpec::Ascending));
        assert_eq!(
            "script:1,3".parse(),
            Ok(OrderSpec::Script(vec!["1".into(), "3".into()]))
        );
        assert_eq!("random:7".parse(), Ok(OrderSpec::Random(7)));
        assert_eq!("priority:3".parse(), Ok(OrderSpec::Priority(vec!["3".into()])));
        assert!("random:x".parse::<OrderSpec>().is_err());
        assert!("descending".parse::<OrderSpec>().is_err());
        for s in ["ascending", "script:1,3", "random:7", "priority:3,4"] {
            assert_eq!(s.parse::<OrderSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn yeh_policy_pairing() {
        let mut c = RunConfig::new("x");
        c.algorithm = Algorithm::YehOriginal;
        assert!(c.validate().is_err());
        c.yeh_policy = Some(YehPolicyArg::GotoStep4);
        assert!(c.validate().unwrap().is_empty());
        c.algorithm = Algorithm::Corrected;
        assert!(c.validate().is_err());
        c.yeh_policy = None;
        c.step_limit = Some(5);
        assert_eq!(c.validate().unwrap().len(), 1);
        c.step_limit = Some(0);
        assert!(c.validate().is_err());
    }
}
