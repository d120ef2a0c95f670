//! Run configuration: flat `key = value` text with list values.
//!
//! Absent keys fall back to the defaults of the bundled case study
//! (standard lexicon, standard spread bands, lower-line vertex checks,
//! incumbent-keeping augmentation). The role map (`inputs`, `output`) has
//! no default and must be present before analysis.

use crate::CliError;
use lingreg_core::linguistic::{Lexicon, SpreadRule};
use lingreg_core::regression::{AugmentationPolicy, FitConfig, VertexCheckMode};

/// Parsed run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub lexicon_entries: Vec<(String, f64)>,
    pub spread_bands: Vec<(f64, f64)>,
    pub spread_default_width: f64,
    /// Spread bands for the output group, when they differ from the input
    /// rule. The published case-study tables fuzzify every output target
    /// below 20 with half-width 2 (even single-digit ones), while input
    /// targets below 10 get half-width 1.
    pub output_spread_bands: Option<Vec<(f64, f64)>>,
    pub output_spread_default_width: Option<f64>,
    /// Ordered input group names (coefficient roles X1..XJ).
    pub inputs: Vec<String>,
    /// Output group name.
    pub output: Option<String>,
    pub h_level: f64,
    pub vertex_check_mode: VertexCheckMode,
    pub augmentation: AugmentationPolicy,
    pub max_iterations: usize,
    pub probability_tolerance: f64,
    /// Round reduced probabilities to this many decimals before the moment
    /// stage (mirroring published-table hand-offs); `None` keeps full
    /// precision.
    pub probability_decimals: Option<u32>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            lexicon_entries: Lexicon::standard()
                .entries()
                .iter()
                .map(|(n, w)| (n.clone(), *w))
                .collect(),
            spread_bands: SpreadRule::standard().bands().to_vec(),
            spread_default_width: SpreadRule::standard().default_width(),
            output_spread_bands: None,
            output_spread_default_width: None,
            inputs: Vec::new(),
            output: None,
            h_level: 0.0,
            vertex_check_mode: VertexCheckMode::LowerLineOnly,
            augmentation: AugmentationPolicy::KeepIncumbent,
            max_iterations: 20,
            probability_tolerance: 0.02,
            probability_decimals: None,
        }
    }
}

impl RunConfig {
    pub fn parse(path: &str, text: &str) -> Result<Self, CliError> {
        let mut config = RunConfig::default();
        let err = |line: usize, message: String| CliError::Parse {
            path: path.to_string(),
            line,
            column: 1,
            message,
        };
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(err(line_no, format!("expected key = value, got {line:?}")));
            };
            let key = key.trim();
            let value = value.trim();
            match key {
                "lexicon" => {
                    config.lexicon_entries = parse_pairs(value)
                        .map_err(|m| err(line_no, format!("lexicon: {m}")))?
                        .into_iter()
                        .collect();
                }
                "spread_bands" => {
                    config.spread_bands = parse_pairs(value)
                        .map_err(|m| err(line_no, format!("spread_bands: {m}")))?
                        .into_iter()
                        .map(|(k, v)| {
                            k.parse::<f64>()
                                .map(|bound| (bound, v))
                                .map_err(|_| err(line_no, format!("bad band bound {k:?}")))
                        })
                        .collect::<Result<_, _>>()?;
                }
                "spread_default_width" => {
                    config.spread_default_width = parse_f64(value)
                        .map_err(|m| err(line_no, format!("spread_default_width: {m}")))?;
                }
                "output_spread_bands" => {
                    config.output_spread_bands = Some(
                        parse_pairs(value)
                            .map_err(|m| err(line_no, format!("output_spread_bands: {m}")))?
                            .into_iter()
                            .map(|(k, v)| {
                                k.parse::<f64>()
                                    .map(|bound| (bound, v))
                                    .map_err(|_| err(line_no, format!("bad band bound {k:?}")))
                            })
                            .collect::<Result<_, _>>()?,
                    );
                }
                "output_spread_default_width" => {
                    config.output_spread_default_width = Some(
                        parse_f64(value)
                            .map_err(|m| err(line_no, format!("output_spread_default_width: {m}")))?,
                    );
                }
                "inputs" => {
                    config.inputs = split_list(value);
                    if config.inputs.is_empty() {
                        return Err(err(line_no, "inputs must name at least one group".into()));
                    }
                }
                "output" => {
                    if value.is_empty() {
                        return Err(err(line_no, "output must name a group".into()));
                    }
                    config.output = Some(value.to_string());
                }
                "h_level" => {
                    config.h_level =
                        parse_f64(value).map_err(|m| err(line_no, format!("h_level: {m}")))?;
                    if !(0.0..1.0).contains(&config.h_level) {
                        return Err(err(line_no, "h_level must lie in [0, 1)".into()));
                    }
                }
                "vertex_check_mode" => {
                    config.vertex_check_mode = match value {
                        "paper" | "lower-line" => VertexCheckMode::LowerLineOnly,
                        "full-inclusion" => VertexCheckMode::FullInclusion,
                        other => {
                            return Err(err(
                                line_no,
                                format!(
                                    "vertex_check_mode {other:?} is not \
                                     'paper' or 'full-inclusion'"
                                ),
                            ))
                        }
                    };
                }
                "augmentation" => {
                    config.augmentation = match value {
                        "keep-incumbent" => AugmentationPolicy::KeepIncumbent,
                        "accept" => AugmentationPolicy::Accept,
                        other => {
                            return Err(err(
                                line_no,
                                format!(
                                    "augmentation {other:?} is not \
                                     'keep-incumbent' or 'accept'"
                                ),
                            ))
                        }
                    };
                }
                "max_iterations" => {
                    config.max_iterations = value.parse().map_err(|_| {
                        err(line_no, format!("max_iterations {value:?} is not an integer"))
                    })?;
                    if config.max_iterations == 0 {
                        return Err(err(line_no, "max_iterations must be positive".into()));
                    }
                }
                "probability_tolerance" => {
                    config.probability_tolerance = parse_f64(value)
                        .map_err(|m| err(line_no, format!("probability_tolerance: {m}")))?;
                }
                "probability_decimals" => {
                    config.probability_decimals = if value.eq_ignore_ascii_case("none") {
                        None
                    } else {
                        Some(value.parse().map_err(|_| {
                            err(
                                line_no,
                                format!("probability_decimals {value:?} is not an integer"),
                            )
                        })?)
                    };
                }
                other => {
                    return Err(err(line_no, format!("unknown configuration key {other:?}")));
                }
            }
        }
        Ok(config)
    }

    pub fn lexicon(&self) -> Result<Lexicon, CliError> {
        Lexicon::new(self.lexicon_entries.clone()).map_err(|e| CliError::Data {
            message: e.to_string(),
        })
    }

    pub fn spread_rule(&self) -> Result<SpreadRule, CliError> {
        SpreadRule::new(self.spread_bands.clone(), self.spread_default_width).map_err(|e| {
            CliError::Data {
                message: e.to_string(),
            }
        })
    }

    /// Spread rule for the output group; falls back to the input rule when
    /// no output-specific bands are configured.
    pub fn output_spread_rule(&self) -> Result<SpreadRule, CliError> {
        match (&self.output_spread_bands, self.output_spread_default_width) {
            (None, None) => self.spread_rule(),
            (bands, width) => SpreadRule::new(
                bands.clone().unwrap_or_else(|| self.spread_bands.clone()),
                width.unwrap_or(self.spread_default_width),
            )
            .map_err(|e| CliError::Data {
                message: e.to_string(),
            }),
        }
    }

    pub fn fit_config(&self) -> FitConfig {
        FitConfig {
            max_iterations: self.max_iterations,
            vertex_mode: self.vertex_check_mode,
            augmentation: self.augmentation,
        }
    }
}

fn split_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

fn parse_pairs(value: &str) -> Result<Vec<(String, f64)>, String> {
    let mut out = Vec::new();
    for part in value.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some((name, num)) = part.split_once(':') else {
            return Err(format!("expected name:number, got {part:?}"));
        };
        let v: f64 = num
            .trim()
            .parse()
            .map_err(|_| format!("bad number in {part:?}"))?;
        out.push((name.trim().to_string(), v));
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

fn parse_f64(value: &str) -> Result<f64, String> {
    value
        .parse::<f64>()
        .map_err(|_| format!("{value:?} is not a number"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bundled_config() {
        let text = include_str!("../data/case_study_config.cfg");
        let c = RunConfig::parse("case_study_config.cfg", text).unwrap();
        assert_eq!(c.inputs, vec!["women".to_string(), "men".to_string()]);
        assert_eq!(c.output.as_deref(), Some("managers"));
        assert_eq!(c.probability_decimals, Some(2));
        assert_eq!(c.vertex_check_mode, VertexCheckMode::LowerLineOnly);
        assert_eq!(c.augmentation, AugmentationPolicy::KeepIncumbent);
        assert_eq!(c.lexicon_entries.len(), 5);
        assert_eq!(c.spread_bands, vec![(10.0, 1.0), (20.0, 2.0)]);
    }

    #[test]
    fn defaults_without_keys() {
        let c = RunConfig::parse("empty.cfg", "# nothing\n").unwrap();
        assert!(c.inputs.is_empty());
        assert!(c.output.is_none());
        assert_eq!(c.probability_decimals, None);
        assert_eq!(c.max_iterations, 20);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(matches!(
            RunConfig::parse("c.cfg", "mystery = 1\n"),
            Err(CliError::Parse { line: 1, .. })
        ));
        assert!(RunConfig::parse("c.cfg", "h_level = 1.5\n").is_err());
        assert!(RunConfig::parse("c.cfg", "vertex_check_mode = sideways\n").is_err());
        assert!(RunConfig::parse("c.cfg", "lexicon = always-0.9\n").is_err());
    }
}
