use std::fmt::Write;

use crate::certificate::CertificateReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Kv,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn add(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }
}

/// Output of one subcommand. `passed` is false when any certificate failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub sections: Vec<Section>,
    pub warnings: Vec<String>,
    pub passed: bool,
}

impl Default for Report {
    fn default() -> Self {
        Report {
            sections: Vec::new(),
            warnings: Vec::new(),
            passed: true,
        }
    }
}

fn key_of(name: &str) -> String {
    name.chars()
        .map(|c| match c {
            'α' => "_alpha_".to_string(),
            'β' => "_beta_".to_string(),
            'γ' => "_gamma_".to_string(),
            '∘' => "_o_".to_string(),
            c if c.is_ascii_alphanumeric() => c.to_ascii_lowercase().to_string(),
            _ => "_".to_string(),
        })
        .collect::<String>()
        .split('_')
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join("_")
}

impl Report {
    pub fn section(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn certificate(&mut self, report: &CertificateReport) {
        self.passed &= report.passed();
        self.push_certificate(&report.certificate, report);
    }

    fn push_certificate(&mut self, name: &str, report: &CertificateReport) {
        let mut section = Section::new(name);
        section.add("status", if report.passed() { "pass" } else { "fail" });
        for check in &report.checks {
            let key = key_of(&check.name);
            section.add(
                key,
                format!("{} ({})", if check.passed { "pass" } else { "fail" }, check.detail),
            );
        }
        for (k, note) in report.notes.iter().enumerate() {
            section.add(format!("note{}", k + 1), note);
        }
        self.section(section);
        if let Some(retry) = &report.normalized_retry {
            self.push_certificate(&format!("{name}.normalized"), retry);
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        match format {
            OutputFormat::Text => {
                for w in &self.warnings {
                    let _ = writeln!(out, "warning: {w}");
                }
                for s in &self.sections {
                    let _ = writeln!(out, "[{}]", s.name);
                    for (k, v) in &s.entries {
                        let _ = writeln!(out, "  {k}: {v}");
                    }
                }
            }
            OutputFormat::Kv => {
                for (k, w) in self.warnings.iter().enumerate() {
                    let _ = writeln!(out, "warning.{} = {w}", k + 1);
                }
                for s in &self.sections {
                    for (k, v) in &s.entries {
                        let _ = writeln!(out, "{}.{k} = {v}", s.name);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_become_keys() {
        assert_eq!(key_of("ker β = im α"), "ker_beta_im_alpha");
        assert_eq!(key_of("kernel containment"), "kernel_containment");
        assert_eq!(key_of("h∘α = a∘h"), "h_o_alpha_a_o_h");
    }
}
