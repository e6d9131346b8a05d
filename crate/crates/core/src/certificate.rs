//! Certificate reports and the registry of named certificates.

use std::collections::BTreeMap;
use std::fmt;

use crate::arrangement::Arrangement;
use crate::error::Result;

/// One verified statement and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub certificate: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    /// Rerun after making `Δ = ∩ H_i^-` nonempty, attached when the given
    /// coorientation failed.
    pub normalized_retry: Option<Box<CertificateReport>>,
}

impl CertificateReport {
    pub fn new(certificate: impl Into<String>) -> Self {
        CertificateReport {
            certificate: certificate.into(),
            checks: Vec::new(),
            notes: Vec::new(),
            normalized_retry: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, passed, detail));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// True iff every check on the given coorientation passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "certificate {}: {}",
            self.certificate,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        if let Some(retry) = &self.normalized_retry {
            writeln!(f, "  after normalizing delta:")?;
            write!(f, "{retry}")?;
        }
        Ok(())
    }
}

/// A statement about arrangements that can be checked on a concrete input.
pub trait Certificate: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn certify(&self, arrangement: &Arrangement) -> Result<CertificateReport>;
}

struct FnCertificate {
    name: &'static str,
    description: &'static str,
    run: fn(&Arrangement) -> Result<CertificateReport>,
}

impl Certificate for FnCertificate {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn certify(&self, arrangement: &Arrangement) -> Result<CertificateReport> {
        (self.run)(arrangement)
    }
}

/// Certificates by name.
pub struct CertificateRegistry {
    entries: BTreeMap<&'static str, Box<dyn Certificate>>,
}

impl CertificateRegistry {
    pub fn new() -> Self {
        CertificateRegistry {
            entries: BTreeMap::new(),
        }
    }

    pub fn standard() -> Self {
        let mut registry = Self::new();
        registry.register_fn(
            "pl",
            "relations vanish on chambers; basis images independent; products integral",
            crate::kring::certify_theorem_pl,
        );
        registry.register_fn(
            "pb",
            "image of the restriction map equals the face-condition lattice B(A)",
            crate::subring::certify_pb,
        );
        registry.register_fn(
            "delres-p",
            "deletion-restriction sequence on P is exact",
            crate::delres::certify_exactness_p,
        );
        registry.register_fn(
            "delres-b",
            "deletion-restriction sequence on B is exact",
            crate::delres::certify_exactness_b,
        );
        registry.register_fn(
            "decone",
            "pullback identity for the decone map holds on every chamber",
            |a| crate::kring::certify_decone_identity(a, 0),
        );
        registry
    }

    pub fn register<C: Certificate + 'static>(&mut self, certificate: C) {
        self.entries.insert(certificate.name(), Box::new(certificate));
    }

    pub fn register_fn(
        &mut self,
        name: &'static str,
        description: &'static str,
        run: fn(&Arrangement) -> Result<CertificateReport>,
    ) {
        self.register(FnCertificate {
            name,
            description,
            run,
        });
    }

    pub fn get(&self, name: &str) -> Option<&dyn Certificate> {
        self.entries.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }
}

impl Default for CertificateRegistry {
    fn default() -> Self {
        Self::standard()
    }
}
