//! Canonical points of the four fundamental domains at ∞.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::group_core::P1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DomainTag {
    /// v₀, v₁, v₂, …
    RayGamma,
    /// v₋₁, v₀, v₁, …
    RayHatGamma,
    /// the whole apartment
    ApartmentGamma0,
    /// rays gₓ·{v₀, v₁, …} for x ∈ P¹(F), glued at v₀
    BouquetGammaT,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DomainPoint {
    pub tag: DomainTag,
    pub n: i64,
    pub label: Option<P1>,
}

impl DomainPoint {
    pub fn new(tag: DomainTag, n: i64) -> DomainPoint {
        DomainPoint { tag, n, label: None }
    }

    pub fn is_valid(&self) -> bool {
        match self.tag {
            DomainTag::RayGamma => self.n >= 0 && self.label.is_none(),
            DomainTag::RayHatGamma => self.n >= -1 && self.label.is_none(),
            DomainTag::ApartmentGamma0 => self.label.is_none(),
            DomainTag::BouquetGammaT => match &self.label {
                None => false,
                Some(l) => self.n > 0 || (self.n == 0 && *l == P1::Inf),
            },
        }
    }
}

impl fmt::Display for DomainPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} n={}", self.tag, self.n)?;
        if let Some(l) = &self.label {
            write!(f, " x={l}")?;
        }
        Ok(())
    }
}

/// DOT description of the domain between indices `lo` and `hi`, with one
/// ray per label for the bouquet.
pub fn dot_segment(tag: DomainTag, lo: i64, hi: i64, labels: &[P1]) -> String {
    let mut s = String::from("graph domain {\n");
    match tag {
        DomainTag::BouquetGammaT => {
            s.push_str("  v0 [label=\"v0\"];\n");
            for (i, l) in labels.iter().enumerate() {
                let mut prev = "v0".to_string();
                for n in 1..=hi.max(1) {
                    let id = format!("r{i}_v{n}");
                    let _ = writeln!(s, "  {id} [label=\"v{n} x={l}\"];");
                    let _ = writeln!(s, "  {prev} -- {id};");
                    prev = id;
                }
            }
        }
        _ => {
            let start = match tag {
                DomainTag::RayGamma => lo.max(0),
                DomainTag::RayHatGamma => lo.max(-1),
                _ => lo,
            };
            for n in start..=hi {
                let _ = writeln!(s, "  \"v{n}\" [label=\"v{n}\"];");
                if n > start {
                    let _ = writeln!(s, "  \"v{}\" -- \"v{n}\";", n - 1);
                }
            }
        }
    }
    s.push_str("}\n");
    s
}
