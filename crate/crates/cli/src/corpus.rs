//! Bundled example diagrams with golden values.

use kashaev_core::diagram::{parse_input, ParsedInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    /// PD or braid text.
    pub source: &'static str,
    /// Normalized Alexander polynomial in `t`.
    pub alexander: Option<&'static str>,
    /// Classical signature at `omega = -1`.
    pub sigma: Option<i64>,
    /// Whether every circle root is accounted for by the signature.
    pub applicable: Option<bool>,
}

impl CorpusEntry {
    pub fn parse(&self) -> kashaev_core::Result<ParsedInput> {
        let mut p = parse_input(self.source)?;
        p.diagram = p.diagram.with_name(self.name);
        Ok(p)
    }
}

const fn entry(
    name: &'static str,
    source: &'static str,
    alexander: &'static str,
    sigma: i64,
    applicable: Option<bool>,
) -> CorpusEntry {
    CorpusEntry { name, source, alexander: Some(alexander), sigma: Some(sigma), applicable }
}

static CORPUS: &[CorpusEntry] = &[
    entry("unknot", "", "1", 0, None),
    entry("kink+", "X 1 1 2 2", "1", 0, None),
    entry("kink-", "X 1 2 2 1", "1", 0, None),
    entry("trefoil-pd", "X 1 5 2 4; X 3 1 4 6; X 5 3 6 2", "t - 1 + t^-1", -2, None),
    entry("trefoil", "B 2: 1 1 1", "t - 1 + t^-1", -2, Some(true)),
    entry("figure-eight", "B 3: 1 -2 1 -2", "-t + 3 - t^-1", 0, Some(true)),
    entry("torus-2-5", "B 2: 1 1 1 1 1", "t^2 - t + 1 - t^-1 + t^-2", -4, Some(true)),
    entry("torus-2-7", "B 2: 1 1 1 1 1 1 1", "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3", -6, Some(true)),
    entry("5_2", "B 3: 1 1 1 2 -1 2", "2*t - 3 + 2*t^-1", -2, Some(true)),
    entry("6_1", "B 4: 1 1 2 -1 -3 2 -3", "-2*t + 5 - 2*t^-1", 0, Some(true)),
    entry("torus-3-4", "B 3: 1 2 1 2 1 2 1 2", "t^3 - t^2 + 1 - t^-2 + t^-3", -6, Some(true)),
    entry("torus-3-5", "B 3: 1 2 1 2 1 2 1 2 1 2", "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4", -8, Some(true)),
];

pub fn corpus() -> &'static [CorpusEntry] {
    CORPUS
}

pub fn lookup(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}
