//! Embedded fixtures: the thirteen simple classes on three curves, the
//! four-curve martagons and their higher-genus companions, and a few others.

use crate::arrangement::Arrangement;
use crate::error::{DplError, Result};

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../../catalog/", $name, ".dpl")))),*]
    };
}

static ARRANGEMENTS: &[(&str, &str)] = entries!(
    "C04", "C07", "C18", "C37", "C15", "C43", "C22", "C33", "C32", "C25_2", "C25_1", "C36", "C64", "M1", "M2",
    "M1star", "M2star", "TwoCurves", "Example2Left", "Example2Right", "Upsilon", "C64x4",
);

static CHIROTOPES: &[(&str, &str)] = &[
    ("allC04_n5", include_str!("../../../fixtures/allC04_n5.chi")),
    ("allC32_n4", include_str!("../../../fixtures/allC32_n4.chi")),
    ("mixedC22C32_n4", include_str!("../../../fixtures/mixedC22C32_n4.chi")),
];

/// Names of the thirteen simple classes on three curves, in catalog order.
pub const CLASS_NAMES: [&str; 13] =
    ["C04", "C07", "C18", "C37", "C15", "C43", "C22", "C33", "C32", "C25_2", "C25_1", "C36", "C64"];

/// Bitangent cocycle representatives on three indices.
pub const COCYCLE_REPRESENTATIVES: &str = include_str!("../../../fixtures/cocycles3.txt");

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
}

impl Fixture {
    pub fn arrangement(&self) -> Result<Arrangement> {
        Arrangement::parse(self.text)
    }
}

pub fn get(name: &str) -> Result<Fixture> {
    ARRANGEMENTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(name, text)| Fixture { name, text })
        .ok_or_else(|| DplError::UnknownFixture(name.to_string()))
}

pub fn all() -> Vec<Fixture> {
    ARRANGEMENTS.iter().map(|&(name, text)| Fixture { name, text }).collect()
}

pub fn arrangement(name: &str) -> Result<Arrangement> {
    get(name)?.arrangement()
}

/// Text of a stored chirotope fixture.
pub fn chirotope_text(name: &str) -> Result<&'static str> {
    CHIROTOPES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, t)| t)
        .ok_or_else(|| DplError::UnknownFixture(name.to_string()))
}

pub fn chirotope_names() -> Vec<&'static str> {
    CHIROTOPES.iter().map(|&(n, _)| n).collect()
}

pub fn cocycle_representatives() -> Result<Vec<crate::cocycle::FixtureLabel>> {
    crate::cocycle::parse_fixture(COCYCLE_REPRESENTATIVES)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for f in all() {
            let a = f.arrangement().unwrap_or_else(|e| panic!("{}: {e}", f.name));
            assert_eq!(a.name(), Some(f.name));
        }
        for n in chirotope_names() {
            crate::chirotope::Chirotope::parse(chirotope_text(n).unwrap()).unwrap();
        }
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(get("C99"), Err(DplError::UnknownFixture(_))));
        assert!(chirotope_text("nope").is_err());
    }

    #[test]
    fn cocycle_fixture() {
        let reps = cocycle_representatives().unwrap();
        assert!(reps.len() >= 5);
        assert!(reps.iter().all(|r| r.label.bases() == [1, 2, 3].into()));
    }
}
