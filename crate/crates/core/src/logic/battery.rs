use std::fmt;

use rayon::prelude::*;

use super::Statement;
use crate::error::Error;
use crate::models::{Model, ModelClass, Witness};
use crate::structures::Verdict;

#[derive(Debug, Clone)]
pub struct BatteryRow {
    pub name: String,
    pub class: ModelClass,
    pub verdict: Result<Verdict<Witness>, Error>,
}

impl BatteryRow {
    pub fn is_valid(&self) -> bool {
        matches!(self.verdict, Ok(Verdict::Holds))
    }
}

impl fmt::Display for BatteryRow {
    /// `name<TAB>valid|invalid|error<TAB>witness or message or -`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Ok(Verdict::Holds) => write!(f, "{}\tvalid\t-", self.name),
            Ok(Verdict::Fails(w)) => write!(f, "{}\tinvalid\t{w}", self.name),
            Err(e) => write!(f, "{}\terror\t{e}", self.name),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BatteryReport {
    pub statement: Statement,
    pub rows: Vec<BatteryRow>,
}

impl BatteryReport {
    pub fn all_valid(&self) -> bool {
        self.rows.iter().all(BatteryRow::is_valid)
    }

    fn tally(&self, pick: impl Fn(ModelClass) -> bool) -> (usize, usize) {
        let rows: Vec<_> = self.rows.iter().filter(|r| pick(r.class)).collect();
        (rows.iter().filter(|r| r.is_valid()).count(), rows.len())
    }

    /// Whether the statement is valid in all field rows exactly when it is
    /// valid in all meadow rows (fields included).
    pub fn fields_agree_with_meadows(&self) -> bool {
        let (fv, fn_) = self.tally(|c| c == ModelClass::Field);
        let (mv, mn) = self.tally(|c| c != ModelClass::Other);
        (fv == fn_) == (mv == mn)
    }

    pub fn summary(&self) -> String {
        let (fv, fn_) = self.tally(|c| c == ModelClass::Field);
        let (mv, mn) = self.tally(|c| c != ModelClass::Other);
        let word = if self.fields_agree_with_meadows() {
            "agree"
        } else {
            "disagree"
        };
        format!("# fields {fv}/{fn_} valid, meadows {mv}/{mn} valid: {word}")
    }
}

impl fmt::Display for BatteryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        writeln!(f, "{}", self.summary())
    }
}

/// Checks `st` in every model, in parallel, keeping the input order.
pub fn battery_check(st: &Statement, models: &[Box<dyn Model>]) -> BatteryReport {
    let rows = models
        .par_iter()
        .map(|m| BatteryRow {
            name: m.name().to_string(),
            class: m.class(),
            verdict: m.check(st),
        })
        .collect();
    BatteryReport {
        statement: st.clone(),
        rows,
    }
}
