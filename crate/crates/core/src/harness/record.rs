use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Outcome of one check. Only proven statements can `Fail`;
/// conjectural statements are reported as consistent or inconsistent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ConjectureConsistent,
    ConjectureInconsistent,
}

impl Verdict {
    pub fn theorem(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn conjecture(ok: bool) -> Self {
        if ok {
            Verdict::ConjectureConsistent
        } else {
            Verdict::ConjectureInconsistent
        }
    }

    pub fn is_ok(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::ConjectureConsistent)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ConjectureConsistent => "conjecture-consistent",
            Verdict::ConjectureInconsistent => "conjecture-inconsistent",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub d: Option<u64>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub l: Option<u64>,
    pub zeta_exp: Option<u64>,
}

impl Params {
    pub fn dmn(d: u64, m: usize, n: usize) -> Self {
        Self {
            d: Some(d),
            m: Some(m),
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn l(self, l: u64) -> Self {
        Self { l: Some(l), ..self }
    }

    pub fn zeta(self, e: u64) -> Self {
        Self {
            zeta_exp: Some(e),
            ..self
        }
    }
}

/// One harness verdict, serialised as a single NDJSON line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub params: Params,
    pub computed: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

impl CheckRecord {
    /// Equality ignoring timing.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.check_id == other.check_id
            && self.params == other.params
            && self.computed == other.computed
            && self.verdict == other.verdict
    }

    pub fn to_ndjson(&self) -> String {
        serde_json::to_string(self).expect("records are always serialisable")
    }
}

/// Collects named values for a record and times its construction.
pub(crate) struct RecordBuilder {
    check_id: String,
    params: Params,
    computed: BTreeMap<String, String>,
    start: Instant,
}

impl RecordBuilder {
    pub(crate) fn new(check_id: &str, params: Params) -> Self {
        Self {
            check_id: check_id.to_string(),
            params,
            computed: BTreeMap::new(),
            start: Instant::now(),
        }
    }

    pub(crate) fn put(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.computed.insert(key.to_string(), value.to_string());
        self
    }

    pub(crate) fn finish(self, verdict: Verdict) -> CheckRecord {
        CheckRecord {
            check_id: self.check_id,
            params: self.params,
            computed: self.computed,
            verdict,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// Sorts records into the canonical output order.
pub fn sort_records(records: &mut [CheckRecord]) {
    records.sort_by(|a, b| (&a.check_id, &a.params).cmp(&(&b.check_id, &b.params)));
}

/// Tallies of each verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub conjecture_consistent: usize,
    pub conjecture_inconsistent: usize,
}

impl Summary {
    pub fn of(records: &[CheckRecord]) -> Self {
        let mut s = Self::default();
        for r in records {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::ConjectureConsistent => s.conjecture_consistent += 1,
                Verdict::ConjectureInconsistent => s.conjecture_inconsistent += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} pass, {} fail, {} conjecture-consistent, {} conjecture-inconsistent",
            self.pass, self.fail, self.conjecture_consistent, self.conjecture_inconsistent
        )
    }
}
