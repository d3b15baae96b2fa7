//! Verification reports: a suite name and a flat list of checked identities.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub id: String,
    pub element: String,
    pub status: Status,
    /// Difference of the two sides, printed, when the check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub entries: Vec<Entry>,
    /// Assumptions taken on trust rather than checked.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<String>,
    /// Free-form per-degree dimension tables and similar data.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            ..Default::default()
        }
    }

    pub fn pass(&mut self, id: impl Into<String>, element: impl Into<String>) {
        self.entries.push(Entry {
            id: id.into(),
            element: element.into(),
            status: Status::Pass,
            witness: None,
        });
    }

    pub fn fail(&mut self, id: impl Into<String>, element: impl Into<String>, witness: impl Into<String>) {
        self.entries.push(Entry {
            id: id.into(),
            element: element.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        });
    }

    /// Records a check whose witness is `None` when it holds.
    pub fn check(&mut self, id: impl Into<String>, element: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(id, element),
            Some(w) => self.fail(id, element, w),
        }
    }

    pub fn assume(&mut self, text: impl Into<String>) {
        self.assumptions.push(text.into());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
        self.assumptions.extend(other.assumptions);
        self.notes.extend(other.notes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }

    /// Entries whose id starts with `prefix`.
    pub fn with_id<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Entry> {
        self.entries.iter().filter(move |e| e.id.starts_with(prefix))
    }
}
