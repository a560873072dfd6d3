use serde::{Deserialize, Serialize};

use super::ReportError;
use crate::dynamics::Cycle;
use crate::exact::{Interval, Rational};
use crate::partition::{AtlasEntry, PartitionAtlas};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TailRecord {
    pub lo: Rational,
    pub hi: Rational,
    pub kind: String,
    pub k_start: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryRecord {
    pub interval: Interval,
    pub lo: Rational,
    pub lo_closed: bool,
    pub hi: Rational,
    pub hi_closed: bool,
    pub cycle: Vec<i64>,
    pub length: usize,
}

/// The on-disk shape of one atlas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtlasRecord {
    pub a0: i64,
    pub a1: i64,
    pub s: i64,
    pub d: i64,
    #[serde(rename = "K")]
    pub k: i64,
    pub tail: TailRecord,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bridge: Vec<EntryRecord>,
    pub body: Vec<EntryRecord>,
}

impl EntryRecord {
    fn of(e: &AtlasEntry) -> EntryRecord {
        let i = &e.interval;
        EntryRecord {
            interval: i.clone(),
            lo: i.lo().clone(),
            lo_closed: i.lo_closed(),
            hi: i.hi().clone(),
            hi_closed: i.hi_closed(),
            cycle: e.cycle.word().to_vec(),
            length: e.cycle.len(),
        }
    }

    fn into_entry(self) -> Result<AtlasEntry, ReportError> {
        let rebuilt = Interval::new(self.lo.clone(), self.lo_closed, self.hi.clone(), self.hi_closed);
        if rebuilt.as_ref() != Some(&self.interval) {
            return Err(ReportError::Inconsistent(format!("endpoint fields disagree with {}", self.interval)));
        }
        if self.cycle.is_empty() || self.cycle.len() != self.length {
            return Err(ReportError::Inconsistent(format!("bad cycle length on {}", self.interval)));
        }
        Ok(AtlasEntry { interval: self.interval, cycle: Cycle::new(self.cycle) })
    }
}

impl AtlasRecord {
    pub fn of(atlas: &PartitionAtlas) -> AtlasRecord {
        let t = &atlas.tail;
        AtlasRecord {
            a0: atlas.a0,
            a1: atlas.a1,
            s: t.label.s,
            d: t.label.d,
            k: t.label.k_min,
            tail: TailRecord {
                lo: t.interval.lo().clone(),
                hi: t.interval.hi().clone(),
                kind: t.kind.as_str().to_string(),
                k_start: t.k_start,
            },
            bridge: atlas.bridge.iter().map(EntryRecord::of).collect(),
            body: atlas.body.iter().map(EntryRecord::of).collect(),
        }
    }

    /// Rebuilds the atlas, recomputing the tail and statistics and checking
    /// that the stored label and tail agree with them.
    pub fn into_atlas(self) -> Result<PartitionAtlas, ReportError> {
        if self.body.is_empty() {
            return Err(ReportError::Inconsistent("empty body".into()));
        }
        let expected = self.clone();
        let (a0, a1) = (self.a0, self.a1);
        let bridge = self.bridge.into_iter().map(EntryRecord::into_entry).collect::<Result<_, _>>()?;
        let body = self.body.into_iter().map(EntryRecord::into_entry).collect::<Result<_, _>>()?;
        let atlas = PartitionAtlas::from_entries(a0, a1, bridge, body);
        if AtlasRecord::of(&atlas) != expected {
            return Err(ReportError::Inconsistent(format!(
                "record for ({a0},{a1}) is not in canonical form or its tail does not match the point"
            )));
        }
        Ok(atlas)
    }
}

pub fn atlas_to_json(atlas: &PartitionAtlas) -> String {
    let mut s = serde_json::to_string_pretty(&AtlasRecord::of(atlas)).expect("records always serialize");
    s.push('\n');
    s
}

pub fn atlas_from_json(text: &str) -> Result<PartitionAtlas, ReportError> {
    serde_json::from_str::<AtlasRecord>(text)?.into_atlas()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{compute_atlas, Limits};

    #[test]
    fn round_trip() {
        for (a0, a1) in [(0, 0), (-1, -1), (3, 3), (2, 3)] {
            let atlas = compute_atlas(a0, a1, &Limits::default()).unwrap();
            let text = atlas_to_json(&atlas);
            assert_eq!(atlas_from_json(&text).unwrap(), atlas);
        }
    }

    #[test]
    fn field_layout() {
        let atlas = compute_atlas(-1, 1, &Limits::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&atlas_to_json(&atlas)).unwrap();
        assert_eq!(v["K"], 1);
        assert_eq!(v["tail"]["hi"], "-5/3");
        assert_eq!(v["tail"]["kind"], "triangular");
        assert!(v.get("bridge").is_none());
        let first = &v["body"][0];
        assert_eq!(first["interval"], "[-5/3,-3/2)");
        assert_eq!(first["lo_closed"], true);
        assert_eq!(first["length"], first["cycle"].as_array().unwrap().len());
    }

    #[test]
    fn tampering_is_rejected() {
        let atlas = compute_atlas(-1, -1, &Limits::default()).unwrap();
        let text = atlas_to_json(&atlas).replacen("\"s\": 0", "\"s\": 1", 1);
        assert!(matches!(atlas_from_json(&text), Err(ReportError::Inconsistent(_))));
        assert!(matches!(atlas_from_json("{"), Err(ReportError::Json(_))));
    }
}
