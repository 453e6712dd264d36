use arcnum::{arc_number, extract_star, minimal_partition, ChordDiagram, Error};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    ArcNumber,
    Partition,
    Star,
    Canon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub t: usize,
    pub a: usize,
    pub chords: Vec<String>,
    pub star: String,
}

/// One result per input line. Either the result fields or `error` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arc_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cuts: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl OutputRecord {
    fn failed(input: &str, error: String) -> Self {
        Self {
            input: input.to_string(),
            canonical: None,
            arc_number: None,
            cuts: None,
            witness: None,
            error: Some(error),
        }
    }

    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }

    /// Tab-separated human-readable line; `None` for failed lines.
    pub fn plain(&self, mode: Mode) -> Option<String> {
        if self.is_error() {
            return None;
        }
        let arcs = self.arc_number.unwrap_or_default();
        let result = match mode {
            Mode::ArcNumber => arcs.to_string(),
            Mode::Partition => {
                let cuts: Vec<String> = self.cuts.iter().flatten().map(|g| g.to_string()).collect();
                format!("{arcs} cuts={}", cuts.join(","))
            }
            Mode::Star => match &self.witness {
                Some(w) => format!("t={} a={} chords={}", w.t, w.a, w.chords.join(",")),
                None if arcs == 2 => "arc number 2: no star".to_string(),
                None => format!("arc number {arcs}"),
            },
            Mode::Canon => return self.canonical.clone(),
        };
        Some(format!("{}\t{result}", self.input))
    }
}

pub fn process_line(line: &str, mode: Mode) -> OutputRecord {
    let input = line.trim();
    let diagram = match ChordDiagram::parse(input) {
        Ok(d) => d,
        Err(e) => return OutputRecord::failed(input, e.to_string()),
    };
    let mut record = OutputRecord {
        input: input.to_string(),
        canonical: Some(diagram.canonical_form()),
        arc_number: None,
        cuts: None,
        witness: None,
        error: None,
    };
    if mode == Mode::Canon {
        return record;
    }
    record.arc_number = Some(arc_number(&diagram));
    match mode {
        Mode::Partition => {
            record.cuts = Some(minimal_partition(&diagram).sorted_indices());
        }
        Mode::Star => match extract_star(&diagram) {
            Ok(w) => {
                let star = match w.induced_word() {
                    Ok(s) => s,
                    Err(e) => return OutputRecord::failed(input, e.to_string()),
                };
                record.witness = Some(WitnessRecord {
                    t: w.params.t,
                    a: w.params.a,
                    chords: w.labels(),
                    star,
                });
            }
            Err(Error::NoStar(_)) => {}
            Err(e) => return OutputRecord::failed(input, e.to_string()),
        },
        _ => {}
    }
    record
}

/// Processes every line, on up to `jobs` threads; output order follows
/// input order.
pub fn process_batch(lines: &[String], mode: Mode, jobs: usize) -> Vec<OutputRecord> {
    let jobs = jobs.max(1);
    if jobs == 1 || lines.len() < 2 {
        return lines.iter().map(|l| process_line(l, mode)).collect();
    }
    let chunk = lines.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = lines
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|l| process_line(l, mode))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(line: &str, mode: Mode) -> Option<String> {
        process_line(line, mode).plain(mode)
    }

    #[test]
    fn arc_number_lines() {
        assert_eq!(plain("AABBCC", Mode::ArcNumber).unwrap(), "AABBCC\t3");
        assert_eq!(plain("ABAB", Mode::ArcNumber).unwrap(), "ABAB\t2");
        let bad = process_line("AAB", Mode::ArcNumber);
        assert!(bad.error.unwrap().contains("malformed word"));
    }

    #[test]
    fn partition_lines() {
        assert_eq!(
            plain("AABBCC", Mode::Partition).unwrap(),
            "AABBCC\t3 cuts=0,2,4"
        );
        assert_eq!(plain("AA", Mode::Partition).unwrap(), "AA\t2 cuts=0,1");
        assert_eq!(plain("", Mode::Partition).unwrap(), "\t1 cuts=0");
    }

    #[test]
    fn star_lines() {
        assert_eq!(
            plain("AABBCC", Mode::Star).unwrap(),
            "AABBCC\tt=1 a=1 chords=A,B,C"
        );
        assert_eq!(
            plain("ABCABC", Mode::Star).unwrap(),
            "ABCABC\tarc number 2: no star"
        );
        assert_eq!(plain("", Mode::Star).unwrap(), "\tarc number 1");
        let line = plain("ABCADCEDBE", Mode::Star).unwrap();
        assert!(line.starts_with("ABCADCEDBE\tt=2 a=1 chords="));
        assert_eq!(line.rsplit('=').next().unwrap().split(',').count(), 5);
    }

    #[test]
    fn canon_lines() {
        assert_eq!(plain("BCCB", Mode::Canon).unwrap(), "AABB");
        assert_eq!(plain("ABAB", Mode::Canon).unwrap(), "ABAB");
        assert_eq!(plain("", Mode::Canon).unwrap(), "");
    }

    #[test]
    fn records_hold_results_or_an_error() {
        for line in ["AABBCC", "AAB", "", "ABAB", "X Y X"] {
            for mode in [Mode::ArcNumber, Mode::Partition, Mode::Star, Mode::Canon] {
                let r = process_line(line, mode);
                assert_eq!(r.is_error(), r.canonical.is_none());
            }
        }
        let json = serde_json::to_string(&process_line("AABBCC", Mode::Star)).unwrap();
        assert_eq!(
            json,
            r#"{"input":"AABBCC","canonical":"AABBCC","arc_number":3,"witness":{"t":1,"a":1,"chords":["A","B","C"],"star":"AABBCC"}}"#
        );
    }

    #[test]
    fn parallel_batches_keep_order() {
        let lines: Vec<String> = (0..50)
            .map(|i| {
                if i % 7 == 3 {
                    "AAB".into()
                } else {
                    arcnum::oracle::random_diagram(i % 12, i as u64).to_gauss_word()
                }
            })
            .collect();
        let serial = process_batch(&lines, Mode::Star, 1);
        let parallel = process_batch(&lines, Mode::Star, 4);
        assert_eq!(serial, parallel);
    }
}
