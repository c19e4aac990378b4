//! Plat words: a front read left to right as cusps and crossings.
//!
//! One event per line: `L k` (left cusp creating levels k, k+1), `R k`
//! (right cusp closing levels k, k+1), `X k` (crossing of levels k, k+1).
//! Levels are 1-based from the bottom at the moment of the event. `#` starts
//! a comment; blank lines are ignored.

use std::fmt;

use super::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EventKind {
    LeftCusp,
    RightCusp,
    Crossing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Event {
    pub kind: EventKind,
    /// 1-based lower level of the pair the event acts on.
    pub level: usize,
}

impl Event {
    pub fn left(level: usize) -> Self {
        Event {
            kind: EventKind::LeftCusp,
            level,
        }
    }

    pub fn right(level: usize) -> Self {
        Event {
            kind: EventKind::RightCusp,
            level,
        }
    }

    pub fn cross(level: usize) -> Self {
        Event {
            kind: EventKind::Crossing,
            level,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            EventKind::LeftCusp => 'L',
            EventKind::RightCusp => 'R',
            EventKind::Crossing => 'X',
        };
        write!(f, "{c} {}", self.level)
    }
}

/// A validated sequence of events: strand count starts and ends at zero and
/// every level is in range when its event happens.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlatWord {
    events: Vec<Event>,
}

impl PlatWord {
    /// Validates an event list. Positions in errors are 1-based event
    /// indices reported as line numbers.
    pub fn new(events: Vec<Event>) -> Result<Self, DiagramError> {
        if events.is_empty() {
            return Err(DiagramError::Parse {
                line: 0,
                column: 0,
                msg: "empty plat".into(),
            });
        }
        let mut count = 0usize;
        for (i, e) in events.iter().enumerate() {
            count = step(count, e).map_err(|msg| DiagramError::Parse {
                line: i + 1,
                column: 3,
                msg: format!("{msg} at event {}", i + 1),
            })?;
        }
        if count != 0 {
            return Err(DiagramError::Parse {
                line: events.len(),
                column: 0,
                msg: format!("{count} strands left open after the last event"),
            });
        }
        Ok(PlatWord { events })
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Strand count just to the right of each event.
    pub fn strand_counts(&self) -> Vec<usize> {
        let mut c = 0;
        self.events
            .iter()
            .map(|e| {
                c = step(c, e).expect("validated");
                c
            })
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.count(EventKind::Crossing)
    }

    pub fn count(&self, kind: EventKind) -> usize {
        self.events.iter().filter(|e| e.kind == kind).count()
    }

    /// One event per line, newline-terminated.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for e in &self.events {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s
    }
}

fn step(count: usize, e: &Event) -> Result<usize, String> {
    let k = e.level;
    match e.kind {
        EventKind::LeftCusp => {
            if k < 1 || k > count + 1 {
                return Err(format!("level {k} out of range"));
            }
            Ok(count + 2)
        }
        EventKind::RightCusp | EventKind::Crossing => {
            if k < 1 || k + 1 > count {
                return Err(format!("level {k} out of range"));
            }
            Ok(if e.kind == EventKind::RightCusp {
                count - 2
            } else {
                count
            })
        }
    }
}

fn tokens_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (j, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st + 1, &s[st..j]));
            }
        } else if start.is_none() {
            start = Some(j);
        }
    }
    if let Some(st) = start {
        out.push((st + 1, &s[st..]));
    }
    out
}

/// Parses plat text. Errors carry the 1-based line and column of the
/// offending token.
pub fn parse_plat(text: &str) -> Result<PlatWord, DiagramError> {
    let mut events = Vec::new();
    let mut lines = Vec::new();
    let mut count = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let toks = tokens_with_columns(body);
        let (c0, kind_tok) = toks[0];
        let kind = match kind_tok {
            "L" => EventKind::LeftCusp,
            "R" => EventKind::RightCusp,
            "X" => EventKind::Crossing,
            other => {
                return Err(DiagramError::Parse {
                    line,
                    column: c0,
                    msg: format!("unknown token `{other}`"),
                })
            }
        };
        let Some(&(c1, lvl_tok)) = toks.get(1) else {
            return Err(DiagramError::Parse {
                line,
                column: c0 + kind_tok.len(),
                msg: "missing level".into(),
            });
        };
        if let Some(&(c2, extra)) = toks.get(2) {
            return Err(DiagramError::Parse {
                line,
                column: c2,
                msg: format!("unexpected token `{extra}`"),
            });
        }
        let level: usize = lvl_tok
            .parse()
            .ok()
            .filter(|&k: &usize| k < 1 << 20)
            .ok_or_else(|| DiagramError::Parse {
                line,
                column: c1,
                msg: format!("bad level `{lvl_tok}`"),
            })?;
        let ev = Event { kind, level };
        count = step(count, &ev).map_err(|msg| DiagramError::Parse {
            line,
            column: c1,
            msg: format!("{msg} at event {}", events.len() + 1),
        })?;
        events.push(ev);
        lines.push(line);
    }
    if events.is_empty() {
        return Err(DiagramError::Parse {
            line: 0,
            column: 0,
            msg: "empty plat".into(),
        });
    }
    if count != 0 {
        return Err(DiagramError::Parse {
            line: *lines.last().unwrap(),
            column: 1,
            msg: format!("{count} strands left open after the last event"),
        });
    }
    Ok(PlatWord { events })
}
