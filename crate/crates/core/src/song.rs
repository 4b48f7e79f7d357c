//! Note-level music: the pre-tokenization form.
//!
//! A [`Song`] is a bag of quantized, instrument-tagged note events plus an
//! optional per-bar chord progression. Time is measured in 16th-note units,
//! sixteen units per 4/4 bar.

use crate::error::CodecError;

/// Units per bar (4/4, 16th-note grid).
pub const UNITS_PER_BAR: usize = 16;

/// Maximum supported note duration in grid units.
pub const MAX_DURATION: u8 = 16;

/// The seven tracks of the grid, in canonical row order. The chord
/// progression occupies rows 0-1, each instrument the next row pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrackRole {
    Chord = 0,
    Bass = 1,
    Drum = 2,
    Guitar = 3,
    Piano = 4,
    String = 5,
    Melody = 6,
}

/// Number of tracks (chord + six instruments).
pub const TRACK_COUNT: usize = 7;

/// Number of grid rows (a pitch row and a duration row per track).
pub const ROW_COUNT: usize = 2 * TRACK_COUNT;

impl TrackRole {
    pub const ALL: [TrackRole; TRACK_COUNT] = [
        TrackRole::Chord,
        TrackRole::Bass,
        TrackRole::Drum,
        TrackRole::Guitar,
        TrackRole::Piano,
        TrackRole::String,
        TrackRole::Melody,
    ];

    /// The six note-bearing instrument tracks (everything but the chord track).
    pub const INSTRUMENTS: [TrackRole; 6] = [
        TrackRole::Bass,
        TrackRole::Drum,
        TrackRole::Guitar,
        TrackRole::Piano,
        TrackRole::String,
        TrackRole::Melody,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Row index of this track's pitch row; the duration row is the next one.
    pub fn pitch_row(self) -> usize {
        2 * self.index()
    }

    pub fn duration_row(self) -> usize {
        2 * self.index() + 1
    }

    pub fn from_index(i: usize) -> Option<TrackRole> {
        TrackRole::ALL.get(i).copied()
    }

    /// Track owning the given grid row.
    pub fn of_row(row: usize) -> TrackRole {
        TrackRole::ALL[row / 2]
    }

    pub fn name(self) -> &'static str {
        match self {
            TrackRole::Chord => "chord",
            TrackRole::Bass => "bass",
            TrackRole::Drum => "drum",
            TrackRole::Guitar => "guitar",
            TrackRole::Piano => "piano",
            TrackRole::String => "string",
            TrackRole::Melody => "melody",
        }
    }

    pub fn from_name(name: &str) -> Option<TrackRole> {
        TrackRole::ALL.iter().copied().find(|r| r.name() == name)
    }
}

impl std::fmt::Display for TrackRole {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One quantized note event. Drum notes store a drum-action id in `pitch`
/// and always use the special duration 0; every other track uses durations
/// in `[1, 16]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Note {
    pub track: TrackRole,
    /// Onset in 16th-note units from the start of the song.
    pub onset: u32,
    /// MIDI pitch 0-127, or a drum-action id 0-127 on the drum track.
    pub pitch: u8,
    /// Duration in 16th-note units; 0 on the drum track, 1-16 elsewhere.
    pub duration: u8,
}

impl Note {
    pub fn new(track: TrackRole, onset: u32, pitch: u8, duration: u8) -> Note {
        Note { track, onset, pitch, duration }
    }

    pub fn validate(&self) -> Result<(), CodecError> {
        if self.pitch > 127 {
            return Err(CodecError::InvalidNote(format!("pitch {} out of range", self.pitch)));
        }
        match self.track {
            TrackRole::Chord => {
                Err(CodecError::InvalidNote("chord track carries no notes".into()))
            }
            TrackRole::Drum if self.duration != 0 => Err(CodecError::InvalidNote(format!(
                "drum note must use duration 0, got {}",
                self.duration
            ))),
            TrackRole::Drum => Ok(()),
            _ if self.duration == 0 || self.duration > MAX_DURATION => {
                Err(CodecError::InvalidNote(format!(
                    "duration {} outside [1, {}]",
                    self.duration, MAX_DURATION
                )))
            }
            _ => Ok(()),
        }
    }
}

/// A chord as (root pitch class 0-11, quality index 0-7).
pub type Chord = (u8, u8);

/// Number of chord roots.
pub const CHORD_ROOTS: usize = 12;

/// Chord quality names, in token-id order.
pub const CHORD_QUALITIES: [&str; 8] = [
    "major",
    "minor",
    "diminished",
    "augmented",
    "major7",
    "minor7",
    "dominant",
    "half-diminished",
];

/// Names of the twelve chord roots.
pub const CHORD_ROOT_NAMES: [&str; 12] =
    ["C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"];

/// A quantized multi-track song.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Song {
    pub notes: Vec<Note>,
    /// Length in 4/4 bars.
    pub bars: usize,
    /// One chord per bar, or empty when no progression is attached.
    pub chords: Vec<Chord>,
    /// Semitone shift applied by key normalization (0 if never normalized);
    /// shifting all non-drum pitches by `-key_shift` restores the original key.
    pub key_shift: i8,
}

impl Song {
    pub fn new(notes: Vec<Note>, bars: usize) -> Song {
        Song { notes, bars, chords: Vec::new(), key_shift: 0 }
    }

    /// Length in grid columns.
    pub fn width(&self) -> usize {
        self.bars * UNITS_PER_BAR
    }

    /// Tracks that carry at least one note, plus the chord track when a
    /// progression is attached.
    pub fn involved_tracks(&self) -> Vec<TrackRole> {
        let mut out = Vec::new();
        if !self.chords.is_empty() {
            out.push(TrackRole::Chord);
        }
        for role in TrackRole::INSTRUMENTS {
            if self.notes.iter().any(|n| n.track == role) {
                out.push(role);
            }
        }
        out
    }

    pub fn notes_of(&self, track: TrackRole) -> impl Iterator<Item = &Note> {
        self.notes.iter().filter(move |n| n.track == track)
    }

    /// Applies the group-merge rule everywhere and sorts notes into a
    /// canonical order. Encoding and decoding a song reproduces exactly
    /// this form.
    pub fn canonicalize(&self) -> Song {
        let mut notes = Vec::new();
        for (key, group) in group_by_track_onset(&self.notes) {
            let (pitches, duration) =
                merge_group(&group).expect("groups share track and onset by construction");
            for p in pitches {
                notes.push(Note::new(key.0, key.1, p, duration));
            }
        }
        notes.sort();
        Song { notes, bars: self.bars, chords: self.chords.clone(), key_shift: self.key_shift }
    }
}

/// Groups notes by (track, onset), keys in sorted order.
pub fn group_by_track_onset(notes: &[Note]) -> Vec<((TrackRole, u32), Vec<Note>)> {
    let mut map: std::collections::BTreeMap<(TrackRole, u32), Vec<Note>> =
        std::collections::BTreeMap::new();
    for &n in notes {
        map.entry((n.track, n.onset)).or_default().push(n);
    }
    map.into_iter().collect()
}

/// Collapses simultaneous same-track notes into one compound pitch tuple and
/// a single duration: the tuple is the sorted set of distinct pitches, the
/// duration is the most frequent one in the group, with frequency ties
/// resolved toward the largest tied duration.
pub fn merge_group(notes: &[Note]) -> Result<(Vec<u8>, u8), CodecError> {
    let first = notes.first().ok_or_else(|| CodecError::InconsistentGroup("empty group".into()))?;
    if notes.iter().any(|n| n.track != first.track || n.onset != first.onset) {
        return Err(CodecError::InconsistentGroup(
            "notes span multiple tracks or onsets".into(),
        ));
    }
    let mut pitches: Vec<u8> = notes.iter().map(|n| n.pitch).collect();
    pitches.sort_unstable();
    pitches.dedup();

    let mut freq = [0u32; MAX_DURATION as usize + 1];
    for n in notes {
        freq[n.duration as usize] += 1;
    }
    // Scanning upward and taking >= picks the largest duration among ties.
    let mut duration = 0u8;
    let mut best = 0u32;
    for (d, &count) in freq.iter().enumerate() {
        if count > 0 && count >= best {
            best = count;
            duration = d as u8;
        }
    }
    Ok((pitches, duration))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_takes_sorted_unique_pitches_and_modal_duration() {
        let notes = [
            Note::new(TrackRole::Piano, 0, 60, 4),
            Note::new(TrackRole::Piano, 0, 57, 4),
            Note::new(TrackRole::Piano, 0, 65, 2),
        ];
        let (pitches, duration) = merge_group(&notes).unwrap();
        assert_eq!(pitches, vec![57, 60, 65]);
        assert_eq!(duration, 4);
    }

    #[test]
    fn merge_single_note_is_identity() {
        let notes = [Note::new(TrackRole::Piano, 0, 60, 8)];
        assert_eq!(merge_group(&notes).unwrap(), (vec![60], 8));
    }

    #[test]
    fn merge_breaks_duration_ties_upward() {
        let notes = [
            Note::new(TrackRole::Bass, 4, 40, 2),
            Note::new(TrackRole::Bass, 4, 43, 2),
            Note::new(TrackRole::Bass, 4, 45, 4),
            Note::new(TrackRole::Bass, 4, 47, 4),
        ];
        let (_, duration) = merge_group(&notes).unwrap();
        assert_eq!(duration, 4);
    }

    #[test]
    fn merge_collapses_duplicate_pitches() {
        let notes = [
            Note::new(TrackRole::Guitar, 0, 60, 4),
            Note::new(TrackRole::Guitar, 0, 60, 4),
        ];
        assert_eq!(merge_group(&notes).unwrap(), (vec![60], 4));
    }

    #[test]
    fn merge_rejects_mixed_groups() {
        let notes = [
            Note::new(TrackRole::Piano, 0, 60, 4),
            Note::new(TrackRole::Piano, 1, 62, 4),
        ];
        assert!(matches!(merge_group(&notes), Err(CodecError::InconsistentGroup(_))));
        let notes = [
            Note::new(TrackRole::Piano, 0, 60, 4),
            Note::new(TrackRole::Guitar, 0, 62, 4),
        ];
        assert!(matches!(merge_group(&notes), Err(CodecError::InconsistentGroup(_))));
    }

    #[test]
    fn row_layout_matches_canonical_order() {
        assert_eq!(TrackRole::Chord.pitch_row(), 0);
        assert_eq!(TrackRole::Chord.duration_row(), 1);
        assert_eq!(TrackRole::Melody.duration_row(), 13);
        assert_eq!(TrackRole::of_row(5), TrackRole::Drum);
        assert_eq!(ROW_COUNT, 14);
    }

    #[test]
    fn note_validation() {
        assert!(Note::new(TrackRole::Drum, 0, 36, 0).validate().is_ok());
        assert!(Note::new(TrackRole::Drum, 0, 36, 4).validate().is_err());
        assert!(Note::new(TrackRole::Piano, 0, 60, 0).validate().is_err());
        assert!(Note::new(TrackRole::Piano, 0, 60, 17).validate().is_err());
        assert!(Note::new(TrackRole::Chord, 0, 60, 4).validate().is_err());
    }
}
