#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvtfrac/cell_set.hpp"

namespace cvtfrac {

struct NoteEvent {
    std::uint32_t onset = 0;     ///< ticks
    std::uint32_t duration = 1;  ///< ticks, >= 1
    std::uint8_t pitch = 60;     ///< MIDI note number
    std::uint8_t velocity = 100; ///< 1..127

    friend bool operator==(const NoteEvent&, const NoteEvent&) = default;
};

/// Seven-degree scale as semitone offsets from its tonic.
struct Scale {
    std::string_view name;
    std::array<int, 7> steps;
};

/// Looks up a mode by name: major (ionian), minor (aeolian), dorian,
/// phrygian, lydian, mixolydian, locrian. Throws ArgumentError otherwise.
const Scale& scale_by_name(std::string_view name);
std::span<const Scale> known_scales();

struct MelodyParams {
    std::string_view scale = "major";
    int base_pitch = 60;
    std::uint32_t ticks_per_cell = 120;
    int velocity = 100;
};

/// Each maximal horizontal run of cells becomes one note. Height
/// h = extent - 1 - row picks scale degree h mod 7 and octave h / 7 above
/// base_pitch; pitches are clamped to 0..127. Sorted by (onset, pitch).
std::vector<NoteEvent> cells_to_notes(const CellSet& cells, const MelodyParams& params = {});

/// Highest pitch sounding at each distinct onset, in onset order.
std::vector<double> pitch_series(std::span<const NoteEvent> notes);

/// Header "onset,duration,pitch,velocity", one row per note.
void write_notes_csv(std::span<const NoteEvent> notes, std::ostream& out);
void write_notes_csv(std::span<const NoteEvent> notes, const std::string& path);

/// One value per line; a non-numeric first line is taken as a header and
/// blank lines are ignored.
std::vector<double> read_series_csv(std::istream& in);
std::vector<double> read_series_csv(const std::string& path);

}  // namespace cvtfrac
