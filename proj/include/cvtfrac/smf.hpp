#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cvtfrac/melody.hpp"

namespace cvtfrac {

struct SmfOptions {
    int ticks_per_quarter = 120;  ///< 24..960
    int tempo_bpm = 120;          ///< 4..1000
};

/// Standard MIDI File, format 0, one track on channel 0: a set-tempo meta
/// event, note-on/note-off pairs in time order (note-offs first at equal
/// times, then by pitch) and end-of-track.
std::vector<std::uint8_t> encode_smf(std::span<const NoteEvent> notes, const SmfOptions& options = {});

void write_midi(std::span<const NoteEvent> notes, const std::string& path, const SmfOptions& options = {});

/// Appends `value` (< 2^28) as a MIDI variable-length quantity.
void append_vlq(std::vector<std::uint8_t>& out, std::uint32_t value);

}  // namespace cvtfrac
