#include "cvtfrac/smf.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <tuple>

#include <fmt/format.h>

#include "write_file.hpp"

namespace cvtfrac {

namespace {

constexpr std::uint32_t kMaxVlq = 0x0FFFFFFF;

struct TrackEvent {
    std::uint32_t time;
    int order;  // 0 = note-off, 1 = note-on
    std::uint8_t pitch;
    std::uint8_t velocity;
};

void append_be(std::vector<std::uint8_t>& out, std::uint32_t value, int bytes) {
    for (int shift = 8 * (bytes - 1); shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>((value >> shift) & 0xFF));
    }
}

}  // namespace

void append_vlq(std::vector<std::uint8_t>& out, std::uint32_t value) {
    if (value > kMaxVlq) {
        throw OutOfRange(fmt::format("delta time {} exceeds the MIDI limit {}", value, kMaxVlq));
    }
    std::uint8_t buffer[4];
    int n = 0;
    buffer[n++] = static_cast<std::uint8_t>(value & 0x7F);
    while ((value >>= 7) != 0) {
        buffer[n++] = static_cast<std::uint8_t>(0x80 | (value & 0x7F));
    }
    while (n > 0) {
        out.push_back(buffer[--n]);
    }
}

std::vector<std::uint8_t> encode_smf(std::span<const NoteEvent> notes, const SmfOptions& options) {
    if (options.ticks_per_quarter < 24 || options.ticks_per_quarter > 960) {
        throw ArgumentError(fmt::format("ticks per quarter {} outside 24..960", options.ticks_per_quarter));
    }
    if (options.tempo_bpm < 4 || options.tempo_bpm > 1000) {
        throw ArgumentError(fmt::format("tempo {} bpm outside 4..1000", options.tempo_bpm));
    }

    std::vector<TrackEvent> events;
    events.reserve(notes.size() * 2);
    for (const NoteEvent& n : notes) {
        if (n.duration == 0 || n.pitch > 127 || n.velocity < 1 || n.velocity > 127) {
            throw ArgumentError(fmt::format("invalid note (onset {}, duration {}, pitch {}, velocity {})",
                                            n.onset, n.duration, n.pitch, n.velocity));
        }
        if (n.onset > kMaxVlq - n.duration) {
            throw OutOfRange(fmt::format("note ending after tick {} is not representable", kMaxVlq));
        }
        events.push_back({n.onset, 1, n.pitch, n.velocity});
        events.push_back({n.onset + n.duration, 0, n.pitch, 0});
    }
    std::stable_sort(events.begin(), events.end(), [](const TrackEvent& a, const TrackEvent& b) {
        return std::tie(a.time, a.order, a.pitch) < std::tie(b.time, b.order, b.pitch);
    });

    std::vector<std::uint8_t> track;
    const auto tempo = static_cast<std::uint32_t>(std::lround(60e6 / options.tempo_bpm));
    track.insert(track.end(), {0x00, 0xFF, 0x51, 0x03});
    append_be(track, tempo, 3);

    std::uint32_t now = 0;
    for (const TrackEvent& e : events) {
        append_vlq(track, e.time - now);
        now = e.time;
        track.push_back(e.order == 1 ? 0x90 : 0x80);
        track.push_back(e.pitch);
        track.push_back(e.velocity);
    }
    track.insert(track.end(), {0x00, 0xFF, 0x2F, 0x00});

    std::vector<std::uint8_t> file{'M', 'T', 'h', 'd'};
    append_be(file, 6, 4);
    append_be(file, 0, 2);  // format 0
    append_be(file, 1, 2);  // one track
    append_be(file, static_cast<std::uint32_t>(options.ticks_per_quarter), 2);
    file.insert(file.end(), {'M', 'T', 'r', 'k'});
    append_be(file, static_cast<std::uint32_t>(track.size()), 4);
    file.insert(file.end(), track.begin(), track.end());
    return file;
}

void write_midi(std::span<const NoteEvent> notes, const std::string& path, const SmfOptions& options) {
    const std::vector<std::uint8_t> bytes = encode_smf(notes, options);
    detail::write_file(path, [&](std::ostream& out) {
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    });
}

}  // namespace cvtfrac
