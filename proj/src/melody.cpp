#include "cvtfrac/melody.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include <fmt/format.h>

#include "write_file.hpp"

namespace cvtfrac {

namespace {

constexpr std::array<Scale, 9> kScales{{
    {"major", {0, 2, 4, 5, 7, 9, 11}},
    {"ionian", {0, 2, 4, 5, 7, 9, 11}},
    {"dorian", {0, 2, 3, 5, 7, 9, 10}},
    {"phrygian", {0, 1, 3, 5, 7, 8, 10}},
    {"lydian", {0, 2, 4, 6, 7, 9, 11}},
    {"mixolydian", {0, 2, 4, 5, 7, 9, 10}},
    {"minor", {0, 2, 3, 5, 7, 8, 10}},
    {"aeolian", {0, 2, 3, 5, 7, 8, 10}},
    {"locrian", {0, 1, 3, 5, 6, 8, 10}},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& value) {
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

std::span<const Scale> known_scales() {
    return kScales;
}

const Scale& scale_by_name(std::string_view name) {
    for (const Scale& s : kScales) {
        if (s.name == name) {
            return s;
        }
    }
    throw ArgumentError(fmt::format("unknown scale '{}'", name));
}

std::vector<NoteEvent> cells_to_notes(const CellSet& cells, const MelodyParams& params) {
    if (cells.empty()) {
        throw EmptyInput("cannot derive notes from an empty cell set");
    }
    const Scale& scale = scale_by_name(params.scale);
    if (params.ticks_per_cell == 0) {
        throw ArgumentError("ticks per cell must be positive");
    }
    if (params.velocity < 1 || params.velocity > 127) {
        throw ArgumentError(fmt::format("velocity {} outside 1..127", params.velocity));
    }
    if (cells.extent() * params.ticks_per_cell > UINT32_MAX) {
        throw SizeLimit("note onsets would overflow 32-bit ticks");
    }

    std::vector<NoteEvent> notes;
    const auto span = cells.cells();
    // Cells are sorted by (row, col), so runs are contiguous in the list.
    for (std::size_t i = 0; i < span.size();) {
        std::size_t j = i + 1;
        while (j < span.size() && span[j].row == span[i].row && span[j].col == span[j - 1].col + 1) {
            ++j;
        }
        const std::uint64_t height = cells.extent() - 1 - span[i].row;
        const long long pitch = params.base_pitch + scale.steps[height % 7] + 12LL * static_cast<long long>(height / 7);
        notes.push_back(NoteEvent{
            span[i].col * params.ticks_per_cell,
            static_cast<std::uint32_t>(j - i) * params.ticks_per_cell,
            static_cast<std::uint8_t>(std::clamp<long long>(pitch, 0, 127)),
            static_cast<std::uint8_t>(params.velocity),
        });
        i = j;
    }
    std::stable_sort(notes.begin(), notes.end(), [](const NoteEvent& a, const NoteEvent& b) {
        return std::tie(a.onset, a.pitch) < std::tie(b.onset, b.pitch);
    });
    return notes;
}

std::vector<double> pitch_series(std::span<const NoteEvent> notes) {
    if (notes.empty()) {
        throw EmptyInput("pitch series needs at least one note");
    }
    std::map<std::uint32_t, std::uint8_t> top;
    for (const NoteEvent& n : notes) {
        auto [it, inserted] = top.try_emplace(n.onset, n.pitch);
        if (!inserted) {
            it->second = std::max(it->second, n.pitch);
        }
    }
    std::vector<double> series;
    series.reserve(top.size());
    for (const auto& [onset, pitch] : top) {
        series.push_back(pitch);
    }
    return series;
}

void write_notes_csv(std::span<const NoteEvent> notes, std::ostream& out) {
    out << "onset,duration,pitch,velocity\n";
    for (const NoteEvent& n : notes) {
        out << n.onset << ',' << n.duration << ',' << int{n.pitch} << ',' << int{n.velocity} << '\n';
    }
}

void write_notes_csv(std::span<const NoteEvent> notes, const std::string& path) {
    detail::write_file(path, [&](std::ostream& out) { write_notes_csv(notes, out); });
}

std::vector<double> read_series_csv(std::istream& in) {
    std::vector<double> series;
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) {
            continue;
        }
        double value = 0.0;
        if (!parse_double(text, value)) {
            if (!seen_content) {
                seen_content = true;  // header
                continue;
            }
            throw ParseError(fmt::format("line {}: '{}' is not a number", line_no, text));
        }
        seen_content = true;
        series.push_back(value);
    }
    return series;
}

std::vector<double> read_series_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(fmt::format("cannot open '{}' for reading", path));
    }
    return read_series_csv(in);
}

}  // namespace cvtfrac
