#include "cvtfrac/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cvtfrac/cell_set.hpp"
#include "cvtfrac/cv_table.hpp"
#include "cvtfrac/dimension.hpp"
#include "cvtfrac/melody.hpp"
#include "cvtfrac/overlay.hpp"
#include "cvtfrac/radix.hpp"
#include "cvtfrac/raster.hpp"
#include "cvtfrac/smf.hpp"
#include "cvtfrac/spectrum.hpp"

namespace cvtfrac::cli {

namespace {

/// Every flag of every subcommand; only the parsed subcommand's fields are
/// meaningful.
struct RunConfig {
    long long base = 2;
    long long small_base = 2;
    unsigned depth = 1;
    unsigned digits = 1;
    std::optional<std::uint64_t> value;
    double target = 0.0;
    std::uint64_t search_cap = kDefaultBaseSearchCap;
    std::uint64_t max_extent = kMaxSparseExtent;
    std::uint64_t table_max_extent = kDefaultTableExtent;
    std::uint32_t zoom = 1;
    bool estimate = false;
    bool spectrum = false;
    bool self_test = false;
    std::uint64_t seed = 1;
    std::size_t length = 4096;

    std::string operand_a;
    std::string operand_b;

    std::string csv_path;
    std::string pgm_path;
    std::string pbm_path;
    std::string cells_path;
    std::string report_path;
    std::string midi_path;
    std::string in_path;

    std::string scale = "major";
    int base_pitch = 60;
    std::uint32_t ticks = 120;
    int tempo = 120;
    int division = 120;
    int velocity = 100;
};

Natural parse_natural(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ArgumentError(fmt::format("'{}' is not a non-negative integer", text));
    }
    return Natural(text);
}

std::string digit_string(const RadixNumber& number) {
    if (number.width() == 0) {
        return "0";
    }
    std::string s;
    const auto& digits = number.digits();
    const bool wide = number.base().value() > 10;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (wide && !s.empty()) {
            s += ':';
        }
        s += std::to_string(*it);
    }
    return s;
}

void print_estimate(std::ostream& out, const DimensionEstimate& est) {
    fmt::print(out, "box size  occupied boxes\n");
    for (std::size_t i = 0; i < est.scales.size(); ++i) {
        fmt::print(out, "{:>8}  {}\n", est.scales[i], est.counts[i]);
    }
    fmt::print(out, "box-counting dimension: {:.6f}\n", est.slope);
    fmt::print(out, "fit quality (R^2): {:.6f}\n", est.fit_quality);
}

int cmd_cvt(const RunConfig& cfg, std::ostream& out) {
    const Base base(cfg.base);
    const Natural a = parse_natural(cfg.operand_a);
    const Natural b = parse_natural(cfg.operand_b);
    const RadixNumber da = to_digits(a, base);
    const RadixNumber db = to_digits(b, base);
    const RadixNumber carry = cvt(da, db);
    const RadixNumber plain = sum_without_carry(da, db);
    const Natural carry_value = from_digits(carry);
    const Natural plain_value = from_digits(plain);

    fmt::print(out, "base {}: {} = ({}), {} = ({})\n", base.value(), a.str(), digit_string(da), b.str(),
               digit_string(db));
    fmt::print(out, "CVT({}, {}) = {} (carry digits {})\n", a.str(), b.str(), carry_value.str(),
               digit_string(carry));
    fmt::print(out, "carry-free sum = {} (digits {})\n", plain_value.str(), digit_string(plain));
    const bool ok = carry_value + plain_value == a + b;
    fmt::print(out, "check: {} + {} = {} + {} = {} [{}]\n", a.str(), b.str(), carry_value.str(), plain_value.str(),
               Natural(a + b).str(), ok ? "ok" : "MISMATCH");
    return ok ? kExitOk : kExitRuntime;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const CvTable table = build_table(Base(cfg.base), cfg.digits, cfg.table_max_extent);
    std::uint64_t nonzero = 0;
    for (std::uint64_t a = 0; a < table.extent(); ++a) {
        for (std::uint64_t b = 0; b < table.extent(); ++b) {
            nonzero += table.value(a, b) != 0 ? 1 : 0;
        }
    }
    fmt::print(out, "CV table base {} digits {}: {} x {}\n", table.base().value(), table.digits(), table.extent(),
               table.extent());
    fmt::print(out, "max carry value: {}\n", table.max_value());
    fmt::print(out, "zero cells: {}, nonzero cells: {}\n", table.extent() * table.extent() - nonzero, nonzero);
    if (!cfg.csv_path.empty()) {
        write_table_csv(table, cfg.csv_path);
        fmt::print(out, "wrote {}\n", cfg.csv_path);
    }
    if (!cfg.pgm_path.empty()) {
        write_pnm(render_table(table, cfg.zoom), cfg.pgm_path);
        fmt::print(out, "wrote {}\n", cfg.pgm_path);
    }
    return kExitOk;
}

int cmd_fractal(const RunConfig& cfg, std::ostream& out) {
    const Base base(cfg.base);
    std::optional<CellSet> cells;
    if (cfg.value) {
        const CvTable table = build_table(base, cfg.depth, std::min(cfg.max_extent, kDefaultTableExtent));
        cells = value_cells(table, *cfg.value);
        fmt::print(out, "cells with carry value {} in base {}, depth {}: {}\n", *cfg.value, base.value(), cfg.depth,
                   cells->size());
    } else {
        cells = zero_carry_set(base, cfg.depth, cfg.max_extent);
        fmt::print(out, "zero-carry set base {}, depth {}: {} cells, extent {}\n", base.value(), cfg.depth,
                   cells->size(), cells->extent());
    }
    if (!cfg.pbm_path.empty()) {
        write_pnm(render_cellset(*cells, cfg.zoom), cfg.pbm_path);
        fmt::print(out, "wrote {}\n", cfg.pbm_path);
    }
    if (!cfg.cells_path.empty()) {
        write_cells_csv(*cells, cfg.cells_path);
        fmt::print(out, "wrote {}\n", cfg.cells_path);
    }
    return kExitOk;
}

int cmd_dimension(const RunConfig& cfg, std::ostream& out) {
    const Base base(cfg.base);
    const std::uint64_t n = base.value();
    fmt::print(out, "similarity dimension S_D({}) = log({})/log({}) = {:.6f}\n", n, n * (n + 1) / 2, n,
               similarity_dimension(base));
    fmt::print(out, "gap to 2: {:.6f}\n", dimension_gap(base));
    if (cfg.estimate) {
        const CellSet cells = zero_carry_set(base, cfg.depth, cfg.max_extent);
        const DimensionEstimate est = estimate_dimension(cells);
        print_estimate(out, est);
        if (!cfg.report_path.empty()) {
            write_dimension_csv(est, cfg.report_path);
            fmt::print(out, "wrote {}\n", cfg.report_path);
        }
    } else if (!cfg.report_path.empty()) {
        throw ArgumentError("--report requires --estimate");
    }
    return kExitOk;
}

int cmd_target_base(const RunConfig& cfg, std::ostream& out) {
    const TargetBase best = base_for_target_dimension(cfg.target, cfg.search_cap);
    fmt::print(out, "target dimension {:.6f}: base {} (dimension {:.6f}, difference {:+.6f})\n", cfg.target, best.base,
               best.achieved, best.achieved - cfg.target);
    if (best.capped) {
        fmt::print(out, "note: target beyond the search cap {}; best effort returned\n", cfg.search_cap);
    }
    return kExitOk;
}

int cmd_overlay(const RunConfig& cfg, std::ostream& out) {
    const OverlayReport report = analyze_overlay(Base(cfg.small_base), cfg.depth);
    write_overlay_text(report, out);
    if (!cfg.report_path.empty()) {
        write_overlay_text(report, cfg.report_path);
        fmt::print(out, "wrote {}\n", cfg.report_path);
    }
    if (!cfg.csv_path.empty()) {
        write_overlay_csv(report, cfg.csv_path);
        fmt::print(out, "wrote {}\n", cfg.csv_path);
    }
    return kExitOk;
}

void print_spectrum(std::ostream& out, const std::string& label, const SpectralReport& report) {
    fmt::print(out, "{}: length {}, beta {:.6f}, fit quality {:.6f}, bins {}\n", label, report.series_length,
               report.beta, report.fit_quality, report.frequencies_used);
}

int cmd_music(const RunConfig& cfg, std::ostream& out) {
    const CellSet cells = zero_carry_set(Base(cfg.base), cfg.depth, cfg.max_extent);
    MelodyParams params;
    params.scale = cfg.scale;
    params.base_pitch = cfg.base_pitch;
    params.ticks_per_cell = cfg.ticks;
    params.velocity = cfg.velocity;
    const std::vector<NoteEvent> notes = cells_to_notes(cells, params);
    // Validate the spectrum precondition before any file is written.
    const std::vector<double> series = pitch_series(notes);
    if (cfg.spectrum && series.size() < kMinSpectrumLength) {
        throw ArgumentError(fmt::format("--spectrum needs at least {} distinct onsets; depth {} gives {}",
                                        kMinSpectrumLength, cfg.depth, series.size()));
    }

    SmfOptions smf;
    smf.ticks_per_quarter = cfg.division;
    smf.tempo_bpm = cfg.tempo;
    write_midi(notes, cfg.midi_path, smf);
    fmt::print(out, "{} notes from {} cells (base {}, depth {})\n", notes.size(), cells.size(), cfg.base, cfg.depth);
    fmt::print(out, "wrote {}\n", cfg.midi_path);
    if (!cfg.csv_path.empty()) {
        write_notes_csv(notes, cfg.csv_path);
        fmt::print(out, "wrote {}\n", cfg.csv_path);
    }
    if (cfg.spectrum) {
        print_spectrum(out, "pitch series", spectral_exponent(series));
    }
    return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    if (cfg.self_test) {
        const std::vector<double> noise = white_noise(cfg.length, cfg.seed);
        print_spectrum(out, "white noise", spectral_exponent(noise));
        print_spectrum(out, "random walk", spectral_exponent(cumulative_sum(noise)));
        return kExitOk;
    }
    if (cfg.in_path.empty()) {
        throw ArgumentError("spectrum needs --in PATH or --self-test");
    }
    print_spectrum(out, cfg.in_path, spectral_exponent(read_series_csv(cfg.in_path)));
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Carry value transformation fractals, dimensions and melodies", "cvtfrac"};
    app.require_subcommand(1);

    const auto base_range = CLI::Range(2LL, 0xFFFFFFFFLL);
    const auto positive = CLI::PositiveNumber;

    auto* cvt_cmd = app.add_subcommand("cvt", "Carry value and carry-free sum of two integers");
    cvt_cmd->add_option("--base", cfg.base, "Number base")->required()->check(base_range);
    cvt_cmd->add_option("a", cfg.operand_a, "Augend")->required();
    cvt_cmd->add_option("b", cfg.operand_b, "Addend")->required();

    auto* table_cmd = app.add_subcommand("table", "Build the CV table over [0, base^digits)");
    table_cmd->add_option("--base", cfg.base, "Number base")->required()->check(base_range);
    table_cmd->add_option("--digits", cfg.digits, "Digits per operand")->required()->check(positive);
    table_cmd->add_option("--csv", cfg.csv_path, "Write the table as CSV");
    table_cmd->add_option("--pgm", cfg.pgm_path, "Write a gray-level PGM rendering");
    table_cmd->add_option("--zoom", cfg.zoom, "Pixels per cell side")->check(positive);
    table_cmd->add_option("--max-extent", cfg.table_max_extent, "Largest table side")->capture_default_str()->check(positive);

    auto* fractal_cmd = app.add_subcommand("fractal", "Carry-value pattern as a cell set");
    fractal_cmd->add_option("--base", cfg.base, "Number base")->required()->check(base_range);
    fractal_cmd->add_option("--depth", cfg.depth, "Recursion depth (digits)")->required();
    fractal_cmd->add_option("--value", cfg.value, "Carry value to extract (default: zero-carry set)");
    fractal_cmd->add_option("--pbm", cfg.pbm_path, "Write a PBM rendering");
    fractal_cmd->add_option("--cells", cfg.cells_path, "Write the cells as row,col lines");
    fractal_cmd->add_option("--zoom", cfg.zoom, "Pixels per cell side")->check(positive);
    fractal_cmd->add_option("--max-extent", cfg.max_extent, "Largest grid side")->capture_default_str()->check(positive);

    auto* dim_cmd = app.add_subcommand("dimension", "Similarity dimension and box-counting estimate");
    dim_cmd->add_option("--base", cfg.base, "Number base")->required()->check(base_range);
    dim_cmd->add_flag("--estimate", cfg.estimate, "Box-count the zero-carry set");
    dim_cmd->add_option("--depth", cfg.depth, "Depth of the box-counted set")->default_val(6u);
    dim_cmd->add_option("--report", cfg.report_path, "Write the box-count report as CSV");
    dim_cmd->add_option("--max-extent", cfg.max_extent, "Largest grid side")->capture_default_str()->check(positive);

    auto* target_cmd = app.add_subcommand("target-base", "Base whose fractal dimension is nearest a target");
    target_cmd->add_option("--dimension", cfg.target, "Target dimension in [1.585, 2)")->required();
    target_cmd->add_option("--cap", cfg.search_cap, "Largest base searched")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{UINT64_MAX / 4}));

    auto* overlay_cmd = app.add_subcommand("overlay", "Overflow of a base-n generator pasted over base n+1");
    overlay_cmd->add_option("--small", cfg.small_base, "Smaller base n")->required()->check(base_range);
    overlay_cmd->add_option("--depth", cfg.depth, "Iteration depth")->required()->check(positive);
    overlay_cmd->add_option("--report", cfg.report_path, "Write the text report");
    overlay_cmd->add_option("--csv", cfg.csv_path, "Write scale,count pairs");

    auto* music_cmd = app.add_subcommand("music", "Render the zero-carry set as a melody");
    music_cmd->add_option("--base", cfg.base, "Number base")->required()->check(base_range);
    music_cmd->add_option("--depth", cfg.depth, "Recursion depth")->required();
    music_cmd->add_option("--scale", cfg.scale, "Scale name")->check([](const std::string& name) {
        try {
            scale_by_name(name);
            return std::string{};
        } catch (const ArgumentError& e) {
            return std::string{e.what()};
        }
    });
    music_cmd->add_option("--base-pitch", cfg.base_pitch, "MIDI pitch of the lowest row")->check(CLI::Range(0, 127));
    music_cmd->add_option("--ticks", cfg.ticks, "Ticks per grid cell")->check(positive);
    music_cmd->add_option("--tempo", cfg.tempo, "Tempo in beats per minute")->check(CLI::Range(4, 1000));
    music_cmd->add_option("--division", cfg.division, "Ticks per quarter note")->check(CLI::Range(24, 960));
    music_cmd->add_option("--velocity", cfg.velocity, "Note velocity")->check(CLI::Range(1, 127));
    music_cmd->add_option("--midi", cfg.midi_path, "Standard MIDI File to write")->required();
    music_cmd->add_option("--csv", cfg.csv_path, "Write the notes as CSV");
    music_cmd->add_flag("--spectrum", cfg.spectrum, "Report the pitch-series spectral exponent");
    music_cmd->add_option("--max-extent", cfg.max_extent, "Largest grid side")->capture_default_str()->check(positive);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectral exponent of a series");
    spectrum_cmd->add_option("--in", cfg.in_path, "Series CSV, one value per line");
    spectrum_cmd->add_flag("--self-test", cfg.self_test, "Analyse seeded white noise and its random walk");
    spectrum_cmd->add_option("--seed", cfg.seed, "Seed for --self-test");
    spectrum_cmd->add_option("--length", cfg.length, "Series length for --self-test")
        ->check(CLI::Range(kMinSpectrumLength, std::size_t{1} << 24));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cvt_cmd->parsed()) {
            return cmd_cvt(cfg, out);
        }
        if (table_cmd->parsed()) {
            return cmd_table(cfg, out);
        }
        if (fractal_cmd->parsed()) {
            return cmd_fractal(cfg, out);
        }
        if (dim_cmd->parsed()) {
            return cmd_dimension(cfg, out);
        }
        if (target_cmd->parsed()) {
            return cmd_target_base(cfg, out);
        }
        if (overlay_cmd->parsed()) {
            return cmd_overlay(cfg, out);
        }
        if (music_cmd->parsed()) {
            return cmd_music(cfg, out);
        }
        if (spectrum_cmd->parsed()) {
            return cmd_spectrum(cfg, out);
        }
    } catch (const ArgumentError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitRuntime;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace cvtfrac::cli
