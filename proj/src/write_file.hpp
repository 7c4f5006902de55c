#pragma once

#include <fstream>
#include <string>

#include <fmt/format.h>

#include "cvtfrac/error.hpp"

namespace cvtfrac::detail {

/// Opens `path` for binary output, hands the stream to `writer` and reports
/// failures as IoError naming the path.
template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(fmt::format("cannot open '{}' for writing", path));
    }
    writer(out);
    if (!out.flush()) {
        throw IoError(fmt::format("write to '{}' failed", path));
    }
}

}  // namespace cvtfrac::detail
