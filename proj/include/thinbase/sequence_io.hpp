#pragma once

#include <filesystem>
#include <iosfwd>

#include "thinbase/sequence.hpp"

namespace thinbase {

// Sequence file format: one decimal value per line, LF terminators,
// lines starting with '#' ignored, optional trailing newline.

MonotoneSequence read_sequence(std::istream& in, const std::string& name = "<stream>");
MonotoneSequence read_sequence(const std::filesystem::path& path);

void write_sequence(const MonotoneSequence& seq, std::ostream& out);
void write_sequence(const MonotoneSequence& seq, const std::filesystem::path& path);

}  // namespace thinbase
