#include "thinbase/sequence_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace thinbase {

MonotoneSequence read_sequence(std::istream& in, const std::string& name) {
    std::vector<Natural> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        Natural v;
        try {
            v = parse_natural(line);
        } catch (const std::invalid_argument& e) {
            throw io_error(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!values.empty() && v <= values.back())
            throw io_error(name + ":" + std::to_string(lineno) +
                           ": monotonicity violation at element index " +
                           std::to_string(values.size()));
        values.push_back(std::move(v));
    }
    return MonotoneSequence::from_sorted(std::move(values));
}

MonotoneSequence read_sequence(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    return read_sequence(in, path.string());
}

void write_sequence(const MonotoneSequence& seq, std::ostream& out) {
    for (const Natural& v : seq) out << v.get_str() << '\n';
}

void write_sequence(const MonotoneSequence& seq, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // keep LF terminators everywhere
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    write_sequence(seq, out);
    out.flush();
    if (!out) throw io_error("write failed: " + path.string());
}

}  // namespace thinbase
