#include "morphoprot/pdb.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "morphoprot/errors.hpp"

namespace morphoprot {

namespace {

std::string field(const std::string& line, std::size_t col1, std::size_t col2) {
    // 1-based inclusive columns; short lines yield a truncated field
    if (line.size() < col1) return {};
    std::string f = line.substr(col1 - 1, col2 - col1 + 1);
    const auto b = f.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = f.find_last_not_of(" \t\r");
    return f.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

int parse_int_or(const std::string& s, int fallback) {
    int v = fallback;
    if (s.empty()) return fallback;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return fallback;
    return v;
}

} // namespace

StructureModel parse_pdb(const std::string& text, bool include_hetero) {
    StructureModel model;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    int models_seen = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string record = line.substr(0, std::min<std::size_t>(6, line.size()));

        if (record.rfind("MODEL", 0) == 0) {
            if (++models_seen > 1) break;
            continue;
        }
        if (record.rfind("ENDMDL", 0) == 0) break; // first model done
        if (record.rfind("END", 0) == 0 && record.rfind("ENDMDL", 0) != 0) break;

        const std::string name6 = field(line, 1, 6);
        const bool is_atom = name6 == "ATOM";
        const bool is_het = name6 == "HETATM";
        if (!is_atom && !is_het) continue;
        if (is_het && !include_hetero) continue;

        const char alt_loc = line.size() >= 17 ? line[16] : ' ';
        if (alt_loc != ' ' && alt_loc != 'A') continue;

        Atom atom;
        atom.is_hetero = is_het;
        atom.serial = std::max(0, parse_int_or(field(line, 7, 11), 0));
        atom.name = field(line, 13, 16);
        atom.residue_name = field(line, 18, 20);
        atom.chain_id = line.size() >= 22 ? line[21] : ' ';
        atom.residue_seq = parse_int_or(field(line, 23, 26), 0);

        if (!parse_double(field(line, 31, 38), atom.x) ||
            !parse_double(field(line, 39, 46), atom.y) ||
            !parse_double(field(line, 47, 54), atom.z))
            throw MalformedRecordError(line_no, "coordinate columns failed to parse");

        model.atoms.push_back(std::move(atom));
    }

    if (model.atoms.empty()) throw NoAtomsError();
    return model;
}

StructureModel load_pdb_file(const std::filesystem::path& path, bool include_hetero) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    StructureModel model = parse_pdb(buf.str(), include_hetero);
    model.pdb_id = path.stem().string();
    return model;
}

} // namespace morphoprot
