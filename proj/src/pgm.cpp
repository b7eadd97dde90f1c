#include "morphoprot/pgm.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "morphoprot/errors.hpp"

namespace morphoprot {

std::string to_pbm(const BinaryGrid& grid) {
    std::ostringstream out;
    out << "P4\n" << grid.width() << ' ' << grid.height() << '\n';
    const int bytes_per_row = (grid.width() + 7) / 8;
    for (int y = 0; y < grid.height(); ++y) {
        for (int b = 0; b < bytes_per_row; ++b) {
            unsigned char byte = 0;
            for (int bit = 0; bit < 8; ++bit) {
                const int x = b * 8 + bit;
                if (x < grid.width() && grid.get(x, y)) byte |= 0x80u >> bit;
            }
            out.put(static_cast<char>(byte));
        }
    }
    return out.str();
}

BinaryGrid from_pbm(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string magic;
    int w = 0, h = 0;
    in >> magic >> w >> h;
    if (magic != "P4" || w <= 0 || h <= 0) throw Error("from_pbm: not a P4 bitmap");
    in.get(); // single whitespace after the header
    BinaryGrid grid(w, h);
    const int bytes_per_row = (w + 7) / 8;
    for (int y = 0; y < h; ++y) {
        for (int b = 0; b < bytes_per_row; ++b) {
            const int c = in.get();
            if (c == EOF) throw Error("from_pbm: truncated pixel data");
            for (int bit = 0; bit < 8; ++bit) {
                const int x = b * 8 + bit;
                if (x < w && ((c >> (7 - bit)) & 1)) grid.set(x, y);
            }
        }
    }
    return grid;
}

std::string to_pgm(const BinaryGrid& grid) {
    std::ostringstream out;
    out << "P5\n" << grid.width() << ' ' << grid.height() << "\n255\n";
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x)
            out.put(grid.get(x, y) ? static_cast<char>(255) : 0);
    return out.str();
}

void write_grid_file(const BinaryGrid& grid, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    const std::string data = path.extension() == ".pbm" ? to_pbm(grid) : to_pgm(grid);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

} // namespace morphoprot
