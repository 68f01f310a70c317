#include "hylag/hyg_io.hpp"

#include <fstream>
#include <sstream>

#include "hylag/errors.hpp"

namespace hylag {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::vector<int> parse_ints(const std::string& line) {
    std::istringstream ss(line);
    std::vector<int> values;
    long long v;
    while (ss >> v) {
        if (v < 0 || v > std::numeric_limits<int>::max())
            throw InvalidInputError("HYG: vertex id out of range: " + std::to_string(v));
        values.push_back(static_cast<int>(v));
    }
    std::string tail;
    if (ss.clear(), ss >> tail)
        throw InvalidInputError("HYG: non-numeric token '" + tail + "'");
    return values;
}

}  // namespace

Hypergraph read_hyg(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw InvalidInputError("HYG: missing header line");
    const std::vector<int> header = parse_ints(line);
    if (header.size() != 2) throw InvalidInputError("HYG: header must be 'r n'");
    const int r = header[0];
    const int n = header[1];

    std::vector<Edge> edges;
    while (next_content_line(in, line)) {
        Edge e = parse_ints(line);
        if (static_cast<int>(e.size()) != r)
            throw InvalidInputError("HYG: edge line with " + std::to_string(e.size()) +
                                    " ids, expected " + std::to_string(r));
        if (!std::is_sorted(e.begin(), e.end()))
            throw InvalidInputError("HYG: edge ids must be ascending");
        edges.push_back(std::move(e));
    }
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph read_hyg_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path.string());
    return read_hyg(in);
}

void write_hyg(std::ostream& out, const Hypergraph& g) {
    out << g.uniformity() << ' ' << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
}

void write_hyg_file(const std::filesystem::path& path, const Hypergraph& g) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open file for writing: " + path.string());
    write_hyg(out, g);
}

std::string to_hyg_string(const Hypergraph& g) {
    std::ostringstream ss;
    write_hyg(ss, g);
    return ss.str();
}

}  // namespace hylag
