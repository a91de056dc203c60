#include "cvejoin/edge_list.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cvejoin {

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

[[noreturn]] void parse_fail(const std::string& source, int lineno, const std::string& msg) {
    throw Error(errc::parse_error, source + ":" + std::to_string(lineno) + ": " + msg);
}

bool read_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return true;
}

} // namespace

Graph parse_edge_list(std::istream& in, const std::string& source_name) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    int header_line = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        long long a, b;
        if (!read_two_ints(line, a, b))
            parse_fail(source_name, lineno, "expected two integers, got \"" + line + "\"");
        if (n < 0) {
            if (a < 0 || b < 0) parse_fail(source_name, lineno, "negative counts in header");
            n = a;
            m = b;
            header_line = lineno;
            continue;
        }
        if (static_cast<long long>(edges.size()) >= m)
            parse_fail(source_name, lineno,
                       "more edge lines than the declared m=" + std::to_string(m));
        // range-check here so the error points at the offending line; duplicate
        // detection happens in the Graph constructor below
        if (a == b) parse_fail(source_name, lineno, "self-loop (" + line + ")");
        if (a < 0 || b < 0 || a >= n || b >= n)
            parse_fail(source_name, lineno, "endpoint out of range in \"" + line + "\"");
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (n < 0) parse_fail(source_name, lineno ? lineno : 1, "missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        parse_fail(source_name, header_line,
                   "declared m=" + std::to_string(m) + " but found " +
                       std::to_string(edges.size()) + " edge lines");
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const Error& e) {
        throw Error(errc::parse_error, source_name + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& header_comments) {
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << g.order() << " " << g.size() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::optional<Graph> builtin_graph(const std::string& name) {
    if (name == "petersen") return petersen();
    if (name == "k33") return complete_bipartite(3, 3);
    if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'k')) {
        std::string rest = name.substr(1);
        auto comma = rest.find(',');
        try {
            if (comma == std::string::npos) {
                std::size_t used = 0;
                int n = std::stoi(rest, &used);
                if (used != rest.size()) return std::nullopt;
                return name[0] == 'c' ? cycle(n) : complete(n);
            }
            if (name[0] == 'k') {
                std::size_t used = 0;
                int p = std::stoi(rest.substr(0, comma), &used);
                if (used != comma) return std::nullopt;
                int q = std::stoi(rest.substr(comma + 1), &used);
                if (used != rest.size() - comma - 1) return std::nullopt;
                return complete_bipartite(p, q);
            }
        } catch (const std::logic_error&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Graph load_graph(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string name = spec.substr(prefix.size());
        if (auto g = builtin_graph(name)) return *g;
        throw Error(errc::io_error, "unknown builtin graph \"" + name + "\"");
    }
    std::ifstream in(spec);
    if (!in) throw Error(errc::io_error, "cannot open \"" + spec + "\"");
    return parse_edge_list(in, spec);
}

} // namespace cvejoin
