#include "nbd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace nbd {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw std::invalid_argument("vertex_count must be non-negative");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") with n=" +
                                        std::to_string(vertex_count));
        if (u == v) continue;  // drop self-loops
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    for (auto [u, v] : normalized) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    edge_count_ = normalized.size();
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v) d[v] = static_cast<int>(adjacency_[v].size());
    return d;
}

Graph Graph::two_core() const {
    const int n = vertex_count();
    std::vector<int> deg = degrees();
    std::vector<bool> removed(n, false);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) queue.push_back(v);
    // Isolated vertices are peeled as well: the standard k-core removes
    // everything of degree < k.
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (removed[v]) continue;
        removed[v] = true;
        for (int w : adjacency_[v]) {
            if (removed[w]) continue;
            if (--deg[w] == 1) queue.push_back(w);
        }
    }
    std::vector<int> new_label(n, -1);
    int kept = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) new_label[v] = kept++;
    std::vector<std::pair<int, int>> kept_edges;
    for (int u = 0; u < n; ++u) {
        if (removed[u]) continue;
        for (int v : adjacency_[u])
            if (u < v && !removed[v]) kept_edges.emplace_back(new_label[u], new_label[v]);
    }
    return Graph(kept, kept_edges);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    const int n = vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation size " + std::to_string(perm.size()) +
                                    " does not match vertex count " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (int img : perm) {
        if (img < 0 || img >= n || seen[img])
            throw std::invalid_argument("relabel: not a bijection on 0.." + std::to_string(n - 1));
        seen[img] = true;
    }
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edge_count_);
    for (auto [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
    return Graph(n, mapped);
}

namespace {

long long parse_label(std::string_view token, std::size_t line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'",
                         line_no);
    return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long declared_vertices = -1;
    long long max_label = -1;
    std::unordered_map<long long, int> compact;
    std::vector<std::pair<int, int>> edges;

    auto compact_label = [&](long long raw) {
        auto [it, inserted] = compact.try_emplace(raw, static_cast<int>(compact.size()));
        if (inserted) max_label = std::max(max_label, raw);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) continue;  // blank line
        if (first[0] == '%') continue;
        if (first[0] == '#') {
            // `#vertices N` (also tolerated as `# vertices N`) is a directive;
            // every other '#' line is a comment.
            std::string word = first.substr(1);
            if (word.empty()) tokens >> word;
            if (word == "vertices") {
                std::string count_token;
                if (!(tokens >> count_token))
                    throw ParseError("#vertices directive is missing a count", line_no);
                declared_vertices = parse_label(count_token, line_no);
            }
            continue;
        }
        std::string second, extra;
        if (!(tokens >> second) || (tokens >> extra))
            throw ParseError("expected exactly two vertex labels", line_no);
        int u = compact_label(parse_label(first, line_no));
        int v = compact_label(parse_label(second, line_no));
        edges.emplace_back(u, v);
    }

    int n = static_cast<int>(compact.size());
    if (declared_vertices >= 0) {
        if (declared_vertices <= max_label)
            throw ParseError("#vertices " + std::to_string(declared_vertices) +
                                 " is inconsistent with vertex label " + std::to_string(max_label),
                             0);
        n = static_cast<int>(declared_vertices);
    }
    return Graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "#vertices " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_edge_list(g, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace nbd
