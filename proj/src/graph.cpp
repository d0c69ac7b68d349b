#include "petrial/graph.hpp"

#include <utility>

#include "petrial/errors.hpp"

namespace petrial {

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Path: return "path";
        case GraphClass::Cycle: return "cycle";
        case GraphClass::TreeWithBranch: return "tree-with-branch";
        case GraphClass::NonTreeNonCycle: return "non-tree-non-cycle";
        case GraphClass::Disconnected: return "disconnected";
    }
    return "?";
}

SimpleGraph::SimpleGraph(std::size_t n) : capacity_(n), vertices_(n), adj_(n, BitVec(n)) {
    for (std::size_t v = 0; v < n; ++v) vertices_.set(v);
}

SimpleGraph SimpleGraph::path(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
    SimpleGraph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void SimpleGraph::require_vertex(Vertex v) const {
    if (!vertices_.test(v))
        throw InvalidInputError("unknown vertex " + std::to_string(v));
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    vertices_.for_each([&](Vertex v) { twice += adj_[v].count(); });
    return twice / 2;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
    return u < capacity_ && v < capacity_ && adj_[u].test(v);
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw InvalidInputError("loop at vertex " + std::to_string(u));
    if (adj_[u].test(v)) throw InvalidInputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adj_[u].set(v);
    adj_[v].set(u);
}

const BitVec& SimpleGraph::neighbours(Vertex v) const {
    require_vertex(v);
    return adj_[v];
}

SimpleGraph SimpleGraph::local_complement(Vertex v) const {
    require_vertex(v);
    SimpleGraph g(*this);
    const BitVec nv = adj_[v];
    nv.for_each([&](Vertex u) {
        g.adj_[u] ^= nv;
        g.adj_[u].reset(u);
    });
    return g;
}

SimpleGraph SimpleGraph::local_complement_delete(Vertex v) const {
    SimpleGraph g = local_complement(v);
    const BitVec nv = adj_[v];
    nv.for_each([&](Vertex u) { g.adj_[u].reset(v); });
    g.adj_[v].clear();
    g.vertices_.reset(v);
    return g;
}

SimpleGraph SimpleGraph::induced(const BitVec& keep) const {
    SimpleGraph g(*this);
    g.vertices_ &= keep;
    for (std::size_t v = 0; v < capacity_; ++v) {
        if (g.vertices_.test(v))
            g.adj_[v] &= g.vertices_;
        else
            g.adj_[v].clear();
    }
    return g;
}

std::vector<BitVec> SimpleGraph::components() const {
    std::vector<BitVec> out;
    BitVec seen(capacity_);
    vertices_.for_each([&](Vertex start) {
        if (seen.test(start)) return;
        BitVec comp(capacity_);
        std::vector<Vertex> stack{start};
        comp.set(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            adj_[v].for_each([&](Vertex u) {
                if (!comp.test(u)) {
                    comp.set(u);
                    stack.push_back(u);
                }
            });
        }
        seen |= comp;
        out.push_back(std::move(comp));
    });
    return out;
}

bool SimpleGraph::connected() const {
    return vertex_count() > 0 && components().size() == 1;
}

bool SimpleGraph::is_path() const {
    const std::size_t n = vertex_count();
    if (n == 0 || !connected()) return false;
    if (edge_count() != n - 1) return false;
    bool ok = true;
    vertices_.for_each([&](Vertex v) {
        if (degree(v) > 2) ok = false;
    });
    return ok;
}

GraphClass SimpleGraph::classify() const {
    if (!connected()) return GraphClass::Disconnected;
    const std::size_t n = vertex_count();
    const std::size_t m = edge_count();
    std::size_t max_degree = 0;
    vertices_.for_each([&](Vertex v) {
        const std::size_t d = degree(v);
        if (d > max_degree) max_degree = d;
    });
    if (m == n - 1) return max_degree <= 2 ? GraphClass::Path : GraphClass::TreeWithBranch;
    if (m == n && max_degree == 2) return GraphClass::Cycle;
    return GraphClass::NonTreeNonCycle;
}

bool SimpleGraph::operator==(const SimpleGraph& o) const {
    if (vertices_ != o.vertices_) return false;
    bool same = true;
    vertices_.for_each([&](Vertex v) {
        if (adj_[v] != o.adj_[v]) same = false;
    });
    return same;
}

Graft::Graft(SimpleGraph graph, BitVec marks) : graph_(std::move(graph)), marks_(std::move(marks)) {
    if (!marks_.is_subset_of(graph_.vertices()))
        throw InvalidInputError("marks contain a vertex outside the graph");
}

GF2Matrix Graft::adjacency() const {
    const std::vector<Vertex> order = graph_.vertex_ids();
    const std::size_t n = order.size();
    GF2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (graph_.adjacent(order[i], order[j])) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
        if (marks_.test(order[i])) m.set(i, i, true);
    }
    return m;
}

Graft Graft::lc_delete(Vertex v) const {
    if (!graph_.has_vertex(v))
        throw InvalidInputError("unknown vertex " + std::to_string(v));
    if (!marks_.test(v))
        throw PreconditionError("vertex " + std::to_string(v) + " is not marked");
    BitVec m = marks_;
    m.reset(v);
    m ^= graph_.neighbours(v);
    return Graft(graph_.local_complement_delete(v), std::move(m));
}

namespace {

struct Token {
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::string cur;
    bool in_comment = false;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back({cur, line});
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush();
            in_comment = false;
            ++line;
        } else if (in_comment) {
            continue;
        } else if (ch == '#') {
            flush();
            in_comment = true;
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush();
        } else {
            cur += ch;
        }
    }
    flush();
    return out;
}

std::size_t parse_count(const Token& t, const char* what) {
    std::size_t value = 0;
    if (t.text.empty()) throw ParseError(std::string("expected ") + what, t.line, t.text);
    for (char ch : t.text) {
        if (ch < '0' || ch > '9')
            throw ParseError(std::string("expected nonnegative integer for ") + what, t.line, t.text);
        value = value * 10 + static_cast<std::size_t>(ch - '0');
        if (value > 1'000'000'000) throw ParseError(std::string("value too large for ") + what, t.line, t.text);
    }
    return value;
}

} // namespace

SimpleGraph parse_edge_list(const std::string& text) {
    const std::vector<Token> toks = tokenize(text);
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const Token& {
        if (pos >= toks.size()) {
            const std::size_t line = toks.empty() ? 1 : toks.back().line;
            throw ParseError(std::string("unexpected end of input, expected ") + what, line);
        }
        return toks[pos++];
    };
    const std::size_t n = parse_count(next("vertex count"), "vertex count");
    const std::size_t m = parse_count(next("edge count"), "edge count");
    SimpleGraph g(n);
    for (std::size_t e = 0; e < m; ++e) {
        const Token& tu = next("edge endpoint");
        const Token& tv = next("edge endpoint");
        const std::size_t u = parse_count(tu, "edge endpoint");
        const std::size_t v = parse_count(tv, "edge endpoint");
        if (u >= n) throw ParseError("vertex id out of range", tu.line, tu.text);
        if (v >= n) throw ParseError("vertex id out of range", tv.line, tv.text);
        if (u == v) throw ParseError("loop edge", tv.line, tv.text);
        if (g.adjacent(u, v)) throw ParseError("duplicate edge", tv.line, tu.text + " " + tv.text);
        g.add_edge(u, v);
    }
    if (pos != toks.size())
        throw ParseError("trailing content after last edge", toks[pos].line, toks[pos].text);
    return g;
}

BitVec parse_vertex_set(const std::string& text, std::size_t n) {
    BitVec out(n);
    for (const Token& t : tokenize(text)) {
        const std::size_t v = parse_count(t, "vertex id");
        if (v >= n) throw ParseError("vertex id out of range", t.line, t.text);
        if (out.test(v)) throw ParseError("duplicate vertex id", t.line, t.text);
        out.set(v);
    }
    return out;
}

} // namespace petrial
