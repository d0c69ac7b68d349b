#ifndef PETRIAL_GRAPH_HPP
#define PETRIAL_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "petrial/bitvec.hpp"
#include "petrial/gf2.hpp"

namespace petrial {

using Vertex = std::size_t;

enum class GraphClass { Path, Cycle, TreeWithBranch, NonTreeNonCycle, Disconnected };

std::string to_string(GraphClass c);

// Loopless undirected graph over a fixed id universe [0, capacity).
// Vertex ids are stable: deleting a vertex deactivates its id, surviving
// vertices keep their names. Adjacency is kept as one bitset row per id.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);

    static SimpleGraph path(std::size_t n);
    static SimpleGraph cycle(std::size_t n);
    static SimpleGraph complete(std::size_t n);

    std::size_t capacity() const { return capacity_; }
    std::size_t vertex_count() const { return vertices_.count(); }
    std::size_t edge_count() const;
    bool has_vertex(Vertex v) const { return vertices_.test(v); }
    const BitVec& vertices() const { return vertices_; }
    std::vector<Vertex> vertex_ids() const { return vertices_.ids(); }

    bool adjacent(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);

    const BitVec& neighbours(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbours(v).count(); }

    SimpleGraph local_complement(Vertex v) const;
    SimpleGraph local_complement_delete(Vertex v) const;

    // Copy with the active set restricted to `keep` (ids preserved).
    SimpleGraph induced(const BitVec& keep) const;

    bool connected() const;
    // Active vertex sets of the connected components, ordered by smallest id.
    std::vector<BitVec> components() const;

    bool is_path() const;
    GraphClass classify() const;

    bool operator==(const SimpleGraph& o) const;
    bool operator!=(const SimpleGraph& o) const { return !(*this == o); }

private:
    void require_vertex(Vertex v) const;

    std::size_t capacity_ = 0;
    BitVec vertices_;
    std::vector<BitVec> adj_;
};

// A simple graph with a marked vertex subset. The GF(2) adjacency matrix
// carries 1s on the diagonal at the marked vertices.
class Graft {
public:
    Graft() = default;
    Graft(SimpleGraph graph, BitVec marks);

    const SimpleGraph& graph() const { return graph_; }
    const BitVec& marks() const { return marks_; }

    // Symmetric matrix in ascending order of active vertex ids.
    GF2Matrix adjacency() const;

    // Local complementation at v followed by deleting v, with the mark set
    // updated to (marks \ {v}) symmetric-difference N(v). Requires v marked.
    Graft lc_delete(Vertex v) const;

    bool operator==(const Graft& o) const { return graph_ == o.graph_ && marks_ == o.marks_; }
    bool operator!=(const Graft& o) const { return !(*this == o); }

private:
    SimpleGraph graph_;
    BitVec marks_;
};

// Edge-list text: first non-comment line "n m", then m lines "u v" with
// 0 <= u,v < n and u != v; '#' starts a comment; duplicate edges rejected.
// Tokens may in fact be split across lines arbitrarily; errors carry the
// line number of the offending token.
SimpleGraph parse_edge_list(const std::string& text);

// Whitespace-separated vertex ids, all < n; duplicates rejected.
BitVec parse_vertex_set(const std::string& text, std::size_t n);

} // namespace petrial

#endif
