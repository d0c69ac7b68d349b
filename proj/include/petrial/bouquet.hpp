#ifndef PETRIAL_BOUQUET_HPP
#define PETRIAL_BOUQUET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "petrial/bitvec.hpp"
#include "petrial/graph.hpp"

namespace petrial {

struct BouquetStats {
    std::size_t vertices = 1;
    std::size_t edges = 0;
    std::size_t boundaries = 1;
    std::size_t components = 1;
    std::int64_t euler_characteristic = 2; // vertices - edges + boundaries
    std::int64_t euler_genus = 0;          // 2*components - euler_characteristic
};

// A one-vertex ribbon graph as a signed chord diagram: a cyclic word of 2n
// slots in which every edge label occurs exactly twice, plus the subset of
// labels whose ribbons carry a half-twist. Labels are arbitrary tokens,
// mapped to dense ids 0..n-1 in order of first appearance.
class Bouquet {
public:
    Bouquet() = default; // empty bouquet: a bare disc

    // Word of 2n tokens; `twisted` lists the half-twisted labels.
    explicit Bouquet(const std::vector<std::string>& word_tokens,
                     const std::vector<std::string>& twisted_tokens = {});

    // Word over pre-assigned dense label ids, each id in [0, n) exactly twice.
    static Bouquet from_ids(std::vector<std::size_t> word, std::size_t n, BitVec twisted = {});

    // Untwisted bouquet whose intersection graph is the path on n vertices
    // (zigzag word: consecutive chords interlace, all other pairs do not).
    static Bouquet path_bouquet(std::size_t n);

    std::size_t edge_labels() const { return names_.size(); }
    std::size_t slots() const { return word_.size(); }
    const std::vector<std::size_t>& word() const { return word_; }
    const BitVec& twisted() const { return twisted_; }
    const std::string& label_name(std::size_t id) const { return names_[id]; }
    // Dense id of a token; throws InvalidInputError for unknown tokens.
    std::size_t label_id(const std::string& token) const;
    // The two slot positions of a label, in increasing order.
    std::pair<std::size_t, std::size_t> slots_of(std::size_t label) const;

    // Half-twist every edge in `toggle` (a second half-twist cancels the
    // first, so the twisted set becomes a symmetric difference).
    Bouquet partial_petrial(const BitVec& toggle) const;
    Bouquet partial_petrial(const std::vector<std::string>& toggle_tokens) const;

    // Number of boundary components, by splitting every slot into two
    // boundary points and walking the resulting 2-regular graph.
    std::size_t trace_boundaries() const;

    // Same trace with the stored twist set replaced by `twisted` (the set
    // itself, not a toggle). Lets subset sweeps retwist without copying.
    std::size_t trace_boundaries(const BitVec& twisted) const;

    // The boundary walks themselves: each cycle as the sequence of split
    // points visited (point 2p = entry side of slot p, 2p+1 = exit side),
    // starting from its smallest point; cycles ordered by smallest point.
    std::vector<std::vector<std::size_t>> boundary_walks() const;

    BouquetStats stats() const;

    bool interlaced(std::size_t label_a, std::size_t label_b) const;

    // Graph on the edge labels, adjacency = interlacement. Twists are
    // deliberately dropped: the intersection graph ignores signs.
    SimpleGraph intersection_graph() const;

    bool operator==(const Bouquet& o) const {
        return word_ == o.word_ && twisted_ == o.twisted_ && names_ == o.names_;
    }

private:
    std::vector<std::string> names_;   // dense id -> token
    std::vector<std::size_t> word_;    // 2n slots of label ids
    std::vector<std::size_t> slot_a_;  // first slot of each label
    std::vector<std::size_t> slot_b_;  // second slot of each label
    BitVec twisted_;

    void index_slots();
};

// Chord-diagram text format: '#' comments; each non-empty line is
// "<word> [| <twisted>]". Example: "1 2 1 2 | 2".
Bouquet parse_bouquet_line(const std::string& line, std::size_t line_number = 1);

// All bouquets in a possibly multi-line document, in input order.
std::vector<Bouquet> parse_bouquet_file(const std::string& text);

} // namespace petrial

#endif
