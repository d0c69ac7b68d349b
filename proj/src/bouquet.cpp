#include "petrial/bouquet.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "petrial/errors.hpp"

namespace petrial {

void Bouquet::index_slots() {
    const std::size_t n = names_.size();
    slot_a_.assign(n, 0);
    slot_b_.assign(n, 0);
    std::vector<int> seen(n, 0);
    for (std::size_t p = 0; p < word_.size(); ++p) {
        const std::size_t label = word_[p];
        if (seen[label] == 0)
            slot_a_[label] = p;
        else
            slot_b_[label] = p;
        ++seen[label];
    }
}

Bouquet::Bouquet(const std::vector<std::string>& word_tokens,
                 const std::vector<std::string>& twisted_tokens) {
    if (word_tokens.size() % 2 != 0)
        throw InvalidInputError("chord diagram word has odd length");
    std::unordered_map<std::string, std::size_t> id_of;
    std::vector<int> occurrences;
    word_.reserve(word_tokens.size());
    for (const std::string& tok : word_tokens) {
        auto [it, inserted] = id_of.try_emplace(tok, names_.size());
        if (inserted) {
            names_.push_back(tok);
            occurrences.push_back(0);
        }
        word_.push_back(it->second);
        if (++occurrences[it->second] > 2)
            throw InvalidInputError("label '" + tok + "' occurs more than twice");
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (occurrences[i] != 2)
            throw InvalidInputError("label '" + names_[i] + "' occurs only once");
    twisted_ = BitVec(names_.size());
    for (const std::string& tok : twisted_tokens) {
        auto it = id_of.find(tok);
        if (it == id_of.end())
            throw InvalidInputError("twisted label '" + tok + "' does not occur in the word");
        if (twisted_.test(it->second))
            throw InvalidInputError("twisted label '" + tok + "' listed twice");
        twisted_.set(it->second);
    }
    index_slots();
}

Bouquet Bouquet::from_ids(std::vector<std::size_t> word, std::size_t n, BitVec twisted) {
    if (word.size() != 2 * n)
        throw InvalidInputError("word length does not match label count");
    std::vector<int> occurrences(n, 0);
    for (std::size_t label : word) {
        if (label >= n) throw InvalidInputError("label id out of range");
        ++occurrences[label];
    }
    for (int c : occurrences)
        if (c != 2) throw InvalidInputError("every label must occur exactly twice");
    twisted.for_each([n](std::size_t label) {
        if (label >= n) throw InvalidInputError("twisted set mentions a label id out of range");
    });
    Bouquet b;
    b.names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) b.names_.push_back(std::to_string(i + 1));
    b.word_ = std::move(word);
    b.twisted_ = std::move(twisted);
    b.index_slots();
    return b;
}

Bouquet Bouquet::path_bouquet(std::size_t n) {
    if (n == 0) throw InvalidInputError("path bouquet needs at least one chord");
    std::vector<std::size_t> word;
    word.reserve(2 * n);
    if (n == 1) {
        word = {0, 0};
    } else {
        word.push_back(0);
        word.push_back(1);
        word.push_back(0);
        for (std::size_t i = 2; i < n; ++i) {
            word.push_back(i);
            word.push_back(i - 1);
        }
        word.push_back(n - 1);
    }
    return from_ids(std::move(word), n);
}

std::size_t Bouquet::label_id(const std::string& token) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == token) return i;
    throw InvalidInputError("unknown edge label '" + token + "'");
}

std::pair<std::size_t, std::size_t> Bouquet::slots_of(std::size_t label) const {
    if (label >= names_.size())
        throw InvalidInputError("label id out of range");
    return {slot_a_[label], slot_b_[label]};
}

Bouquet Bouquet::partial_petrial(const BitVec& toggle) const {
    toggle.for_each([this](std::size_t label) {
        if (label >= names_.size())
            throw InvalidInputError("twist set mentions a label id out of range");
    });
    Bouquet b(*this);
    b.twisted_ ^= toggle;
    return b;
}

Bouquet Bouquet::partial_petrial(const std::vector<std::string>& toggle_tokens) const {
    BitVec toggle(names_.size());
    for (const std::string& tok : toggle_tokens) toggle.set(label_id(tok));
    return partial_petrial(toggle);
}

namespace {

// Split every slot p into an entry point 2p and an exit point 2p+1. The
// vertex boundary contributes the arc 2p+1 <-> 2q where q is the cyclically
// next slot; a chord with slots (a, b) contributes parallel sides when
// untwisted and crossed sides when twisted. Every point then has exactly one
// arc partner and one side partner, and boundary components are the
// alternating cycles of the two pairings.
void build_pairings(const std::vector<std::size_t>& word,
                    const std::vector<std::size_t>& slot_a,
                    const std::vector<std::size_t>& slot_b,
                    const BitVec& twisted,
                    std::vector<std::size_t>& arc,
                    std::vector<std::size_t>& side) {
    const std::size_t two_n = word.size();
    arc.resize(2 * two_n);
    side.resize(2 * two_n);
    for (std::size_t p = 0; p < two_n; ++p) {
        const std::size_t q = (p + 1) % two_n;
        arc[2 * p + 1] = 2 * q;
        arc[2 * q] = 2 * p + 1;
    }
    for (std::size_t label = 0; label < slot_a.size(); ++label) {
        const std::size_t a = slot_a[label];
        const std::size_t b = slot_b[label];
        if (twisted.test(label)) {
            side[2 * a] = 2 * b;
            side[2 * b] = 2 * a;
            side[2 * a + 1] = 2 * b + 1;
            side[2 * b + 1] = 2 * a + 1;
        } else {
            side[2 * a] = 2 * b + 1;
            side[2 * b + 1] = 2 * a;
            side[2 * a + 1] = 2 * b;
            side[2 * b] = 2 * a + 1;
        }
    }
}

} // namespace

std::size_t Bouquet::trace_boundaries() const { return trace_boundaries(twisted_); }

std::size_t Bouquet::trace_boundaries(const BitVec& twisted) const {
    if (word_.empty()) return 1;
    std::vector<std::size_t> arc, side;
    build_pairings(word_, slot_a_, slot_b_, twisted, arc, side);
    std::vector<char> visited(arc.size(), 0);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < arc.size(); ++start) {
        if (visited[start]) continue;
        ++cycles;
        std::size_t cur = start;
        do {
            visited[cur] = 1;
            cur = side[cur];
            visited[cur] = 1;
            cur = arc[cur];
        } while (cur != start);
    }
    return cycles;
}

std::vector<std::vector<std::size_t>> Bouquet::boundary_walks() const {
    std::vector<std::vector<std::size_t>> walks;
    if (word_.empty()) return walks;
    std::vector<std::size_t> arc, side;
    build_pairings(word_, slot_a_, slot_b_, twisted_, arc, side);
    std::vector<char> visited(arc.size(), 0);
    for (std::size_t start = 0; start < arc.size(); ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> walk;
        std::size_t cur = start;
        do {
            walk.push_back(cur);
            visited[cur] = 1;
            cur = side[cur];
            walk.push_back(cur);
            visited[cur] = 1;
            cur = arc[cur];
        } while (cur != start);
        walks.push_back(std::move(walk));
    }
    return walks;
}

BouquetStats Bouquet::stats() const {
    BouquetStats s;
    s.vertices = 1;
    s.components = 1;
    s.edges = names_.size();
    s.boundaries = trace_boundaries();
    s.euler_characteristic = static_cast<std::int64_t>(s.vertices) -
                             static_cast<std::int64_t>(s.edges) +
                             static_cast<std::int64_t>(s.boundaries);
    s.euler_genus = 2 * static_cast<std::int64_t>(s.components) - s.euler_characteristic;
    return s;
}

bool Bouquet::interlaced(std::size_t label_a, std::size_t label_b) const {
    if (label_a >= names_.size() || label_b >= names_.size())
        throw InvalidInputError("label id out of range");
    if (label_a == label_b)
        throw InvalidInputError("interlacement needs two distinct labels");
    const std::size_t lo = slot_a_[label_a];
    const std::size_t hi = slot_b_[label_a];
    const bool in1 = lo < slot_a_[label_b] && slot_a_[label_b] < hi;
    const bool in2 = lo < slot_b_[label_b] && slot_b_[label_b] < hi;
    return in1 != in2;
}

SimpleGraph Bouquet::intersection_graph() const {
    const std::size_t n = names_.size();
    SimpleGraph g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (interlaced(a, b)) g.add_edge(a, b);
    return g;
}

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

} // namespace

Bouquet parse_bouquet_line(const std::string& line, std::size_t line_number) {
    std::string body = line;
    if (const std::size_t hash = body.find('#'); hash != std::string::npos)
        body.resize(hash);
    const std::size_t bar = body.find('|');
    std::string word_part = bar == std::string::npos ? body : body.substr(0, bar);
    std::string twist_part = bar == std::string::npos ? std::string{} : body.substr(bar + 1);
    if (twist_part.find('|') != std::string::npos)
        throw ParseError("more than one '|' separator", line_number, "|");
    const std::vector<std::string> word_tokens = split_tokens(word_part);
    if (word_tokens.empty())
        throw ParseError("empty chord diagram word", line_number);
    try {
        return Bouquet(word_tokens, split_tokens(twist_part));
    } catch (const InvalidInputError& e) {
        throw ParseError(e.what(), line_number);
    }
}

std::vector<Bouquet> parse_bouquet_file(const std::string& text) {
    std::vector<Bouquet> out;
    std::istringstream is(text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(is, line)) {
        ++line_number;
        std::string body = line;
        if (const std::size_t hash = body.find('#'); hash != std::string::npos)
            body.resize(hash);
        if (split_tokens(body).empty()) continue;
        out.push_back(parse_bouquet_line(line, line_number));
    }
    return out;
}

} // namespace petrial
