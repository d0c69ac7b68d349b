#include "petrial/enumerate.hpp"

#include "petrial/errors.hpp"

namespace petrial {

namespace {

void match_rest(std::size_t two_n, std::size_t next_label, std::vector<std::size_t>& word,
                std::vector<char>& used,
                const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::size_t p = 0;
    while (p < two_n && used[p]) ++p;
    if (p == two_n) {
        visit(word);
        return;
    }
    used[p] = 1;
    for (std::size_t q = p + 1; q < two_n; ++q) {
        if (used[q]) continue;
        used[q] = 1;
        word[p] = word[q] = next_label;
        match_rest(two_n, next_label + 1, word, used, visit);
        used[q] = 0;
    }
    used[p] = 0;
}

} // namespace

void for_each_matching(std::size_t n,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> word(2 * n, 0);
    if (n == 0) {
        visit(word);
        return;
    }
    std::vector<char> used(2 * n, 0);
    match_rest(2 * n, 0, word, used, visit);
}

std::uint64_t double_factorial_odd(std::size_t n) {
    if (n > 17)
        throw InvalidInputError("(2n-1)!! leaves 64 bits for n = " + std::to_string(n));
    std::uint64_t f = 1;
    for (std::size_t k = 3; k < 2 * n; k += 2) f *= k;
    return f;
}

void for_each_labeled_graph(
    std::size_t n, const std::function<void(const SimpleGraph&, std::uint64_t)>& visit) {
    if (n > 11)
        throw InvalidInputError("edge mask of a graph on " + std::to_string(n) +
                                " vertices leaves 64 bits");
    const std::size_t bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        SimpleGraph g(n);
        std::size_t b = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++b)
                if ((mask >> b) & 1) g.add_edge(i, j);
        visit(g, mask);
    }
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace petrial
