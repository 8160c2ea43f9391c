#include "dihedra/words.hpp"

#include <stdexcept>

namespace dihedra {

std::size_t WordSpace::size() const {
    if (weight == 0) return 1;
    std::size_t n = 1;
    for (std::size_t i = 0; i < weight; ++i) n *= dim;
    return n;
}

std::size_t WordSpace::index(const Word& w) const {
    if (w.size() != weight) throw std::invalid_argument("word has wrong weight");
    std::size_t idx = 0;
    for (std::size_t letter : w) {
        if (letter >= dim) throw std::invalid_argument("letter out of range");
        idx = idx * dim + letter;
    }
    return idx;
}

Word WordSpace::word(std::size_t idx) const {
    Word w(weight, 0);
    for (std::size_t i = weight; i-- > 0;) {
        w[i] = idx % dim;
        idx /= dim;
    }
    return w;
}

int word_degree(const Word& w, const std::vector<int>& letter_degrees) {
    int d = 0;
    for (std::size_t letter : w) d += letter_degrees[letter];
    return d;
}

std::string word_label(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + names[w[i]];
    return s;
}

std::map<int, std::vector<std::size_t>> words_by_degree(std::size_t dim, std::size_t weight,
                                                        const std::vector<int>& letter_degrees) {
    WordSpace ws{dim, weight};
    std::map<int, std::vector<std::size_t>> buckets;
    for (std::size_t idx = 0; idx < ws.size(); ++idx)
        buckets[word_degree(ws.word(idx), letter_degrees)].push_back(idx);
    return buckets;
}

}  // namespace dihedra
