#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dihedra {

using Word = std::vector<std::size_t>;  // letter indices, length = weight

// Indexing of weight-w words over `dim` letters in lexicographic order
// (the empty word is the single weight-0 word).
struct WordSpace {
    std::size_t dim = 0;
    std::size_t weight = 0;

    std::size_t size() const;
    std::size_t index(const Word& w) const;
    Word word(std::size_t idx) const;
};

int word_degree(const Word& w, const std::vector<int>& letter_degrees);

std::string word_label(const Word& w, const std::vector<std::string>& names);

// Word indices of weight w bucketed by total degree.
std::map<int, std::vector<std::size_t>> words_by_degree(std::size_t dim, std::size_t weight,
                                                        const std::vector<int>& letter_degrees);

}  // namespace dihedra
