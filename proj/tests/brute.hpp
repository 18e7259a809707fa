#pragma once

// Independent reference computations for the tests: machine-integer
// matrices built straight from the edge list, and exhaustive word search.

#include "chambered/coxeter.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace brute {

using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat identity(int n) {
    Mat m(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat p(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                p[i][j] += a[i][k] * b[k][j];
    return p;
}

// a_ij = number of edges between i and j (i != j).
inline Mat adjacency(const chambered::InputGraph& g) {
    Mat a(g.vertex_count, std::vector<std::int64_t>(g.vertex_count, 0));
    for (auto [u, v] : g.edges) {
        ++a[u][v];
        ++a[v][u];
    }
    return a;
}

// s_i(alpha_j) = alpha_j - <alpha_i^vee, alpha_j> alpha_i with Cartan 2 - a.
inline Mat reflection(const chambered::InputGraph& g, int i) {
    const Mat a = adjacency(g);
    Mat s = identity(g.vertex_count);
    for (int j = 0; j < g.vertex_count; ++j) {
        const std::int64_t cij = i == j ? 2 : -a[i][j];
        s[i][j] -= cij;
    }
    return s;
}

struct WordData {
    int length;
    std::vector<int> least_word;  // lexicographically least among minimal words
};

// Every element reachable by words of length <= max_length, keyed by matrix.
inline std::map<Mat, WordData> all_words(const chambered::InputGraph& g, int max_length) {
    const int n = g.vertex_count;
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(reflection(g, i));
    std::map<Mat, WordData> out;
    // Depth-first in lexicographic order, so the first minimal hit is least.
    std::vector<int> word;
    auto visit = [&](auto&& self, const Mat& m) -> void {
        auto it = out.find(m);
        if (it == out.end())
            out.emplace(m, WordData{static_cast<int>(word.size()), word});
        else if (static_cast<int>(word.size()) < it->second.length)
            it->second = WordData{static_cast<int>(word.size()), word};
        else if (static_cast<int>(word.size()) == it->second.length && word < it->second.least_word)
            it->second.least_word = word;
        if (static_cast<int>(word.size()) == max_length)
            return;
        for (int i = 0; i < n; ++i) {
            word.push_back(i);
            self(self, mul(m, gens[i]));
            word.pop_back();
        }
    };
    visit(visit, identity(n));
    // Words of length <= L reach elements of length <= L exactly.
    return out;
}

} // namespace brute
