#pragma once

#include "chambered/arith.hpp"
#include "chambered/parallel.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace chambered {

// Generators and vertices are 0-based in the API; the CLI and the JSON
// formats use 1-based indices.
using Word = std::vector<int>;

struct InputGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // parallel edges repeated
};

enum class GraphKind { dynkin, affine, other };

const char* to_string(GraphKind k);

// Coxeter label m(i,j); infinite order encoded as 0.
inline constexpr int kInfiniteOrder = 0;

class CoxeterSystem;

// A group element with its canonical (lexicographically least) reduced word
// and the matrices of sigma_w on V and sigma*_w on V*.
// Two elements are equal iff their sigma matrices are equal.
class Element {
public:
    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    const IntMatrix& sigma() const { return sigma_; }
    const IntMatrix& sigma_star() const { return sigma_star_; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.sigma_ == b.sigma_;
    }

private:
    friend class CoxeterSystem;
    Word word_;
    IntMatrix sigma_;
    IntMatrix sigma_star_;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const { return hash_value(e.sigma()); }
};

// Elements sorted by (length, canonical word) plus the covering pairs
// (from, to, generator) with to = from * s_generator one longer.
struct Ball {
    std::vector<Element> elements;
    struct Edge {
        std::size_t from;
        std::size_t to;
        int generator;
    };
    std::vector<Edge> edges;
    int max_length = 0;
};

struct EnumerateOptions {
    std::size_t max_elements = 2'000'000;
    Exec exec = Exec::parallel;
};

class CoxeterSystem {
public:
    // Validates the graph, rejects Dynkin graphs; throws InputError/NotAffineError.
    explicit CoxeterSystem(InputGraph graph);

    int rank() const { return n_; }
    const InputGraph& graph() const { return graph_; }
    GraphKind kind() const { return kind_; }
    bool is_affine() const { return kind_ == GraphKind::affine; }

    int edge_count(int i, int j) const { return edge_counts_[idx(i, j)]; }
    int label(int i, int j) const;
    // M(i,j) = -(m_ij - 2 delta_ij) / 2
    const RatMatrix& gram() const { return gram_; }
    // 2M
    const IntMatrix& cartan() const { return cartan_; }
    // Primitive positive kernel vector of M; throws NotAffineError if not affine.
    const IntVector& null_root() const;

    const IntMatrix& sigma_generator(int i) const { return sigma_gen_.at(i); }
    const IntMatrix& sigma_star_generator(int i) const { return sigma_star_gen_.at(i); }

    Element identity() const;
    // Evaluates any word; the result carries its canonical reduced word.
    Element element(const Word& word) const;
    Element right_multiply(const Element& w, int i) const;
    Element left_multiply(int i, const Element& w) const;
    Element inverse(const Element& w) const;
    Element multiply(const Element& a, const Element& b) const;

    bool is_right_descent(const Element& w, int i) const;
    bool is_left_descent(const Element& w, int i) const;
    bool is_reduced(const Word& word) const;
    bool weak_order_leq(const Element& v, const Element& w) const;

    // All reduced words of w, lexicographically sorted.
    std::vector<Word> reduced_words(const Element& w) const;

    Ball enumerate_up_to_length(int max_length, const EnumerateOptions& opts = {}) const;

    void check_generator(int i) const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }
    Element from_matrices(IntMatrix sigma, IntMatrix sigma_star) const;

    InputGraph graph_;
    int n_ = 0;
    GraphKind kind_ = GraphKind::other;
    std::vector<int> edge_counts_;
    RatMatrix gram_;
    IntMatrix cartan_;
    std::optional<IntVector> null_root_;
    std::vector<IntMatrix> sigma_gen_;
    std::vector<IntMatrix> sigma_star_gen_;
};

// Read-only classification used by build validation and by the CLI.
GraphKind classify_graph(const InputGraph& g);

} // namespace chambered
