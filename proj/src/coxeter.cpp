#include "chambered/coxeter.hpp"

#include "chambered/error.hpp"
#include "chambered/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

namespace chambered {

const char* to_string(GraphKind k) {
    switch (k) {
    case GraphKind::dynkin:
        return "dynkin";
    case GraphKind::affine:
        return "affine";
    case GraphKind::other:
        return "other";
    }
    return "?";
}

namespace {

void validate_graph(const InputGraph& g) {
    if (g.vertex_count < 2)
        throw InputError("graph needs at least 2 vertices, got " +
                         std::to_string(g.vertex_count));
    const int n = g.vertex_count;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : g.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InputError("edge (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                             ") references a vertex outside 1.." + std::to_string(n));
        if (a == b)
            throw InputError("loop at vertex " + std::to_string(a + 1));
        parent[find(a)] = find(b);
    }
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0))
            throw InputError("graph is disconnected (vertex " + std::to_string(v + 1) +
                             " not reachable from vertex 1)");
}

std::vector<int> count_edges(const InputGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count);
    std::vector<int> counts(n * n, 0);
    for (const auto& [a, b] : g.edges) {
        ++counts[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
        ++counts[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a)];
    }
    return counts;
}

IntMatrix cartan_of(int n, const std::vector<int>& counts) {
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c(i, j) = i == j ? 2 : -counts[static_cast<std::size_t>(i * n + j)];
    return c;
}

struct Classification {
    GraphKind kind;
    std::optional<IntVector> null_root;
};

Classification classify(int n, const IntMatrix& cartan) {
    const Inertia in = symmetric_inertia(to_rational(cartan));
    if (in.positive_semidefinite && in.zero_pivots == 0)
        return {GraphKind::dynkin, std::nullopt};
    if (in.positive_semidefinite && in.zero_pivots == 1) {
        const auto kernel = nullspace(to_rational(cartan));
        IntVector delta = primitive_integer_vector(kernel.at(0));
        if (delta[0] < 0)
            for (Int& x : delta)
                x = -x;
        const bool positive =
            std::all_of(delta.begin(), delta.end(), [](const Int& x) { return x > 0; });
        if (positive && static_cast<int>(delta.size()) == n)
            return {GraphKind::affine, std::move(delta)};
    }
    return {GraphKind::other, std::nullopt};
}

bool negative_vector(std::span<const Int> v) {
    return std::any_of(v.begin(), v.end(), [](const Int& x) { return x < 0; });
}

// Row i of sigma*_w is the coordinate vector of sigma_{w^-1}(alpha_i).
bool row_negative(const IntMatrix& m, int i) { return negative_vector(m.row(i)); }

bool column_negative(const IntMatrix& m, int i) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, i) < 0)
            return true;
    return false;
}

} // namespace

GraphKind classify_graph(const InputGraph& g) {
    validate_graph(g);
    return classify(g.vertex_count, cartan_of(g.vertex_count, count_edges(g))).kind;
}

CoxeterSystem::CoxeterSystem(InputGraph graph) : graph_(std::move(graph)) {
    validate_graph(graph_);
    n_ = graph_.vertex_count;
    edge_counts_ = count_edges(graph_);
    cartan_ = cartan_of(n_, edge_counts_);
    gram_ = RatMatrix(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
        {
            gram_(i, j) = Rational(cartan_(i, j), 2);
            gram_(i, j).canonicalize();
        }
    auto cls = classify(n_, cartan_);
    if (cls.kind == GraphKind::dynkin)
        throw NotAffineError("Dynkin graph: the Coxeter group is finite; a non-Dynkin graph "
                             "is required");
    kind_ = cls.kind;
    null_root_ = std::move(cls.null_root);

    for (int i = 0; i < n_; ++i) {
        IntMatrix s = IntMatrix::identity(n_);
        for (int j = 0; j < n_; ++j)
            s(i, j) += edge_count(i, j) - (i == j ? 2 : 0);
        sigma_star_gen_.push_back(s.transpose());
        sigma_gen_.push_back(std::move(s));
    }
}

int CoxeterSystem::label(int i, int j) const {
    if (i == j)
        return 1;
    switch (edge_count(i, j)) {
    case 0:
        return 2;
    case 1:
        return 3;
    default:
        return kInfiniteOrder;
    }
}

const IntVector& CoxeterSystem::null_root() const {
    if (!null_root_)
        throw NotAffineError("null root requested for a non-affine graph");
    return *null_root_;
}

void CoxeterSystem::check_generator(int i) const {
    if (i < 0 || i >= n_)
        throw InputError("generator " + std::to_string(i + 1) + " outside 1.." +
                         std::to_string(n_));
}

Element CoxeterSystem::from_matrices(IntMatrix sigma, IntMatrix sigma_star) const {
    Element e;
    // Greedy least-left-descent peeling yields the lexicographically least
    // reduced word. Left-multiplying by s_i only needs sigma*.
    IntMatrix cur = sigma_star;
    for (;;) {
        int d = -1;
        for (int i = 0; i < n_; ++i)
            if (row_negative(cur, i)) {
                d = i;
                break;
            }
        if (d < 0)
            break;
        e.word_.push_back(d);
        // cur <- S*_d cur: row t += m_td * row d (t != d), row d negated.
        const auto ud = static_cast<std::size_t>(d);
        for (int t = 0; t < n_; ++t) {
            const int m = edge_count(t, d);
            if (t == d || m == 0)
                continue;
            for (int c = 0; c < n_; ++c)
                cur(t, c) += m * cur(ud, c);
        }
        for (int c = 0; c < n_; ++c)
            cur(ud, c) = -cur(ud, c);
    }
    e.sigma_ = std::move(sigma);
    e.sigma_star_ = std::move(sigma_star);
    return e;
}

Element CoxeterSystem::identity() const {
    Element e;
    e.sigma_ = IntMatrix::identity(n_);
    e.sigma_star_ = IntMatrix::identity(n_);
    return e;
}

Element CoxeterSystem::element(const Word& word) const {
    IntMatrix s = IntMatrix::identity(n_);
    IntMatrix ss = IntMatrix::identity(n_);
    for (int i : word) {
        check_generator(i);
        s = s * sigma_gen_[i];
        ss = ss * sigma_star_gen_[i];
    }
    return from_matrices(std::move(s), std::move(ss));
}

Element CoxeterSystem::right_multiply(const Element& w, int i) const {
    check_generator(i);
    return from_matrices(w.sigma() * sigma_gen_[i], w.sigma_star() * sigma_star_gen_[i]);
}

Element CoxeterSystem::left_multiply(int i, const Element& w) const {
    check_generator(i);
    return from_matrices(sigma_gen_[i] * w.sigma(), sigma_star_gen_[i] * w.sigma_star());
}

Element CoxeterSystem::inverse(const Element& w) const {
    return from_matrices(w.sigma_star().transpose(), w.sigma().transpose());
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
    return from_matrices(a.sigma() * b.sigma(), a.sigma_star() * b.sigma_star());
}

bool CoxeterSystem::is_right_descent(const Element& w, int i) const {
    check_generator(i);
    return column_negative(w.sigma(), i);
}

bool CoxeterSystem::is_left_descent(const Element& w, int i) const {
    check_generator(i);
    return row_negative(w.sigma_star(), i);
}

bool CoxeterSystem::is_reduced(const Word& word) const {
    Element cur = identity();
    for (int i : word) {
        if (is_right_descent(cur, i))
            return false;
        cur = right_multiply(cur, i);
    }
    return true;
}

bool CoxeterSystem::weak_order_leq(const Element& v, const Element& w) const {
    const Element u = multiply(inverse(v), w);
    return u.length() == w.length() - v.length();
}

std::vector<Word> CoxeterSystem::reduced_words(const Element& w) const {
    if (w.length() == 0)
        return {Word{}};
    std::vector<Word> out;
    for (int i = 0; i < n_; ++i) {
        if (!is_right_descent(w, i))
            continue;
        for (Word prefix : reduced_words(right_multiply(w, i))) {
            prefix.push_back(i);
            out.push_back(std::move(prefix));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Ball CoxeterSystem::enumerate_up_to_length(int max_length, const EnumerateOptions& opts) const {
    if (max_length < 0)
        throw InputError("length bound must be >= 0");
    Ball ball;
    ball.max_length = max_length;
    ball.elements.push_back(identity());
    if (opts.max_elements < 1)
        throw CapExceeded("enumeration cap (max_elements=0) exceeded");

    std::size_t level_begin = 0;
    for (int len = 0; len < max_length; ++len) {
        const std::size_t level_end = ball.elements.size();
        const std::size_t count = level_end - level_begin;
        const auto n = static_cast<std::size_t>(n_);
        // successors[k*n + i] is w_k * s_i when that is one longer.
        std::vector<std::optional<Element>> successors(count * n);
        auto expand = [&](std::size_t k) {
            const Element& w = ball.elements[level_begin + k];
            for (int i = 0; i < n_; ++i)
                if (!column_negative(w.sigma(), i))
                    successors[k * n + static_cast<std::size_t>(i)] = right_multiply(w, i);
        };
        if (opts.exec == Exec::parallel) {
            const auto items = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
            for (long long k = 0; k < items; ++k)
                expand(static_cast<std::size_t>(k));
        } else {
            for (std::size_t k = 0; k < count; ++k)
                expand(k);
        }

        // Deterministic merge: first occurrence in (parent, generator) order.
        std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> seen;
        std::vector<Element> next;
        std::vector<Ball::Edge> raw_edges;
        for (std::size_t k = 0; k < count; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                auto& s = successors[k * n + i];
                if (!s)
                    continue;
                auto [it, inserted] = seen.try_emplace(s->sigma(), next.size());
                if (inserted) {
                    if (level_end + next.size() + 1 > opts.max_elements)
                        throw CapExceeded("enumeration cap (max_elements=" +
                                          std::to_string(opts.max_elements) +
                                          ") exceeded at length " + std::to_string(len + 1));
                    next.push_back(std::move(*s));
                }
                raw_edges.push_back({level_begin + k, it->second, static_cast<int>(i)});
            }

        std::vector<std::size_t> order(next.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return next[a].word() < next[b].word();
        });
        std::vector<std::size_t> position(next.size());
        for (std::size_t p = 0; p < order.size(); ++p)
            position[order[p]] = level_end + p;
        for (std::size_t p : order)
            ball.elements.push_back(std::move(next[p]));
        for (auto& e : raw_edges) {
            e.to = position[e.to];
            ball.edges.push_back(e);
        }
        level_begin = level_end;
        if (next.empty())
            break;
    }
    std::sort(ball.edges.begin(), ball.edges.end(), [](const Ball::Edge& a, const Ball::Edge& b) {
        return std::tie(a.from, a.generator) < std::tie(b.from, b.generator);
    });
    return ball;
}

} // namespace chambered
