#include "chambered/arith.hpp"

#include "chambered/error.hpp"

#include <limits>
#include <numeric>

namespace chambered {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = m(r, c);
    return out;
}

RatVector to_rational(std::span<const Int> v) {
    RatVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        out[k] = v[k];
    return out;
}

std::size_t hash_value(const Int& x) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(x.get_mpz_t()) + 1);
    const std::size_t limbs = mpz_size(x.get_mpz_t());
    for (std::size_t k = 0; k < limbs; ++k) {
        const auto limb = static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), k));
        h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t hash_value(const IntMatrix& m) {
    std::size_t h = m.rows() * 31 + m.cols();
    for (const Int& x : m.data())
        h ^= hash_value(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid_integer = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char ch : t)
            if (ch < '0' || ch > '9')
                return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(s))
            throw InputError("not a rational number: '" + s + "'");
    } else {
        const std::string_view num = std::string_view(s).substr(0, slash);
        const std::string_view den = std::string_view(s).substr(slash + 1);
        if (!valid_integer(num) || den.empty() || !valid_integer(den) ||
            den.front() == '-' || den.front() == '+')
            throw InputError("not a rational number: '" + s + "'");
    }
    if (s.front() == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw InputError("not a rational number: '" + s + "'");
    if (q.get_den() == 0)
        throw InputError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

IntVector primitive_integer_vector(std::span<const Rational> v) {
    Int lcm = 1;
    for (const Rational& x : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    Int g = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[k] = v[k].get_num() * (lcm / v[k].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[k].get_mpz_t());
    }
    if (g > 1)
        for (Int& x : out)
            x /= g;
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        acc += a[k] * b[k];
    return acc;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
    Int acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        acc += a[k] * b[k];
    return acc;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % range;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return lo + static_cast<long>(x % range);
}

} // namespace chambered
