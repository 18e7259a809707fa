#include "chambered/catalog.hpp"

#include "chambered/error.hpp"

#include <string>

namespace chambered::catalog {

InputGraph affine_A(int n) {
    if (n < 1)
        throw InputError("affine A_n needs n >= 1");
    InputGraph g{n + 1, {}};
    if (n == 1) {
        g.edges = {{0, 1}, {0, 1}};
        return g;
    }
    for (int v = 0; v <= n; ++v)
        g.edges.emplace_back(v, (v + 1) % (n + 1));
    return g;
}

InputGraph affine_D(int n) {
    if (n < 4)
        throw InputError("affine D_n needs n >= 4");
    // Leaves 0, 1 on chain vertex 2; chain 2 .. n-2; leaves n-1, n on n-2.
    InputGraph g{n + 1, {}};
    g.edges.emplace_back(0, 2);
    g.edges.emplace_back(1, 2);
    for (int v = 2; v < n - 2; ++v)
        g.edges.emplace_back(v, v + 1);
    g.edges.emplace_back(n - 1, n - 2);
    g.edges.emplace_back(n, n - 2);
    return g;
}

InputGraph affine_E(int n) {
    InputGraph g{n + 1, {}};
    switch (n) {
    case 6:
        g.edges = {{0, 1}, {1, 4}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
        break;
    case 7:
        g.edges = {{0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
        break;
    case 8:
        g.edges = {{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
        break;
    default:
        throw InputError("affine E_n exists for n = 6, 7, 8 only");
    }
    return g;
}

InputGraph dynkin_A(int n) {
    if (n < 1)
        throw InputError("A_n needs n >= 1");
    InputGraph g{n, {}};
    for (int v = 0; v + 1 < n; ++v)
        g.edges.emplace_back(v, v + 1);
    return g;
}

InputGraph by_name(std::string_view name) {
    auto number = [&](std::size_t from) {
        const std::string digits(name.substr(from));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("unknown graph name '" + std::string(name) + "'");
        return std::stoi(digits);
    };
    if (name.size() >= 3 && name[1] == '~') {
        const int n = number(2);
        switch (name[0]) {
        case 'A':
            return affine_A(n);
        case 'D':
            return affine_D(n);
        case 'E':
            return affine_E(n);
        default:
            break;
        }
    } else if (name.size() >= 2 && name[0] == 'A') {
        return dynkin_A(number(1));
    }
    throw InputError("unknown graph name '" + std::string(name) + "'");
}

} // namespace chambered::catalog
