#pragma once

// Shared finite-semiring and semimodule fixtures used across the test
// suites.  Everything here goes through the validating constructors, so a
// typo in a table fails loudly at test startup.

#include <random>
#include <vector>

#include "semicech/semiring.hpp"

namespace fixtures {

using semicech::Semiring;
using semicech::SemiringTable;

/// The chain 0 < a < ... < top with add = max and mul = min (a bounded
/// distributive lattice as a semiring).  one = top.
inline SemiringTable chain_semiring(int size) {
    std::vector<std::vector<int>> add(size, std::vector<int>(size));
    std::vector<std::vector<int>> mul(size, std::vector<int>(size));
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            add[a][b] = std::max(a, b);
            mul[a][b] = std::min(a, b);
        }
    return SemiringTable(size, 0, size - 1, add, mul);
}

/// B as an explicit two-element table.
inline SemiringTable boolean_table() {
    return SemiringTable(2, 0, 1, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
}

/// Z/n viewed as a semiring (a ring is in particular a semiring).
inline SemiringTable zmod_table(int n) {
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    return SemiringTable(n, 0, 1, add, mul);
}

/// B x B with componentwise operations; elements 2*x + y for (x, y).
inline SemiringTable boolean_square_table() {
    auto pack = [](int x, int y) { return 2 * x + y; };
    std::vector<std::vector<int>> add(4, std::vector<int>(4));
    std::vector<std::vector<int>> mul(4, std::vector<int>(4));
    for (int x0 = 0; x0 < 2; ++x0)
        for (int y0 = 0; y0 < 2; ++y0)
            for (int x1 = 0; x1 < 2; ++x1)
                for (int y1 = 0; y1 < 2; ++y1) {
                    add[pack(x0, y0)][pack(x1, y1)] = pack(x0 | x1, y0 | y1);
                    mul[pack(x0, y0)][pack(x1, y1)] = pack(x0 & x1, y0 & y1);
                }
    return SemiringTable(4, pack(0, 0), pack(1, 1), add, mul);
}

/// The truncated naturals {0..top} with saturating addition/multiplication.
inline SemiringTable truncated_naturals(int top) {
    int n = top + 1;
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = std::min(a + b, top);
            mul[a][b] = std::min(a * b, top);
        }
    return SemiringTable(n, 0, 1, add, mul);
}

/// Small random rationals (numerators/denominators bounded) for qmax tests.
inline semicech::SemiringElement random_qmax(std::mt19937_64& rng,
                                             bool allow_bottom = false) {
    auto q = Semiring::qmax();
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<int> coin(0, 9);
    if (allow_bottom && coin(rng) == 0) return semicech::SemiringElement::bottom(q);
    return semicech::SemiringElement::number(q, semicech::Rational(num(rng), den(rng)));
}

/// A random nonzero (hence invertible) qmax element.
inline semicech::SemiringElement random_qmax_unit(std::mt19937_64& rng) {
    return random_qmax(rng, false);
}

}  // namespace fixtures
