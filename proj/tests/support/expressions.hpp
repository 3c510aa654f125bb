#pragma once

#include <array>

namespace fgh::testing {

// Hand-written parser inputs: canonical forms, non-canonical sums that must
// normalize, whitespace variants, and parenthesized exponents.
inline constexpr std::array<const char*, 100> kHandExpressions = {
    // canonical atoms
    "0", "1", "2", "3", "7", "42", "w", "w*2", "w*3", "w + 1",
    "w + 2", "w*2 + 1", "w^2", "w^2 + w", "w^2*3", "w^2 + w*2 + 5", "w^3",
    "w^3 + w^2*2", "w^w", "w^w*3",
    "w^w + w", "w^w*2 + w^2*3 + 4", "w^(w + 1)", "w^(w + 1)*2 + w^w*3",
    "w^(w*2)", "w^(w*2 + 1)", "w^(w^2)", "w^(w^2 + w + 1)", "w^(w^w)",
    "w^(w^w) + w^(w*2)*2",
    "e0", " e0 ",
    // absorption on the left
    "1 + w", "2 + w + 1", "5 + w*2", "w + w^2", "w + w^2 + w", "1 + 1",
    "1 + 2", "w*1", "w^1", "w^0", "w^0*7", "0 + w",
    // merging equal exponents
    "w + w", "w + w + w", "w*2 + w", "w + w*3", "w^2 + w^2", "w^2*2 + w^2",
    "1 + 1 + 1", "w + 0", "0 + 0", "w^2 + 0 + w", "w + 1 + 1", "w^w + w^w",
    // out-of-order sums
    "w + w^w", "w^2 + w^3", "1 + w^2 + w", "w*5 + w^2", "3 + w^3 + w^2 + w",
    "w + 3 + w", "w^w + w^(w + 1)", "w^2*3 + w^2*2 + w^2", "5 + 4 + 3",
    "w + w*2 + w*3", "w^3 + w^w + w^3", "0 + w^2 + 0",
    // parenthesized exponents
    "w^(1)", "w^(2)*3", "w^(0)", "w^(w)", "w^(1 + 1)", "w^(w + w)",
    "w^(1 + w)", "w^(w*2 + w)", "w^(2 + w)", "w^(w^2 + w^2)",
    // whitespace variants
    "w^w*3+w*2+5", "  w  +  1  ", "w ^ w", "w * 2", "w^ 2 + w *3", "w+w",
    "1+w", "w^(w+1)", "\tw^2\t+\tw", "w  ^  (  w  +  1  )  *  2",
    // larger coefficients and mixed shapes
    "w*10", "w*123", "w^2*10 + w*20 + 30", "w^10",
    "w^(w^3*3 + w^2*2 + w*1 + 1)", "w^3*3 + w^3", "0 + 0 + 0",
    "w^(w + 1) + w^w + w^2 + w + 1", "w^(w^w)*3 + w^(w^2)*2 + w^w",
    "w^(w + 2)*2 + w^(w + 1)*3 + w^w*2 + w^3 + w*2 + 7",
    "12", "w^2 + 12",
};

}  // namespace fgh::testing
