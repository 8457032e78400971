#pragma once

// Published reference values for the comparison tables, transcribed verbatim.
// They are inputs for regression, never recomputed.

#include <array>
#include <cstdint>

namespace cubic::published {

struct NegativeRow {
    int j;
    std::int64_t h;
    double ratio_main;
    double ratio_two_term;
    double residual;
};

// negative discriminants: h_-, h/H, h/H*, (h - H*)/sqrt(x) at x = 10^j
inline constexpr std::array<NegativeRow, 10> kNegative = {{
    {2, 7, 0.337, 0.7843510, -0.1925},
    {3, 127, 0.611, 0.9993210, -0.0027},
    {4, 1520, 0.731, 0.9943300, -0.0867},
    {5, 17041, 0.819, 0.9998781, -0.0066},
    {6, 182417, 0.877, 1.0001096, 0.0200},
    {7, 1905514, 0.916, 1.0000100, 0.0060},
    {8, 19609185, 0.943, 0.9999394, -0.1188},
    {9, 199884780, 0.961, 0.9999850, -0.0951},
    {10, 2024660098, 0.974, 1.0000009, 0.0176},
    {11, 20422230540, 0.982, 1.0000003, 0.0218},
}};

struct PositiveRow {
    int j;
    std::int64_t g;
    std::int64_t f;
    double ratio_main;
    double ratio_two_term;
    double residual_h;
    double residual_g;
};

// positive discriminants: g_+, f, h/H, h/H*, (h - H*)/sqrt(x), (g - H*)/sqrt(x)
inline constexpr std::array<PositiveRow, 10> kPositive = {{
    {2, 0, 2, 0.096, 8.5889786, 0.0589, -0.0078},
    {3, 22, 5, 0.341, 1.0461129, 0.0330, -0.0197},
    {4, 366, 16, 0.536, 0.9900166, -0.0374, -0.0908},
    {5, 4753, 51, 0.688, 1.0010833, 0.0163, -0.0374},
    {6, 54441, 159, 0.786, 0.9988436, -0.0631, -0.1161},
    {7, 592421, 501, 0.855, 0.9999134, -0.0162, -0.0690},
    {8, 6246698, 1592, 0.901, 1.0000259, 0.0161, -0.0369},
    {9, 64654353, 5008, 0.933, 1.0000097, 0.0198, -0.0330},
    {10, 661432230, 15851, 0.954, 0.9999988, -0.0081, -0.0609},
    {11, 6715773873, 50152, 0.969, 1.0000002, 0.0046, -0.0482},
}};

struct LocalRow {
    std::int64_t p;
    int symbol;  // SplittingSymbol ordinal: 111, 21, 3, 1^21, 1^3
    double ratio_main;
    double ratio_two_term;
};

// positive discriminants up to 10^7 with one local condition at p
inline constexpr std::int64_t kLocalX = 10'000'000;
inline constexpr std::array<LocalRow, 20> kLocal = {{
    {2, 0, 0.706, 0.9999}, {2, 1, 0.851, 0.9999}, {2, 2, 0.924, 1.0001}, {2, 3, 0.836, 0.9996}, {2, 4, 0.909, 1.0003},
    {3, 0, 0.721, 0.9998}, {3, 1, 0.856, 1.0001}, {3, 2, 0.923, 0.9999}, {3, 3, 0.835, 0.9997}, {3, 4, 0.903, 0.9998},
    {5, 0, 0.734, 0.9994}, {5, 1, 0.858, 0.9996}, {5, 2, 0.920, 1.0002}, {5, 3, 0.832, 1.0002}, {5, 4, 0.895, 1.0006},
    {7, 0, 0.740, 0.9994}, {7, 1, 0.858, 0.9997}, {7, 2, 0.917, 1.0008}, {7, 3, 0.829, 0.9985}, {7, 4, 0.891, 1.0025},
}};

// least-squares weight of f in g_+ + u f
inline constexpr double kFittedU = 0.31;

}  // namespace cubic::published
