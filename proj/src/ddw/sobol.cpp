#include "ddw/sobol.hpp"

#include <cstdint>
#include <stdexcept>

namespace ddw {

namespace {

constexpr int kBits = 32;

// Primitive polynomials and initial direction numbers from the Joe-Kuo
// table (new-joe-kuo-6.21201), dimensions 2 through 24. Dimension 1 is the
// van der Corput sequence (all m_k = 1).
struct DimInit {
    std::uint32_t poly;
    std::vector<std::uint32_t> m;
};

const std::vector<DimInit>& table() {
    static const std::vector<DimInit> t = {
        {3u, {1}},
        {7u, {1, 3}},
        {11u, {1, 3, 1}},
        {13u, {1, 1, 1}},
        {19u, {1, 1, 3, 3}},
        {25u, {1, 3, 5, 13}},
        {37u, {1, 1, 5, 5, 17}},
        {41u, {1, 1, 5, 5, 5}},
        {47u, {1, 1, 7, 11, 19}},
        {55u, {1, 1, 5, 1, 1}},
        {59u, {1, 1, 1, 3, 11}},
        {61u, {1, 3, 5, 5, 31}},
        {67u, {1, 3, 3, 9, 7, 49}},
        {91u, {1, 1, 1, 15, 21, 21}},
        {97u, {1, 3, 1, 13, 27, 49}},
        {103u, {1, 1, 1, 15, 7, 5}},
        {109u, {1, 3, 1, 15, 13, 25}},
        {115u, {1, 1, 5, 5, 19, 61}},
        {131u, {1, 3, 7, 11, 23, 15, 103}},
        {137u, {1, 3, 7, 13, 13, 15, 69}},
        {143u, {1, 1, 3, 13, 7, 35, 63}},
        {145u, {1, 3, 5, 9, 1, 25, 53}},
        {157u, {1, 3, 1, 13, 9, 35, 107}},
    };
    return t;
}

// 32 direction integers for one dimension.
std::vector<std::uint32_t> direction_integers(std::size_t dim_index) {
    std::vector<std::uint32_t> v(kBits + 1, 0);
    if (dim_index == 0) {
        for (int i = 1; i <= kBits; ++i) v[i] = 1u << (kBits - i);
        return v;
    }
    const DimInit& init = table()[dim_index - 1];
    int s = 0;
    for (std::uint32_t p = init.poly; p > 1; p >>= 1) ++s;  // polynomial degree
    const std::uint32_t a = (init.poly - (1u << s) - 1u) >> 1;
    for (int i = 1; i <= s && i <= kBits; ++i)
        v[i] = init.m[i - 1] << (kBits - i);
    for (int i = s + 1; i <= kBits; ++i) {
        std::uint32_t val = v[i - s] ^ (v[i - s] >> s);
        for (int k = 1; k < s; ++k)
            if ((a >> (s - 1 - k)) & 1u) val ^= v[i - k];
        v[i] = val;
    }
    return v;
}

}  // namespace

std::size_t sobol_max_dims() { return table().size() + 1; }

std::vector<std::vector<double>> sobol_points(std::size_t count, std::size_t dims) {
    if (count < 1) throw std::invalid_argument("sobol_points: count must be >= 1");
    if (dims < 1 || dims > sobol_max_dims())
        throw std::invalid_argument("sobol_points: unsupported dimension");

    std::vector<std::vector<std::uint32_t>> v(dims);
    for (std::size_t j = 0; j < dims; ++j) v[j] = direction_integers(j);

    const double scale = 1.0 / 4294967296.0;  // 2^-32
    std::vector<std::vector<double>> pts(count, std::vector<double>(dims));
    for (std::size_t i = 0; i < count; ++i) {
        // canonical indexing: XOR the direction integers of the set bits
        for (std::size_t j = 0; j < dims; ++j) {
            std::uint32_t x = 0;
            std::size_t bits = i;
            int k = 1;
            while (bits) {
                if (bits & 1u) x ^= v[j][k];
                bits >>= 1;
                ++k;
            }
            pts[i][j] = x * scale;
        }
    }
    return pts;
}

}  // namespace ddw
