#include "vpa/sampling.hpp"

namespace vpa {

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.is_rationals()) {
        long num = static_cast<long>(rng() % 19) - 9; // -9..9
        long den = static_cast<long>(rng() % 9) + 1;  // 1..9
        return Scalar::from_int(f, num) / Scalar::from_int(f, den);
    }
    return Scalar::from_int(f, static_cast<long>(rng() % f.p()));
}

Vec random_vector(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
    return v;
}

} // namespace vpa
