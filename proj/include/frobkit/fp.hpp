/*
   Copyright 2026 The frobkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FROBKIT_FP_HPP
#define FROBKIT_FP_HPP

#include <cstdint>

#include "frobkit/errors.hpp"

namespace frobkit {

// Scalars of the prime field F_p, stored as canonical representatives in [0, p).
using Coeff = std::uint32_t;

namespace fp {

inline bool is_supported_prime(std::uint32_t p) {
    // Supported characteristic range: primes in [2, 97].
    static constexpr std::uint32_t primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                               29, 31, 37, 41, 43, 47, 53, 59, 61,
                                               67, 71, 73, 79, 83, 89, 97};
    for (std::uint32_t q : primes)
        if (p == q) return true;
    return false;
}

inline Coeff normalize(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<Coeff>(r);
}

inline Coeff add(Coeff a, Coeff b, std::uint32_t p) { return (a + b) % p; }

inline Coeff sub(Coeff a, Coeff b, std::uint32_t p) { return (a + p - b) % p; }

inline Coeff mul(Coeff a, Coeff b, std::uint32_t p) {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p);
}

inline Coeff neg(Coeff a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline Coeff pow(Coeff a, std::uint64_t e, std::uint32_t p) {
    Coeff r = 1 % p;
    Coeff base = a % p;
    while (e > 0) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline Coeff inv(Coeff a, std::uint32_t p) {
    if (a % p == 0) throw ArithmeticError("division by zero in F_" + std::to_string(p));
    return pow(a, p - 2, p);  // Fermat
}

}  // namespace fp
}  // namespace frobkit

#endif
