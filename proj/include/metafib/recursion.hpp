#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "metafib/errors.hpp"

namespace metafib {

using term_t = std::uint64_t;
using index_t = std::uint64_t;

// Largest value a term may take. One bit of headroom below 2^64 keeps sums
// checkable and lets every term fit in a signed 64-bit integer for argument
// arithmetic.
inline constexpr term_t max_term = (term_t{1} << 63) - 1;

// A(n) = A(n - a - A^k(n-b)) + A(A^k(n-b))
struct Conway {
    unsigned k = 1;       // composition depth, k >= 1
    std::uint64_t a = 0;  // a >= 0
    std::uint64_t b = 1;  // b >= 1
};

// A(n) = A(n - a - A^k(n-b)) + A(A^k(n-c))
struct ConwayVariant {
    unsigned k = 1;
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    std::uint64_t c = 1;  // c >= 1
};

// C(n) = C(n - s - C(n-1)) + C(n - s - 2 - C(n-3))
struct Conolly {
    std::uint64_t s = 0;  // s >= 0
};

// C(n) = sum_i C(n - a_i - C(n - b_i))
struct GeneralConolly {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;  // (a_i, b_i), b_i >= 1
};

// Which recursion family to run, with parameters validated at construction.
class RecursionSpec {
public:
    using Variant = std::variant<Conway, ConwayVariant, Conolly, GeneralConolly>;

    explicit RecursionSpec(Conway p) : v_(p) {
        if (p.k < 1) throw bad_parameter("Conway: k must be >= 1");
        if (p.b < 1) throw bad_parameter("Conway: b must be >= 1");
    }
    explicit RecursionSpec(ConwayVariant p) : v_(p) {
        if (p.k < 1) throw bad_parameter("ConwayVariant: k must be >= 1");
        if (p.b < 1) throw bad_parameter("ConwayVariant: b must be >= 1");
        if (p.c < 1) throw bad_parameter("ConwayVariant: c must be >= 1");
    }
    explicit RecursionSpec(Conolly p) : v_(p) {}
    explicit RecursionSpec(GeneralConolly p) : v_(std::move(p)) {
        const auto& g = std::get<GeneralConolly>(v_);
        if (g.terms.empty()) throw bad_parameter("GeneralConolly: needs at least one summand");
        for (const auto& [a, b] : g.terms) {
            (void)a;
            if (b < 1) throw bad_parameter("GeneralConolly: every b_i must be >= 1");
        }
    }

    const Variant& value() const { return v_; }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&v_);
    }
    template <class T>
    bool is() const {
        return std::holds_alternative<T>(v_);
    }

    // Fewest initial conditions under which every argument of the first
    // recursive term is an already-supplied index.
    std::size_t min_initial_conditions() const {
        return std::visit(
            [](const auto& p) -> std::size_t {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, Conway>) {
                    return static_cast<std::size_t>(p.b);
                } else if constexpr (std::is_same_v<T, ConwayVariant>) {
                    return static_cast<std::size_t>(std::max(p.b, p.c));
                } else if constexpr (std::is_same_v<T, Conolly>) {
                    return 3;
                } else {
                    std::uint64_t m = 1;
                    for (const auto& [a, b] : p.terms) {
                        (void)a;
                        m = std::max(m, b);
                    }
                    return static_cast<std::size_t>(m);
                }
            },
            v_);
    }

    std::string describe() const {
        return std::visit(
            [](const auto& p) -> std::string {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, Conway>) {
                    return "conway(k=" + std::to_string(p.k) + ",a=" + std::to_string(p.a) +
                           ",b=" + std::to_string(p.b) + ")";
                } else if constexpr (std::is_same_v<T, ConwayVariant>) {
                    return "variant(k=" + std::to_string(p.k) + ",a=" + std::to_string(p.a) +
                           ",b=" + std::to_string(p.b) + ",c=" + std::to_string(p.c) + ")";
                } else if constexpr (std::is_same_v<T, Conolly>) {
                    return "conolly(s=" + std::to_string(p.s) + ")";
                } else {
                    std::string out = "general(";
                    for (std::size_t i = 0; i < p.terms.size(); ++i) {
                        if (i) out += ",";
                        out += std::to_string(p.terms[i].first) + ":" +
                               std::to_string(p.terms[i].second);
                    }
                    return out + ")";
                }
            },
            v_);
    }

private:
    Variant v_;
};

inline RecursionSpec conway_spec(unsigned k, std::uint64_t a, std::uint64_t b) {
    return RecursionSpec(Conway{k, a, b});
}
inline RecursionSpec variant_spec(unsigned k, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return RecursionSpec(ConwayVariant{k, a, b, c});
}
inline RecursionSpec conolly_spec(std::uint64_t s) { return RecursionSpec(Conolly{s}); }
inline RecursionSpec general_conolly_spec(
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms) {
    return RecursionSpec(GeneralConolly{std::move(terms)});
}

}  // namespace metafib
