#pragma once

// Turn words S(T^{a1} S)...(T^{ak} S), the based edge paths they describe in
// the Farey triangulation, and conversions between the two and PSL2(Z).

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rademacher/matrix.hpp"

namespace rademacher {

// Vertex n/d of the Farey triangulation, stored reduced with d >= 0. The
// point at infinity is always 1/0.
class Farey {
public:
    Farey(Integer n, Integer d);  // reduces; throws parse_error for 0/0
    explicit Farey(const Integer& n) : Farey(n, 1) {}

    static Farey infinity() { return Farey(1, 0); }

    const Integer& num() const noexcept { return n_; }
    const Integer& den() const noexcept { return d_; }
    bool is_infinity() const noexcept { return d_ == 0; }

    std::string to_string() const;
    static Farey parse(std::string_view text);  // "n/d", "n", "1/0", "-1/0"

    friend bool operator==(const Farey&, const Farey&) = default;

private:
    Integer n_, d_;
};

std::ostream& operator<<(std::ostream& os, const Farey& f);

// Exponents (a1, ..., ak) of the word S(T^{a1} S)...(T^{ak} S).
struct EdgeWord {
    std::vector<Integer> exponents;

    EdgeWord() = default;
    explicit EdgeWord(std::vector<Integer> e) : exponents(std::move(e)) {}
    EdgeWord(std::initializer_list<long> e) {
        exponents.reserve(e.size());
        for (long x : e) exponents.emplace_back(x);
    }

    std::size_t size() const noexcept { return exponents.size(); }
    bool empty() const noexcept { return exponents.empty(); }
    const Integer& operator[](std::size_t i) const { return exponents[i]; }

    friend bool operator==(const EdgeWord&, const EdgeWord&) = default;
};

std::ostream& operator<<(std::ostream& os, const EdgeWord& w);

// n1 d2 - n2 d1 = +-1.
bool is_edge(const Farey& u, const Farey& v);

// S(T^{a1} S)...(T^{ak} S); S for the empty word.
UnimodularMatrix reconstruct(const EdgeWord& w);

// A word w with psl_eq(reconstruct(w), g). Zero exponents appear only in the
// one-letter word (0) for g = +-I.
EdgeWord decompose(const UnimodularMatrix& g);

// Signed representative (n, d) of a path vertex.
struct OrientedVertex {
    Integer n, d;
    friend bool operator==(const OrientedVertex&, const OrientedVertex&) = default;
};

// Path vertices with signs chosen so consecutive vertices satisfy
// n_j d_{j+1} - n_{j+1} d_j = 1, starting (1,0), (0,1).
std::vector<OrientedVertex> oriented_endpoints(const EdgeWord& w);

// The k + 2 path vertices 1/0, 0/1, p1, ..., pk in reduced form.
std::vector<Farey> endpoints(const EdgeWord& w);

// Inverse of endpoints. Throws wrong_base_edge unless the list starts 1/0, 0/1,
// not_an_edge if a consecutive pair is not joined in the triangulation, and
// precondition_violation for fewer than two vertices.
EdgeWord turns_from_endpoints(std::span<const Farey> points);

}  // namespace rademacher
