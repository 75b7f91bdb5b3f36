#include "rademacher/word_paths.hpp"

#include "rademacher/error.hpp"

namespace rademacher {

Farey::Farey(Integer n, Integer d) : n_(std::move(n)), d_(std::move(d)) {
    if (n_ == 0 && d_ == 0) fail(ErrorCode::parse_error, "0/0 is not a Farey vertex");
    if (d_ < 0) {
        n_ = -n_;
        d_ = -d_;
    }
    if (d_ == 0) {
        n_ = 1;
        return;
    }
    Integer g = gcd(n_, d_);
    if (g != 1) {
        mpz_divexact(n_.get_mpz_t(), n_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), g.get_mpz_t());
    }
}

std::string Farey::to_string() const { return n_.get_str() + "/" + d_.get_str(); }

Farey Farey::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Farey(parse_integer(text));
    return Farey(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Farey& f) { return os << f.to_string(); }

std::ostream& operator<<(std::ostream& os, const EdgeWord& w) {
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    return os << ')';
}

bool is_edge(const Farey& u, const Farey& v) {
    Integer det = u.num() * v.den() - v.num() * u.den();
    return det == 1 || det == -1;
}

UnimodularMatrix reconstruct(const EdgeWord& w) {
    UnimodularMatrix product = UnimodularMatrix::S();
    for (const Integer& a : w.exponents) product = product * UnimodularMatrix::turn(a);
    return product;
}

namespace {

// Rewrites that preserve the PSL2 class of the word:
//   (.., x, 0, y, ..) -> (.., x + y, ..)          since S^2 = -I
//   (.., x, 0)        -> (.., x - 1, -1, -1)       since T = +-S T^-1 S T^-1 S
//   (0, y, ..)        -> (-1, -1, y - 1, ..)       the mirror image
// applied until no zero is left, except in the word (0).
void eliminate_zeros(std::vector<Integer>& e) {
    for (int guard = 0;; ++guard) {
        if (guard > 1'000'000) fail(ErrorCode::internal_error, "zero elimination did not terminate");
        bool changed = false;
        for (std::size_t i = 1; i + 1 < e.size(); ++i) {
            if (e[i] != 0) continue;
            e[i - 1] += e[i + 1];
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(i), e.begin() + static_cast<std::ptrdiff_t>(i + 2));
            changed = true;
            break;
        }
        if (changed) continue;
        if (e.size() >= 2 && e.back() == 0) {
            e.back() = -1;
            e[e.size() - 2] -= 1;
            e.emplace_back(-1);
            continue;
        }
        if (e.size() >= 2 && e.front() == 0) {
            e[1] -= 1;
            e.front() = -1;
            e.insert(e.begin(), Integer(-1));
            continue;
        }
        return;
    }
}

}  // namespace

EdgeWord decompose(const UnimodularMatrix& g) {
    // g = S * C, and C is peeled from the left one letter T^a S = (a, -1; 1, 0)
    // at a time; a = floor(C.a / C.c) shrinks |C.c| strictly.
    UnimodularMatrix rest = UnimodularMatrix::S().inverse() * g;
    std::vector<Integer> exps;
    while (rest.c() != 0) {
        Integer a = floor_div(rest.a(), rest.c());
        rest = UnimodularMatrix::turn(a).inverse() * rest;
        exps.push_back(std::move(a));
    }
    // rest = +-T^m, closed as (T^m S)(T^0 S).
    Integer m = rest.a() * rest.b();
    if (m != 0) {
        exps.push_back(std::move(m));
        exps.emplace_back(0);
    }
    eliminate_zeros(exps);
    EdgeWord word(std::move(exps));
    if (!psl_eq(reconstruct(word), g)) fail(ErrorCode::internal_error, "decompose produced a wrong word");
    return word;
}

std::vector<OrientedVertex> oriented_endpoints(const EdgeWord& w) {
    // Column (a, c) of each partial product S(T^{a1}S)...(T^{aj}S) is the
    // newest vertex; consecutive columns have determinant exactly 1.
    std::vector<OrientedVertex> out;
    out.reserve(w.size() + 2);
    out.push_back({1, 0});
    UnimodularMatrix product = UnimodularMatrix::S();
    out.push_back({product.a(), product.c()});
    for (const Integer& a : w.exponents) {
        product = product * UnimodularMatrix::turn(a);
        out.push_back({product.a(), product.c()});
    }
    return out;
}

std::vector<Farey> endpoints(const EdgeWord& w) {
    std::vector<Farey> out;
    out.reserve(w.size() + 2);
    for (auto& v : oriented_endpoints(w)) out.emplace_back(std::move(v.n), std::move(v.d));
    return out;
}

EdgeWord turns_from_endpoints(std::span<const Farey> points) {
    if (points.size() < 2)
        fail(ErrorCode::precondition_violation, "an edge path needs at least two vertices");
    if (!points[0].is_infinity() || points[1] != Farey(0))
        fail(ErrorCode::wrong_base_edge,
             "path must start with the base edge 1/0 -> 0/1, got " + points[0].to_string() + " -> " +
                 points[1].to_string());
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (!is_edge(points[i], points[i + 1]))
            fail(ErrorCode::not_an_edge, points[i].to_string() + " and " + points[i + 1].to_string() +
                                             " (positions " + std::to_string(i) + ", " +
                                             std::to_string(i + 1) + ") are not joined by an edge");

    // Re-sign each vertex so that n_j d_{j+1} - n_{j+1} d_j = 1. Then
    // v_{j+1} = a_j v_j - v_{j-1}, hence a_j = n_{j-1} d_{j+1} - n_{j+1} d_{j-1}
    // with its sign (the magnitude is the same for any choice of signs).
    std::vector<OrientedVertex> oriented;
    oriented.reserve(points.size());
    oriented.push_back({1, 0});
    oriented.push_back({0, 1});
    std::vector<Integer> exps;
    exps.reserve(points.size() - 2);
    for (std::size_t i = 2; i < points.size(); ++i) {
        const OrientedVertex& prev = oriented[i - 1];
        OrientedVertex next{points[i].num(), points[i].den()};
        if (prev.n * next.d - next.n * prev.d != 1) {
            next.n = -next.n;
            next.d = -next.d;
        }
        const OrientedVertex& before = oriented[i - 2];
        exps.push_back(before.n * next.d - next.n * before.d);
        oriented.push_back(std::move(next));
    }
    return EdgeWord(std::move(exps));
}

}  // namespace rademacher
