#include "rademacher/text_format.hpp"

#include <sstream>
#include <vector>

#include "rademacher/error.hpp"

namespace rademacher {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

IntMatrix2 parse_int_matrix(std::string_view text) {
    auto parts = split(text, ',');
    if (parts.size() != 4)
        fail(ErrorCode::parse_error, "matrix must be 'a,b,c,d', got '" + std::string(text) + "'");
    return {parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]), parse_integer(parts[3])};
}

UnimodularMatrix parse_matrix(std::string_view text) { return UnimodularMatrix(parse_int_matrix(text)); }

std::string format_matrix(const UnimodularMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

FrickeElement parse_fricke(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        fail(ErrorCode::parse_error, "Fricke element must be 'p:alpha,beta,gamma,delta', got '" +
                                         std::string(text) + "'");
    OddPrime p(parse_integer(text.substr(0, colon)));
    IntMatrix2 q = parse_int_matrix(text.substr(colon + 1));
    return FrickeElement::coset(p, q.m11, q.m12, q.m21, q.m22);
}

std::string format_fricke(const FrickeElement& e) {
    std::ostringstream os;
    os << e;
    return os.str();
}

EdgeWord parse_word(std::string_view text) {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    std::vector<Integer> exps;
    if (text.empty()) return EdgeWord(std::move(exps));
    for (std::string_view part : split(text, ',')) {
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        exps.push_back(parse_integer(part));
    }
    return EdgeWord(std::move(exps));
}

HPComplex parse_complex(std::string_view text, mpfr_prec_t bits) {
    auto parts = split(text, ',');
    if (parts.size() != 2) fail(ErrorCode::parse_error, "complex number must be 're,im', got '" + std::string(text) + "'");
    return HPComplex::from_rational(parse_rational(parts[0]), parse_rational(parts[1]), bits);
}

}  // namespace rademacher
