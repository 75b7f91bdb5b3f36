#pragma once

#include <string>
#include <string_view>

#include "rademacher/fricke_group.hpp"
#include "rademacher/hp_real.hpp"
#include "rademacher/word_paths.hpp"

namespace rademacher {

// "a,b,c,d": four signed decimal integers, no spaces.
IntMatrix2 parse_int_matrix(std::string_view text);
UnimodularMatrix parse_matrix(std::string_view text);
std::string format_matrix(const UnimodularMatrix& m);

// "p:alpha,beta,gamma,delta" for a Fricke-coset element.
FrickeElement parse_fricke(std::string_view text);
std::string format_fricke(const FrickeElement& e);

// "a1,a2,..." or the JSON array form "[a1,a2,...]"; "" and "[]" are empty.
EdgeWord parse_word(std::string_view text);

// "re,im", each part an exact decimal or fraction.
HPComplex parse_complex(std::string_view text, mpfr_prec_t bits);

}  // namespace rademacher
