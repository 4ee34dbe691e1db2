#pragma once

#include <memory>
#include <string>

#include "resolve/complex.hpp"
#include "resolve/monomial.hpp"

namespace fixtures {

inline resolve::MonomialIdeal ideal(const std::string& text) { return resolve::parse_ideal(text); }

inline resolve::MonomialIdeal example_32() { return ideal("vars: a b c\na\nb^2\nc^3\n"); }
inline resolve::MonomialIdeal example_33() { return ideal("vars: a b\na^2\na*b\nb^3\n"); }
inline resolve::MonomialIdeal example_53() { return ideal("vars: a b c\na*b\na*c\nb*c\n"); }
inline resolve::MonomialIdeal linear_abc() { return ideal("vars: a b c\na\nb\nc\n"); }

inline resolve::Monomial mono(const resolve::MonomialIdeal& i, const std::string& text) {
    return resolve::parse_monomial(text, i.vars());
}

inline std::shared_ptr<const resolve::MonomialIdeal> share(const resolve::MonomialIdeal& i) {
    return std::make_shared<const resolve::MonomialIdeal>(i);
}

}  // namespace fixtures
