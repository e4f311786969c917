#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chevcomm/poly.hpp"
#include "chevcomm/rootsys.hpp"

namespace chevcomm {

/// Generator x_root(coef) with root given by its index in the system.
struct Token {
  std::size_t root = 0;
  MultiPoly coef;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Product of elementary generators, left to right. Formal commutators and
/// conjugates are expanded into tokens when the word is built.
struct Word {
  std::vector<Token> tokens;

  bool empty() const { return tokens.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

Word x_word(std::size_t root, MultiPoly coef);
Word operator*(const Word& u, const Word& v);
/// Reversed word with negated parameters.
Word inverse(const Word& w);
/// [u, v] = u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);
/// ^u v = u v u^-1
Word conjugate(const Word& u, const Word& v);
Word power(const Word& w, int k);

/// y_alpha(a, b) = [x_alpha(a), x_{-alpha}(b)]
Word y_word(const RootSystem& sys, std::size_t root, const MultiPoly& a, const MultiPoly& b);
/// z_alpha(a, c) = x_{-alpha}(c) x_alpha(a) x_{-alpha}(-c)
Word z_word(const RootSystem& sys, std::size_t root, const MultiPoly& a, const MultiPoly& c);

/// Substitutes variables in every coefficient.
Word substitute(const Word& w, const std::map<std::string, MultiPoly>& values);

using RootNames = std::map<std::string, std::vector<int>>;

/// a1..al for the fundamentals; for rank-2 systems also alpha and beta:
/// A2 alpha = a1, beta = a2; C2 alpha = long a2, beta = short a1;
/// G2 alpha = short a1, beta = long a2.
RootNames default_root_names(const RootSystem& sys);

/// "alpha+2beta", "-gamma", "3a1+2a2", "(1,-1,0)". Throws when the result is
/// not a root.
const Root& parse_root(std::string_view text, const RootSystem& sys, const RootNames& names);

/// Word expressions:
///   x[root](p)  y[root](p,q)  z[root](p,q)  [u,v]  ^{u}v  inv(u)  (u)^k  e
/// with juxtaposition or '*' for products and polynomial parameters p, q.
Word parse_word(std::string_view text, const RootSystem& sys, const RootNames& names);

/// Replayable rendering using coordinate roots, e.g. "x[(1,-1,0)](a*b) x[(0,1,-1)](-c)".
std::string render_word(const Word& w, const RootSystem& sys);

}  // namespace chevcomm
