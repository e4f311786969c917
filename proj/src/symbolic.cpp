#include "chevcomm/symbolic.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace chevcomm {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly(1);
  return m;
}

bool PolyMatrix::is_identity() const { return *this == identity(n_); }

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = x.n_;
  PolyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const MultiPoly& v = x(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const MultiPoly& w = y(k, j);
        if (!w.is_zero()) out(i, j) += v * w;
      }
    }
  }
  return out;
}

PolyMatrix unipotent(const ChevRep& rep, std::size_t root, const MultiPoly& t) {
  const auto& terms = rep.exp_terms(root);
  const std::size_t n = rep.dimension();
  PolyMatrix m = PolyMatrix::identity(n);
  MultiPoly tk(1);
  for (std::size_t k = 1; k < terms.size(); ++k) {
    tk = tk * t;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const long long c = terms[k](i, j);
        if (c != 0) m(i, j) += tk * MultiPoly(c);
      }
    }
  }
  return m;
}

PolyMatrix evaluate(const ChevRep& rep, const Word& w) {
  PolyMatrix m = PolyMatrix::identity(rep.dimension());
  for (const auto& t : w.tokens) m = m * unipotent(rep, t.root, t.coef);
  return m;
}

std::string Mismatch::str() const {
  std::ostringstream os;
  os << "entry (" << row + 1 << "," << col + 1 << "): lhs = " << lhs.str() << ", rhs = " << rhs.str();
  return os.str();
}

IdentityCheck compare(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  IdentityCheck out;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      if (!(lhs(i, j) == rhs(i, j))) {
        out.equal = false;
        out.witness = Mismatch{i, j, lhs(i, j), rhs(i, j)};
        return out;
      }
    }
  }
  return out;
}

IdentityCheck verify_identity(const ChevRep& rep, const Word& lhs, const Word& rhs) {
  return compare(evaluate(rep, lhs), evaluate(rep, rhs));
}

std::vector<StructureConstant> pair_constants(const ChevRep& rep, std::size_t alpha, std::size_t beta) {
  const RootSystem& sys = rep.system();
  const MultiPoly a = MultiPoly::variable("a");
  const MultiPoly b = MultiPoly::variable("b");
  PolyMatrix m = evaluate(rep, commutator(x_word(alpha, a), x_word(beta, b)));
  const std::size_t n = rep.dimension();

  std::vector<StructureConstant> out;
  for (const auto& term : sys.root_string(sys.root(alpha), sys.root(beta))) {
    const std::size_t gamma = sys.index_of(term.root);
    const IntMatrix& e = rep.pattern(gamma);
    const std::map<std::string, unsigned> mono{{"a", static_cast<unsigned>(term.i)},
                                               {"b", static_cast<unsigned>(term.j)}};
    // The bidegree (i, j) part of the remaining product is N * e_gamma: any
    // product of two or more remaining factors has higher total degree.
    std::optional<mpz_class> value;
    for (std::size_t r = 0; r < n && !value; ++r) {
      for (std::size_t c = 0; c < n && !value; ++c) {
        if (e(r, c) == 0) continue;
        const mpz_class coef = m(r, c).coefficient(mono);
        const mpz_class ent(static_cast<long>(e(r, c)));
        if (coef % ent != 0) break;
        value = mpz_class(coef / ent);
      }
    }
    if (!value) throw std::logic_error("cannot read constant for " + term.root.str());
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (m(r, c).coefficient(mono) != *value * mpz_class(static_cast<long>(e(r, c)))) {
          throw std::logic_error("commutator of " + sys.root(alpha).str() + " and " + sys.root(beta).str() +
                                 " is not a product of root elements at " + term.root.str());
        }
      }
    }
    const long long v = value->get_si();
    out.push_back({alpha, beta, term.i, term.j, gamma, v});
    const MultiPoly param = MultiPoly(-v) * a.pow(static_cast<unsigned>(term.i)) * b.pow(static_cast<unsigned>(term.j));
    m = unipotent(rep, gamma, param) * m;
  }
  if (!m.is_identity()) {
    throw std::logic_error("commutator of " + sys.root(alpha).str() + " and " + sys.root(beta).str() +
                           " has terms outside its root string");
  }
  return out;
}

std::vector<StructureConstant> structure_constants(const ChevRep& rep) {
  const RootSystem& sys = rep.system();
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = 0; j < sys.size(); ++j) {
      if (sys.proportional(sys.root(i), sys.root(j))) continue;
      auto part = pair_constants(rep, i, j);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

Word chevalley_expand(const ChevRep& rep, std::size_t alpha, std::size_t beta, const MultiPoly& a,
                      const MultiPoly& b) {
  Word w;
  for (const auto& c : pair_constants(rep, alpha, beta)) {
    w.tokens.push_back(
        Token{c.root, MultiPoly(c.value) * a.pow(static_cast<unsigned>(c.i)) * b.pow(static_cast<unsigned>(c.j))});
  }
  return w;
}

}  // namespace chevcomm
