#include "chevcomm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chevcomm {

namespace {

constexpr int kMaxRank = 8;

std::vector<int> scaled_sum(int i, const std::vector<int>& x, int j, const std::vector<int>& y) {
  std::vector<int> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = i * x[k] + j * y[k];
  return out;
}

std::vector<int> unit(std::size_t dim, std::size_t k, int scale = 1) {
  std::vector<int> v(dim, 0);
  v[k] = scale;
  return v;
}

// Rank of a small integer matrix by fraction-free elimination.
int matrix_rank(std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const long long f = rows[r][c];
      const long long p = rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * p - rows[rank][k] * f;
    }
    ++rank;
  }
  return rank;
}

std::string coords_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

SystemLabel SystemLabel::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::toupper(ch)));
  }
  if (s.size() < 2) throw std::invalid_argument("bad root system label '" + std::string(text) + "'");
  const char family = s[0];
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad root system label '" + std::string(text) + "'");
  }
  switch (family) {
    case 'A':
    case 'C':
      if (rank < 2 || rank > kMaxRank) {
        throw std::invalid_argument("rank of '" + std::string(text) + "' must be in [2, " +
                                    std::to_string(kMaxRank) + "]");
      }
      return SystemLabel{family == 'A' ? Family::A : Family::C, rank};
    case 'G':
      if (rank != 2) throw std::invalid_argument("G only exists in rank 2");
      return SystemLabel{Family::G, 2};
    case 'B':
    case 'D':
    case 'E':
    case 'F':
      throw std::invalid_argument("type " + std::string(text) +
                                  " is not built: every computation reduces to rank-2 subsystems of type "
                                  "A2, C2 or G2, which are covered by A_l, C_l and G2");
    default:
      throw std::invalid_argument("unknown root system label '" + std::string(text) + "'");
  }
}

std::string SystemLabel::str() const {
  const char f = family == Family::A ? 'A' : family == Family::C ? 'C' : 'G';
  return std::string(1, f) + std::to_string(rank);
}

std::string Root::str() const { return coords_str(coords) + (is_long() ? " long" : " short"); }

RootSystem::RootSystem(SystemLabel label) : label_(label) {
  const int l = label.rank;
  std::vector<std::vector<int>> raw;
  std::vector<std::vector<int>> fund;
  switch (label.family) {
    case Family::A: {
      ambient_ = static_cast<std::size_t>(l + 1);
      for (std::size_t i = 0; i < ambient_; ++i) {
        for (std::size_t j = 0; j < ambient_; ++j) {
          if (i != j) raw.push_back(scaled_sum(1, unit(ambient_, i), -1, unit(ambient_, j)));
        }
      }
      for (std::size_t i = 0; i + 1 < ambient_; ++i) fund.push_back(scaled_sum(1, unit(ambient_, i), -1, unit(ambient_, i + 1)));
      break;
    }
    case Family::C: {
      ambient_ = static_cast<std::size_t>(l);
      for (std::size_t i = 0; i < ambient_; ++i) {
        raw.push_back(unit(ambient_, i, 2));
        raw.push_back(unit(ambient_, i, -2));
        for (std::size_t j = i + 1; j < ambient_; ++j) {
          for (int si : {1, -1}) {
            for (int sj : {1, -1}) raw.push_back(scaled_sum(si, unit(ambient_, i), sj, unit(ambient_, j)));
          }
        }
      }
      for (std::size_t i = 0; i + 1 < ambient_; ++i) fund.push_back(scaled_sum(1, unit(ambient_, i), -1, unit(ambient_, i + 1)));
      fund.push_back(unit(ambient_, ambient_ - 1, 2));
      break;
    }
    case Family::G: {
      ambient_ = 3;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          raw.push_back(scaled_sum(1, unit(3, i), -1, unit(3, j)));
        }
        std::vector<int> v(3, -1);
        v[i] = 2;
        raw.push_back(v);
        raw.push_back(scaled_sum(-1, v, 0, v));
      }
      fund.push_back({1, -1, 0});
      fund.push_back({-2, 1, 1});
      break;
    }
  }

  for (const auto& r : raw) long_norm_ = std::max(long_norm_, inner(r, r));
  std::sort(raw.begin(), raw.end());

  // Positive roots and their fundamental coefficients, grown from the
  // fundamentals by adding fundamentals.
  std::map<std::vector<int>, std::vector<int>> coeff;
  std::vector<std::vector<int>> frontier;
  for (std::size_t k = 0; k < fund.size(); ++k) {
    std::vector<int> c(fund.size(), 0);
    c[k] = 1;
    coeff[fund[k]] = c;
    frontier.push_back(fund[k]);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (std::size_t k = 0; k < fund.size(); ++k) {
        auto q = scaled_sum(1, p, 1, fund[k]);
        if (!std::binary_search(raw.begin(), raw.end(), q) || coeff.count(q)) continue;
        auto c = coeff[p];
        c[k] += 1;
        coeff[q] = c;
        next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  if (2 * coeff.size() != raw.size()) throw std::logic_error("positive system construction failed for " + label.str());

  std::vector<std::pair<std::vector<int>, std::vector<int>>> pos(coeff.begin(), coeff.end());
  auto height_of = [](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::stable_sort(pos.begin(), pos.end(), [&](const auto& x, const auto& y) {
    const int hx = height_of(x.second), hy = height_of(y.second);
    if (hx != hy) return hx < hy;
    return x.first > y.first;
  });
  for (const auto& [v, c] : pos) {
    roots_.push_back(make_root(v));
    coefficients_.push_back(c);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    roots_.push_back(make_root(scaled_sum(-1, pos[k].first, 0, pos[k].first)));
    auto c = pos[k].second;
    for (int& x : c) x = -x;
    coefficients_.push_back(c);
  }
  for (const auto& f : fund) fundamentals_.push_back(make_root(f));
}

Root RootSystem::make_root(std::vector<int> coords) const {
  Root r;
  const int norm = inner(coords, coords);
  r.coords = std::move(coords);
  r.length = (label_.family == Family::A || norm == long_norm_) ? LengthClass::Long : LengthClass::Short;
  return r;
}

std::vector<Root> RootSystem::positives() const {
  return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(roots_.size() / 2)};
}

std::optional<std::size_t> RootSystem::index_of(const std::vector<int>& coords) const {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].coords == coords) return i;
  }
  return std::nullopt;
}

std::size_t RootSystem::index_of(const Root& root) const {
  auto idx = index_of(root.coords);
  if (!idx) throw std::invalid_argument(coords_str(root.coords) + " is not a root of " + label_.str());
  return *idx;
}

const Root& RootSystem::root(const std::vector<int>& coords) const {
  auto idx = index_of(coords);
  if (!idx) throw std::invalid_argument(coords_str(coords) + " is not a root of " + label_.str());
  return roots_[*idx];
}

Root RootSystem::negate(const Root& root) const {
  return this->root(scaled_sum(-1, root.coords, 0, root.coords));
}

int RootSystem::inner(const std::vector<int>& x, const std::vector<int>& y) const {
  if (x.size() != y.size()) throw std::invalid_argument("inner product of vectors of different length");
  int s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

bool RootSystem::is_positive(const Root& root) const { return index_of(root) < roots_.size() / 2; }

std::vector<int> RootSystem::fundamental_coefficients(const Root& root) const {
  return coefficients_[index_of(root)];
}

int RootSystem::height(const Root& root) const {
  int h = 0;
  for (int c : fundamental_coefficients(root)) h += c;
  return h;
}

bool RootSystem::proportional(const Root& alpha, const Root& beta) const {
  std::vector<std::vector<long long>> rows(2);
  for (int c : alpha.coords) rows[0].push_back(c);
  for (int c : beta.coords) rows[1].push_back(c);
  return matrix_rank(rows) < 2;
}

std::optional<Root> RootSystem::add_roots(const Root& alpha, const Root& beta) const {
  auto idx = index_of(scaled_sum(1, alpha.coords, 1, beta.coords));
  if (!idx) return std::nullopt;
  return roots_[*idx];
}

std::vector<StringTerm> RootSystem::root_string(const Root& alpha, const Root& beta) const {
  index_of(alpha);
  index_of(beta);
  if (proportional(alpha, beta)) {
    throw std::invalid_argument("root_string needs non-proportional roots, got " + alpha.str() + " and " + beta.str());
  }
  std::vector<StringTerm> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      auto idx = index_of(scaled_sum(i, alpha.coords, j, beta.coords));
      if (idx) out.push_back({i, j, roots_[*idx]});
    }
  }
  std::sort(out.begin(), out.end(), [](const StringTerm& x, const StringTerm& y) {
    if (x.i + x.j != y.i + y.j) return x.i + x.j < y.i + y.j;
    return x.i > y.i;
  });
  return out;
}

Root RootSystem::reflect(const Root& root, int r) const {
  if (r < 1 || r > rank()) throw std::out_of_range("fundamental index " + std::to_string(r) + " out of range");
  const auto& a = fundamentals_[static_cast<std::size_t>(r - 1)].coords;
  const int k = 2 * inner(root.coords, a) / inner(a, a);
  return this->root(scaled_sum(1, root.coords, -k, a));
}

Rank2Embedding RootSystem::embed_rank2(const Root& alpha, const Root& beta) const {
  index_of(alpha);
  index_of(beta);
  if (proportional(alpha, beta)) {
    throw std::invalid_argument("embed_rank2 needs non-proportional roots, got " + alpha.str() + " and " + beta.str());
  }
  // The subsystem is Phi intersected with the integer span of alpha and beta,
  // so two long roots of G2 give A2 and two long roots of C2 give A1xA1.
  std::size_t ci = 0, cj = 1;
  long long det = 0;
  for (std::size_t i = 0; i < ambient_ && det == 0; ++i) {
    for (std::size_t j = i + 1; j < ambient_ && det == 0; ++j) {
      det = 1LL * alpha.coords[i] * beta.coords[j] - 1LL * alpha.coords[j] * beta.coords[i];
      ci = i;
      cj = j;
    }
  }
  Rank2Embedding out;
  for (const auto& r : roots_) {
    const long long pn = 1LL * r.coords[ci] * beta.coords[cj] - 1LL * r.coords[cj] * beta.coords[ci];
    const long long qn = 1LL * alpha.coords[ci] * r.coords[cj] - 1LL * alpha.coords[cj] * r.coords[ci];
    if (pn % det != 0 || qn % det != 0) continue;
    if (scaled_sum(static_cast<int>(pn / det), alpha.coords, static_cast<int>(qn / det), beta.coords) == r.coords) {
      out.roots.push_back(r);
    }
  }
  switch (out.roots.size()) {
    case 4: out.type = "A1xA1"; break;
    case 6: out.type = "A2"; break;
    case 8: out.type = "C2"; break;
    case 12: out.type = "G2"; break;
    default: throw std::logic_error("rank-2 subsystem of unexpected size " + std::to_string(out.roots.size()));
  }

  std::vector<Root> pos;
  for (const auto& r : out.roots) {
    if (is_positive(r)) pos.push_back(r);
  }
  std::vector<Root> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& p : pos) {
      for (const auto& q : pos) {
        if (scaled_sum(1, p.coords, 1, q.coords) == r.coords) decomposable = true;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  if (simple.size() != 2) throw std::logic_error("rank-2 subsystem without two simple roots");
  out.first = simple[0];
  out.second = simple[1];

  auto solve = [&](const Root& target) {
    for (int p = -4; p <= 4; ++p) {
      for (int q = -4; q <= 4; ++q) {
        if (scaled_sum(p, out.first.coords, q, out.second.coords) == target.coords) return std::make_pair(p, q);
      }
    }
    throw std::logic_error("root outside its rank-2 subsystem lattice");
  };
  out.alpha_coords = solve(alpha);
  out.beta_coords = solve(beta);
  return out;
}

ParabolicData RootSystem::parabolic_data(int r) const {
  if (r < 1 || r > rank()) throw std::out_of_range("fundamental index " + std::to_string(r) + " out of range");
  const Root& a = fundamentals_[static_cast<std::size_t>(r - 1)];
  const Root na = negate(a);
  ParabolicData out{{}, {}, {a, na}};
  for (const auto& x : roots_) {
    if (x == a || x == na) continue;
    (is_positive(x) ? out.unipotent : out.opposite).push_back(x);
  }
  return out;
}

RootSystem build_root_system(const SystemLabel& label) { return RootSystem(label); }

}  // namespace chevcomm
