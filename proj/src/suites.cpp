#include "chevcomm/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>

#include "chevcomm/subgroups.hpp"

namespace chevcomm {

namespace {

std::string coords(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < r.coords.size(); ++k) os << (k ? "," : "") << r.coords[k];
  os << ')';
  return os.str();
}

/// "(9)" for 9Z/27, "(2,0)" for 2Z/4 x 0 in a product ring.
std::string level_string(const Ideal& ideal) {
  const auto& m = ideal.ring().moduli();
  std::ostringstream os;
  os << '(';
  for (std::size_t c = 0; c < m.size(); ++c) {
    const int d = ideal.component_levels()[c];
    os << (c ? "," : "") << (d == m[c] ? 0 : d);
  }
  os << ')';
  return os.str();
}

/// Positions of ideal elements, indexed by ring index (-1 outside the ideal).
std::vector<int> position_table(const Ideal& ideal) {
  const FiniteRing& ring = ideal.ring();
  std::vector<int> pos(ring.size(), -1);
  for (std::size_t i = 0; i < ideal.elements().size(); ++i) {
    pos[ring.index_of(ideal.elements()[i])] = static_cast<int>(i);
  }
  return pos;
}

/// y_alpha(a, b) for every root and every a in A, b in B.
class SymbolTable {
 public:
  SymbolTable(const Ambient& amb, const Ideal& a, const Ideal& b)
      : amb_(amb), a_(a), b_(b), pos_a_(position_table(a)), pos_b_(position_table(b)) {
    const std::size_t roots = amb.system().size();
    values_.resize(roots * a.size() * b.size());
    const long long total = static_cast<long long>(values_.size());
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < total; ++k) {
      const std::size_t idx = static_cast<std::size_t>(k);
      const std::size_t r = idx / (a.size() * b.size());
      const std::size_t i = idx / b.size() % a.size();
      const std::size_t j = idx % b.size();
      values_[idx] = amb.y(r, a.elements()[i], b.elements()[j]);
    }
  }

  const GroupElem& operator()(std::size_t root, const RingElem& x, const RingElem& y) const {
    const int i = pos_a_.at(amb_.ring().index_of(x));
    const int j = pos_b_.at(amb_.ring().index_of(y));
    if (i < 0 || j < 0) throw std::logic_error("symbol parameter outside its ideal");
    return values_[(root * a_.size() + static_cast<std::size_t>(i)) * b_.size() + static_cast<std::size_t>(j)];
  }

 private:
  const Ambient& amb_;
  const Ideal& a_;
  const Ideal& b_;
  std::vector<int> pos_a_;
  std::vector<int> pos_b_;
  std::vector<GroupElem> values_;
};

const std::vector<BankResult>& bank_results(const std::string& path, const std::vector<BankEntry>& entries,
                                            bool parallel) {
  static std::mutex mu;
  static std::map<std::string, std::vector<BankResult>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(path);
  if (it == cache.end()) it = cache.emplace(path, verify_bank(entries, parallel)).first;
  return it->second;
}

}  // namespace

Workbench::Workbench(Scenario scenario)
    : scenario_(std::move(scenario)),
      amb_(scenario_.system, scenario_.ring()),
      a_(scenario_.a(amb_.ring())),
      b_(scenario_.b(amb_.ring())),
      ab_(ideal_product(a_, b_)),
      star_(check_condition_star(amb_.ring(), scenario_.system)) {}

ClosureOptions Workbench::closure_options() const {
  ClosureOptions o;
  o.budget = scenario_.budget;
  o.parallel = scenario_.parallel;
  return o;
}

MixedOptions Workbench::mixed_options(std::uint64_t salt) const {
  MixedOptions o;
  o.closure = closure_options();
  o.samples = scenario_.samples.commutators;
  o.word_length = scenario_.samples.word_length;
  o.seed = scenario_.seed ^ (0x9e3779b97f4a7c15ULL * salt);
  return o;
}

std::vector<RingElem> Workbench::c_values() const {
  std::vector<RingElem> all = amb_.ring().elements();
  const std::size_t want = scenario_.samples.c_values;
  if (want == 0 || want >= all.size()) return all;
  std::mt19937_64 rng(scenario_.seed + 17);
  std::shuffle(all.begin() + 2, all.end(), rng);  // keep 0 and 1
  all.resize(want);
  return all;
}

const EnumeratedSubgroup& Workbench::relative_ab() {
  if (!relative_ab_) relative_ab_ = std::make_unique<EnumeratedSubgroup>(relative_elementary(amb_, ab_, closure_options()));
  return *relative_ab_;
}

const EnumeratedSubgroup& Workbench::elementary_ab() {
  if (!elementary_ab_) {
    ClosureOptions o = closure_options();
    o.level = ab_;
    elementary_ab_ = std::make_unique<EnumeratedSubgroup>(elementary_subgroup(amb_, ab_, o));
  }
  return *elementary_ab_;
}

const EnumeratedSubgroup& Workbench::mixed_elementary() {
  if (!mixed_elementary_) {
    mixed_elementary_ = std::make_unique<EnumeratedSubgroup>(
        mixed_commutator(amb_, elementary_generators(amb_, a_), elementary_generators(amb_, b_), mixed_options(1)));
  }
  return *mixed_elementary_;
}

const EnumeratedSubgroup& Workbench::mixed_relative() {
  if (!mixed_relative_) {
    const auto cs = amb_.ring().elements();
    mixed_relative_ = std::make_unique<EnumeratedSubgroup>(
        mixed_commutator(amb_, z_generators(amb_, a_, cs), z_generators(amb_, b_, cs), mixed_options(2)));
  }
  return *mixed_relative_;
}

std::string Workbench::render(const TrackedWord& w) const {
  if (w.tokens.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.tokens.size(); ++k) {
    os << (k ? " " : "") << "x[" << coords(amb_.system().root(w.tokens[k].first)) << "]("
       << amb_.ring().format(w.tokens[k].second) << ')';
  }
  return os.str();
}

std::string Workbench::render_y(std::size_t root, const RingElem& a, const RingElem& b) const {
  return "y[" + coords(amb_.system().root(root)) + "](" + amb_.ring().format(a) + "," + amb_.ring().format(b) + ")";
}

TrackedWord Workbench::random_absolute_word(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, scenario_.samples.word_length));
  std::uniform_int_distribution<std::size_t> root(0, amb_.system().size() - 1);
  std::uniform_int_distribution<std::size_t> elem(0, amb_.ring().size() - 1);
  TrackedWord w;
  w.value = amb_.identity();
  const std::size_t n = len(rng);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = root(rng);
    const RingElem t = amb_.ring().element(elem(rng));
    w.tokens.emplace_back(r, t);
    w.value = amb_.mul(w.value, amb_.x(r, t));
  }
  return w;
}

bool Workbench::require_star(SuiteReport& rep) const {
  if (star_.holds) return true;
  rep.status = SuiteStatus::Skipped;
  rep.reason = "condition (*) fails: " + star_.diagnostic;
  return false;
}

bool Workbench::require_complete(SuiteReport& rep, const EnumeratedSubgroup& s, const std::string& what) const {
  rep.subgroup_orders[what] = s.size();
  if (s.complete()) return true;
  rep.status = SuiteStatus::Skipped;
  rep.reason = what + " exceeded the enumeration budget of " + std::to_string(scenario_.budget) + " elements";
  return false;
}

SuiteReport Workbench::identities() {
  SuiteReport rep;
  const std::string path = scenario_.bank_path.empty() ? default_bank_path() : scenario_.bank_path;
  if (bank_.empty()) bank_ = load_bank(path);
  const auto& results = bank_results(path, bank_, scenario_.parallel);
  std::size_t known_false = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const BankResult& r = results[i];
    const std::string label = "identity " + r.name + (r.expect_pass ? "" : " (known false)");
    if (!r.expect_pass && !r.check.equal) ++known_false;
    rep.record(r.ok(), label, r.lhs_word + " == " + r.rhs_word,
               r.check.equal ? "both sides agree" : r.check.witness.str());
  }
  std::size_t replayed = 0;
  for (std::size_t i = 0; i < bank_.size(); ++i) {
    if (!bank_[i].expect_pass) continue;
    const RingCheck rc =
        verify_entry_over_ring(bank_[i], amb_.ring(), scenario_.samples.ring_assignments, scenario_.seed + i);
    ++replayed;
    rep.record(rc.failures == 0, "identity " + bank_[i].name + " over " + amb_.ring().describe(),
               bank_[i].lhs + " == " + bank_[i].rhs, rc.witness);
  }
  rep.notes.push_back(std::to_string(results.size()) + " entries, " + std::to_string(known_false) +
                      " known-false forms confirmed false, " + std::to_string(replayed) + " replayed on " +
                      std::to_string(scenario_.samples.ring_assignments) + " assignments over " +
                      amb_.ring().describe());
  return rep;
}

SuiteReport Workbench::sandwich() {
  SuiteReport rep;
  const auto& rel = relative_ab();
  const auto& me = mixed_elementary();
  const auto& mr = mixed_relative();
  if (!require_complete(rep, rel, "E(R,AB)") || !require_complete(rep, me, "[E(A),E(B)]") ||
      !require_complete(rep, mr, "[E(R,A),E(R,B)]")) {
    return rep;
  }
  const auto& eab = elementary_ab();
  if (eab.complete()) {
    rep.subgroup_orders["E(AB)"] = eab.size();
    if (eab.size() != rel.size()) {
      rep.notes.push_back("E(AB) has " + std::to_string(eab.size()) + " elements, E(R,AB) has " +
                          std::to_string(rel.size()) + ": E(AB) is not normal here");
    }
  }
  rep.record(rel.subset_of(me), "E(R,AB) <= [E(A),E(B)]");
  rep.record(me.subset_of(mr), "[E(A),E(B)] <= [E(R,A),E(R,B)]");

  const auto& space = amb_.space();
  std::size_t escaped = 0;
  Mat first;
  for (std::size_t i = 0; i < mr.size(); ++i) {
    if (space.reduces_to_identity(mr.elements().at(i), ab_)) continue;
    if (escaped++ == 0) first = mr.elements().get(i);
  }
  rep.record(escaped == 0, "[E(R,A),E(R,B)] <= G(R,AB)", "",
             escaped ? std::to_string(escaped) + " elements outside, e.g. " + space.format(first) : "");

  std::mt19937_64 rng(scenario_.seed + 101);
  const auto ga = elementary_generators(amb_, a_);
  const auto gb = elementary_generators(amb_, b_);
  for (std::size_t k = 0; k < scenario_.samples.commutators; ++k) {
    const GroupElem x = random_word(amb_, ga, scenario_.samples.word_length, rng);
    const GroupElem y = random_word(amb_, gb, scenario_.samples.word_length, rng);
    const GroupElem c = amb_.commutator(x, y);
    rep.record(space.reduces_to_identity(c.mat, ab_), "sampled [x,y] in G(R,AB), x in E(A), y in E(B)", "",
               "[x,y] = " + space.format(c.mat));
  }
  if (ab_.is_zero()) {
    rep.notes.push_back("AB = 0: G(R,AB) is trivial, so every sampled commutator is the identity matrix");
  }
  return rep;
}

SuiteReport Workbench::generation() {
  SuiteReport rep;
  if (!require_star(rep)) return rep;
  const auto& mr = mixed_relative();
  if (!require_complete(rep, mr, "[E(R,A),E(R,B)]")) return rep;
  const Ideal products = ideal_from_generators(amb_.ring(), elementwise_products(a_, b_));
  auto gens = z_generators(amb_, products, amb_.ring().elements());
  const auto ys = y_generators(amb_, all_roots(amb_), a_, b_);
  gens.insert(gens.end(), ys.begin(), ys.end());
  const EnumeratedSubgroup h = closure(amb_.space(), gens, closure_options());
  if (!require_complete(rep, h, "<z(ab,c), y(a,b)>")) return rep;
  rep.record(h.same_set(mr), "<z_alpha(ab,c), y_alpha(a,b)> = [E(R,A),E(R,B)]", "",
             std::to_string(h.size()) + " vs " + std::to_string(mr.size()) + " elements");
  return rep;
}

SuiteReport Workbench::long_root_generation() {
  SuiteReport rep;
  if (!require_star(rep)) return rep;
  const auto& mr = mixed_relative();
  if (!require_complete(rep, mr, "[E(R,A),E(R,B)]")) return rep;
  const RootSystem& sys = amb_.system();

  std::size_t fixed = 0;
  if (scenario_.long_root.empty()) {
    for (const auto& f : sys.fundamentals()) {
      if (f.is_long()) {
        fixed = sys.index_of(f);
        break;
      }
    }
  } else {
    fixed = sys.index_of(parse_root(scenario_.long_root, sys, default_root_names(sys)));
  }
  if (!sys.root(fixed).is_long()) throw std::invalid_argument("long_root " + sys.root(fixed).str() + " is short");

  const Ideal products = ideal_from_generators(amb_.ring(), elementwise_products(a_, b_));
  EnumeratedSubgroup base = closure(amb_.space(), z_generators(amb_, products, amb_.ring().elements()), closure_options());
  if (!require_complete(rep, base, "<z(ab,c)>")) return rep;

  std::vector<std::size_t> order{fixed};
  for (std::size_t r = 0; r < sys.size(); ++r) {
    if (r != fixed && sys.root(r).is_long()) order.push_back(r);
  }
  std::size_t passed = 0;
  for (std::size_t r : order) {
    EnumeratedSubgroup h = base;
    h.add_generators(y_generators(amb_, {r}, a_, b_));
    const std::string label = "<z(ab,c), y_beta(a,b)> = [E(R,A),E(R,B)] for beta = " + coords(sys.root(r)) +
                              (r == fixed ? " (distinguished)" : "");
    if (!h.complete()) {
      rep.record(false, label, "", "enumeration exceeded the budget");
      continue;
    }
    const bool ok = h.same_set(mr);
    passed += ok ? 1 : 0;
    rep.record(ok, label, "", std::to_string(h.size()) + " vs " + std::to_string(mr.size()) + " elements");
  }
  rep.notes.push_back(std::to_string(passed) + " of " + std::to_string(order.size()) +
                      " long roots generate with z(ab,c)");
  return rep;
}

SuiteReport Workbench::commutator_equality() {
  SuiteReport rep;
  if (!require_star(rep)) return rep;
  const auto& me = mixed_elementary();
  const auto& mr = mixed_relative();
  if (!require_complete(rep, me, "[E(A),E(B)]") || !require_complete(rep, mr, "[E(R,A),E(R,B)]")) return rep;
  rep.record(me.same_set(mr), "[E(R,A),E(R,B)] = [E(A),E(B)]", "",
             std::to_string(mr.size()) + " vs " + std::to_string(me.size()) + " elements");
  return rep;
}

SuiteReport Workbench::centrality() {
  SuiteReport rep;
  if (!require_star(rep)) return rep;
  const auto& n = relative_ab();
  if (!require_complete(rep, n, "E(R,AB)")) return rep;
  const SymbolTable y(amb_, a_, b_);
  const std::size_t roots = amb_.system().size();
  std::mt19937_64 rng(scenario_.seed + 202);
  std::vector<char> ok(roots * a_.size() * b_.size());
  for (std::size_t k = 0; k < scenario_.samples.conjugators; ++k) {
    const TrackedWord x = random_absolute_word(rng);
    const long long total = static_cast<long long>(ok.size());
#pragma omp parallel for schedule(static) if (scenario_.parallel)
    for (long long t = 0; t < total; ++t) {
      const std::size_t idx = static_cast<std::size_t>(t);
      const std::size_t r = idx / (a_.size() * b_.size());
      const RingElem& av = a_.elements()[idx / b_.size() % a_.size()];
      const RingElem& bv = b_.elements()[idx % b_.size()];
      const GroupElem& s = y(r, av, bv);
      ok[idx] = congruent(amb_.space(), amb_.conjugate(x.value, s), s, n) ? 1 : 0;
    }
    for (std::size_t idx = 0; idx < ok.size(); ++idx) {
      if (ok[idx]) {
        rep.record(true, "");
        continue;
      }
      const std::size_t r = idx / (a_.size() * b_.size());
      const RingElem& av = a_.elements()[idx / b_.size() % a_.size()];
      const RingElem& bv = b_.elements()[idx % b_.size()];
      const std::string ys = render_y(r, av, bv);
      rep.record(false, "^x y == y mod E(R,AB)", "x = " + render(x) + "; y = " + ys, "^{x}" + ys + " (" + ys + ")^-1 not in E(R,AB)");
    }
  }
  if (ab_.is_zero()) rep.notes.push_back("AB = 0: congruences are exact matrix equalities");
  return rep;
}

SuiteReport Workbench::bilinearity() {
  SuiteReport rep;
  if (!require_star(rep)) return rep;
  const auto& n = relative_ab();
  if (!require_complete(rep, n, "E(R,AB)")) return rep;
  const FiniteRing& ring = amb_.ring();
  const SymbolTable y(amb_, a_, b_);
  const auto& sp = amb_.space();
  auto check = [&](const GroupElem& l, const GroupElem& r, const std::string& what, const std::string& words) {
    rep.record(congruent(sp, l, r, n), what, words);
  };
  const auto& as = a_.elements();
  const auto& bs = b_.elements();
  for (std::size_t r = 0; r < amb_.system().size(); ++r) {
    for (const auto& a1 : as) {
      for (const auto& a2 : as) {
        for (const auto& b : bs) {
          check(y(r, ring.add(a1, a2), b), amb_.mul(y(r, a1, b), y(r, a2, b)),
                "y(a1+a2,b) == y(a1,b) y(a2,b)", render_y(r, ring.add(a1, a2), b) + " vs " + render_y(r, a1, b) + " " + render_y(r, a2, b));
        }
      }
    }
    for (const auto& a : as) {
      for (const auto& b1 : bs) {
        for (const auto& b2 : bs) {
          check(y(r, a, ring.add(b1, b2)), amb_.mul(y(r, a, b1), y(r, a, b2)),
                "y(a,b1+b2) == y(a,b1) y(a,b2)", render_y(r, a, ring.add(b1, b2)) + " vs " + render_y(r, a, b1) + " " + render_y(r, a, b2));
        }
      }
    }
    for (const auto& a : as) {
      for (const auto& b : bs) {
        check(amb_.inverse(y(r, a, b)), y(r, ring.neg(a), b), "y(a,b)^-1 == y(-a,b)", render_y(r, a, b));
        check(y(r, ring.neg(a), b), y(r, a, ring.neg(b)), "y(-a,b) == y(a,-b)", render_y(r, a, b));
      }
    }
    for (const auto& a : as) {
      for (const auto& b1 : bs) {
        for (const auto& b2 : bs) {
          const RingElem ab1 = ring.mul(a, b1);
          rep.record(n.member(y(r, ab1, b2)), "y(a b1, b2) in E(R,AB)", render_y(r, ab1, b2));
        }
      }
    }
    for (const auto& a1 : as) {
      for (const auto& a2 : as) {
        for (const auto& b : bs) {
          const RingElem a2b = ring.mul(a2, b);
          rep.record(n.member(y(r, a1, a2b)), "y(a1, a2 b) in E(R,AB)", render_y(r, a1, a2b));
        }
      }
    }
  }
  if (ab_.is_zero()) rep.notes.push_back("AB = 0: congruences are exact matrix equalities");
  return rep;
}

SuiteReport Workbench::length_transfer() {
  SuiteReport rep;
  if (!require_star(rep)) return rep;
  const auto& n = relative_ab();
  if (!require_complete(rep, n, "E(R,AB)")) return rep;
  const RootSystem& sys = amb_.system();
  const SymbolTable y(amb_, a_, b_);
  const auto& sp = amb_.space();
  for (std::size_t r = 0; r < sys.size(); ++r) {
    for (std::size_t s = 0; s < sys.size(); ++s) {
      if (r == s || sys.root(r).length != sys.root(s).length) continue;
      for (const auto& a : a_.elements()) {
        for (const auto& b : b_.elements()) {
          rep.record(congruent(sp, y(r, a, b), y(s, a, b), n), "y_alpha(a,b) == y_beta(a,b), equal lengths",
                     render_y(r, a, b) + " vs " + render_y(s, a, b));
        }
      }
    }
  }
  if (sys.two_lengths()) {
    const int p = sys.label().family == Family::G ? 3 : 2;
    for (std::size_t r = 0; r < sys.size(); ++r) {
      if (sys.root(r).is_long()) continue;
      for (std::size_t s = 0; s < sys.size(); ++s) {
        if (!sys.root(s).is_long()) continue;
        for (const auto& a : a_.elements()) {
          for (const auto& b : b_.elements()) {
            rep.record(congruent(sp, y(r, a, b), amb_.power(y(s, a, b), p), n),
                       "y_short(a,b) == y_long(a,b)^" + std::to_string(p),
                       render_y(r, a, b) + " vs (" + render_y(s, a, b) + ")^" + std::to_string(p));
          }
        }
      }
    }
  }
  if (sys.label().family == Family::G) {
    // The long/short chain for G2 rests on bank identities; replay them here.
    const std::string path = scenario_.bank_path.empty() ? default_bank_path() : scenario_.bank_path;
    if (bank_.empty()) bank_ = load_bank(path);
    for (std::size_t i = 0; i < bank_.size(); ++i) {
      const auto& e = bank_[i];
      if (!e.expect_pass || SystemLabel::parse(e.system).family != Family::G) continue;
      const RingCheck rc = verify_entry_over_ring(e, amb_.ring(), scenario_.samples.ring_assignments, scenario_.seed + 31 * i);
      rep.record(rc.failures == 0, "G2 expansion " + e.name + " over " + amb_.ring().describe(), e.lhs + " == " + e.rhs,
                 rc.witness);
    }
  }
  if (ab_.is_zero()) rep.notes.push_back("AB = 0: congruences are exact matrix equalities");
  return rep;
}

SuiteReport Workbench::balancing() {
  SuiteReport rep;
  if (!require_star(rep)) return rep;
  const auto& n = relative_ab();
  if (!require_complete(rep, n, "E(R,AB)")) return rep;
  const RootSystem& sys = amb_.system();
  const FiniteRing& ring = amb_.ring();
  const SymbolTable y(amb_, a_, b_);
  const auto& sp = amb_.space();
  const auto cs = c_values();
  const bool type_c = sys.label().family == Family::C;
  std::size_t scanned = 0, counterexamples = 0;
  std::string first_counterexample;
  for (std::size_t r = 0; r < sys.size(); ++r) {
    const bool weak = type_c && sys.root(r).is_long();
    for (const auto& a : a_.elements()) {
      for (const auto& b : b_.elements()) {
        for (const auto& c : cs) {
          const RingElem ac = ring.mul(a, c), cb = ring.mul(c, b);
          const bool full = congruent(sp, y(r, ac, b), y(r, a, cb), n);
          if (!weak) {
            rep.record(full, "y(ac,b) == y(a,cb)", render_y(r, ac, b) + " vs " + render_y(r, a, cb));
            continue;
          }
          const RingElem c2 = ring.mul(c, c);
          const RingElem ac2 = ring.mul(a, c2), c2b = ring.mul(c2, b);
          rep.record(congruent(sp, y(r, ac2, b), y(r, a, c2b), n), "y(ac^2,b) == y(a,c^2 b), long root",
                     render_y(r, ac2, b) + " vs " + render_y(r, a, c2b));
          rep.record(congruent(sp, amb_.power(y(r, ac, b), 2), amb_.power(y(r, a, cb), 2), n),
                     "y(ac,b)^2 == y(a,cb)^2, long root",
                     "(" + render_y(r, ac, b) + ")^2 vs (" + render_y(r, a, cb) + ")^2");
          ++scanned;
          if (!full && counterexamples++ == 0) {
            first_counterexample = render_y(r, ac, b) + " vs " + render_y(r, a, cb);
          }
        }
      }
    }
  }
  if (type_c) {
    std::string note = "exploratory scan of y(ac,b) == y(a,cb) at long roots: " + std::to_string(counterexamples) +
                       " of " + std::to_string(scanned) + " grid points fail";
    if (counterexamples) note += ", first " + first_counterexample;
    rep.notes.push_back(note + " (not gating)");
  }
  if (cs.size() != ring.size()) rep.notes.push_back("c sampled: " + std::to_string(cs.size()) + " values");
  if (ab_.is_zero()) rep.notes.push_back("AB = 0: congruences are exact matrix equalities");
  return rep;
}

SuiteReport Workbench::levi() {
  SuiteReport rep;
  const RootSystem& sys = amb_.system();
  const FiniteRing& ring = amb_.ring();
  const auto& sp = amb_.space();
  std::mt19937_64 rng(scenario_.seed + 303);
  std::uniform_int_distribution<std::size_t> pick_a(0, a_.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, scenario_.samples.word_length));
  for (int r = 1; r <= sys.rank(); ++r) {
    const ParabolicData pd = sys.parabolic_data(r);
    const std::size_t plus = sys.index_of(pd.levi.first), minus = sys.index_of(pd.levi.second);
    for (const auto* side : {&pd.unipotent, &pd.opposite}) {
      const bool upper = side == &pd.unipotent;
      std::vector<std::size_t> idx;
      for (const auto& root : *side) idx.push_back(sys.index_of(root));
      const std::string name = std::string(upper ? "U" : "U-") + "_" + std::to_string(r) + "(AB)";
      const EnumeratedSubgroup u = closure(sp, root_generators(amb_, idx, ab_), closure_options());
      if (!require_complete(rep, u, name)) return rep;
      for (std::size_t k = 0; k < scenario_.samples.levi; ++k) {
        TrackedWord l;
        l.value = amb_.identity();
        const std::size_t n = len(rng);
        for (std::size_t t = 0; t < n; ++t) {
          const std::size_t root = (rng() & 1) ? plus : minus;
          const RingElem v = a_.elements()[pick_a(rng)];
          l.tokens.emplace_back(root, v);
          l.value = amb_.mul(l.value, amb_.x(root, v));
        }
        rep.record(sp.reduces_to_identity(l.value.mat, a_), "L_r(A) element in G(R,A)", render(l));
        for (std::size_t g : idx) {
          for (const auto& bv : b_.elements()) {
            const GroupElem c = amb_.commutator(l.value, amb_.x(g, bv));
            rep.record(u.member(c), "[L_" + std::to_string(r) + "(A), " + name.substr(0, name.size() - 4) + "(B)] <= " + name,
                       "[" + render(l) + ", x[" + coords(sys.root(g)) + "](" + ring.format(bv) + ")]");
          }
        }
      }
    }
  }
  return rep;
}

SuiteReport Workbench::stability() {
  SuiteReport rep;
  if (!require_star(rep)) return rep;
  const RootSystem& sys = amb_.system();
  if (sys.rank() < 3) {
    rep.status = SuiteStatus::Skipped;
    rep.reason = "needs rank at least 3 to embed a proper rank-2 subsystem";
    return rep;
  }
  const RootNames names = default_root_names(sys);
  const Root& r1 = parse_root(scenario_.stability_roots.empty() ? "a1" : scenario_.stability_roots[0], sys, names);
  const Root& r2 = parse_root(scenario_.stability_roots.empty() ? "a2" : scenario_.stability_roots[1], sys, names);
  const Rank2Embedding delta = sys.embed_rank2(r1, r2);
  bool long_a2 = delta.type == "A2";
  for (const auto& r : delta.roots) long_a2 = long_a2 && r.is_long();
  if (!long_a2 && delta.type != "C2") {
    rep.status = SuiteStatus::Skipped;
    rep.reason = "subsystem of type " + delta.type + " is neither A2 on long roots nor C2";
    return rep;
  }
  const auto& n = relative_ab();
  const auto& me = mixed_elementary();
  if (!require_complete(rep, n, "E(R,AB)") || !require_complete(rep, me, "[E(A),E(B)]")) return rep;
  std::vector<std::size_t> idx;
  for (const auto& r : delta.roots) idx.push_back(sys.index_of(r));
  EnumeratedSubgroup h(amb_.space(), closure_options());
  h.add_generators(n.generators());
  h.add_generators(y_generators(amb_, idx, a_, b_));
  if (!require_complete(rep, h, "<E(R,AB), y_Delta>")) return rep;
  rep.record(h.same_set(me), "<E(R,AB), y_Delta(a,b)> = [E(A),E(B)] for Delta of type " + delta.type, "",
             std::to_string(h.size()) + " vs " + std::to_string(me.size()) + " elements");
  rep.notes.push_back("Delta = " + delta.type + " spanned by " + coords(r1) + " and " + coords(r2));
  return rep;
}

SuiteReport Workbench::run_suite(const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  try {
    if (name == "identities") rep = identities();
    else if (name == "sandwich") rep = sandwich();
    else if (name == "generation") rep = generation();
    else if (name == "long_root_generation") rep = long_root_generation();
    else if (name == "commutator_equality") rep = commutator_equality();
    else if (name == "centrality") rep = centrality();
    else if (name == "bilinearity") rep = bilinearity();
    else if (name == "length_transfer") rep = length_transfer();
    else if (name == "balancing") rep = balancing();
    else if (name == "levi") rep = levi();
    else if (name == "stability") rep = stability();
    else throw std::invalid_argument("unknown suite '" + name + "'");
  } catch (const CorrectnessError& ex) {
    rep.status = SuiteStatus::Fail;
    rep.record(false, "internal consistency", "", ex.what());
  }
  rep.suite = name;
  rep.settle();
  rep.duration = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Report Workbench::run() {
  Report r;
  r.scenario = scenario_.name;
  r.system = scenario_.system.str();
  r.ring = amb_.ring().describe();
  r.ideal_a = level_string(a_);
  r.ideal_b = level_string(b_);
  r.ideal_ab = level_string(ab_);
  r.condition_star = star_.holds;
  r.condition_star_diagnostic = star_.diagnostic;
  r.seed = scenario_.seed;
  r.tool_version = CHEVCOMM_VERSION;
  bool bank_failed = false;
  for (const auto& name : scenario_.suites) {
    if (bank_failed) {
      SuiteReport s;
      s.suite = name;
      s.status = SuiteStatus::Skipped;
      s.reason = "identity bank failed; every other suite depends on its sign conventions";
      r.suites.push_back(s);
      continue;
    }
    r.suites.push_back(run_suite(name));
    if (name == "identities" && r.suites.back().status == SuiteStatus::Fail) bank_failed = true;
  }
  return r;
}

}  // namespace chevcomm
