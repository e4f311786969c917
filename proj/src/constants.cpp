#include "chevcomm/constants.hpp"

namespace chevcomm {

const std::vector<PinnedRelation>& pinned_relations() {
  static const std::vector<PinnedRelation> relations = {
      {"C2", "alpha", "beta", {{1, 1, 1}, {1, 2, 1}}},
      {"G2", "alpha", "beta", {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {3, 2, 2}}},
      {"G2", "alpha", "alpha+beta", {{1, 1, 2}, {2, 1, 3}, {1, 2, -3}}},
      {"G2", "alpha", "2alpha+beta", {{1, 1, 3}}},
      {"G2", "beta", "3alpha+beta", {{1, 1, 1}}},
      {"G2", "alpha+beta", "2alpha+beta", {{1, 1, -3}}},
  };
  return relations;
}

std::string render_expansion(const ChevRep& rep, const std::vector<StructureConstant>& constants) {
  Word w;
  for (const auto& c : constants) {
    w.tokens.push_back({c.root, MultiPoly(c.value) * MultiPoly::variable("a").pow(static_cast<unsigned>(c.i)) *
                                    MultiPoly::variable("b").pow(static_cast<unsigned>(c.j))});
  }
  return render_word(w, rep.system());
}

std::vector<PinnedCheck> check_pinned_relations() {
  std::vector<PinnedCheck> out;
  for (const auto& rel : pinned_relations()) {
    const ChevRep rep(SystemLabel::parse(rel.system));
    const RootSystem& sys = rep.system();
    const RootNames names = default_root_names(sys);
    const std::size_t a = sys.index_of(parse_root(rel.alpha, sys, names));
    const std::size_t b = sys.index_of(parse_root(rel.beta, sys, names));
    const auto got = pair_constants(rep, a, b);
    PinnedCheck c{rel, got.size() == rel.terms.size(), {}, render_expansion(rep, got)};
    std::vector<StructureConstant> want;
    const auto string = sys.root_string(sys.root(a), sys.root(b));
    for (std::size_t k = 0; k < rel.terms.size(); ++k) {
      const auto& t = rel.terms[k];
      StructureConstant s;
      s.alpha = a;
      s.beta = b;
      s.i = t.i;
      s.j = t.j;
      s.value = t.value;
      for (const auto& st : string) {
        if (st.i == t.i && st.j == t.j) s.root = sys.index_of(st.root);
      }
      want.push_back(s);
      if (c.ok && (got[k].i != t.i || got[k].j != t.j || got[k].value != t.value)) c.ok = false;
    }
    c.expected = render_expansion(rep, want);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace chevcomm
