#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiarity/effectful.hpp"

using namespace multiarity;

namespace {

FinSet two() { return FinSet{{"0", "1"}}; }
FinSet one() { return FinSet{{"*"}}; }

Premulticat stateful3() { return stateful_premulticat(two(), {one()}, 3); }

std::vector<int> state_action(const std::string& name) {
  auto pos = name.find('#');
  REQUIRE(pos != std::string::npos);
  std::vector<int> g;
  std::string digits;
  for (char ch : name.substr(pos + 1)) {
    if (ch == '.') {
      g.push_back(std::stoi(digits));
      digits.clear();
    } else {
      digits += ch;
    }
  }
  return g;
}

// The trivially effectful structure on a multicategory: eff is the
// id-padded view and J is the identity.
EffectfulMulticat trivially_effectful(const Multicat& m) {
  EffectfulMulticat e;
  e.pure = m;
  e.eff = multicat_to_premulticat(m);
  for (const auto& [k, terms] : m.table.homs) {
    (void)k;
    for (const auto& t : terms) e.J[t] = t;
  }
  return e;
}

}  // namespace

TEST_CASE("stateful premulticategory as an effectful multicategory") {
  Premulticat p = stateful3();
  EffectfulMulticat e = premult_to_effectful(p);
  CHECK(e.eff == p);

  // Pure part: the state-transparent maps below the top arity.
  for (const auto& [k, terms] : e.pure.table.homs)
    if (k.ctx.size() < 3)
      for (const auto& t : terms) {
        auto g = state_action(t);
        CHECK(g[0] == 0);
        CHECK(g[1] == 1);
      }

  Report rep = validate_effectful(e);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);
}

TEST_CASE("a multicategory is trivially effectful") {
  Clone c = set_clone_fragment({two()}, 2);
  EffectfulMulticat e = trivially_effectful(clone_to_multicat(c));
  Report rep = validate_effectful(e);
  CHECK(rep.violations.empty());
  // Everything is a J-image here, so nothing to report informationally.
  CHECK(rep.infos.empty());
}

TEST_CASE("J hitting a non-central term is flagged") {
  Premulticat p = stateful3();
  EffectfulMulticat e = premult_to_effectful(p);
  // Redirect the pure identity's inclusion to the write-0 term.
  std::string write0;
  for (const auto& t : *p.table.find_hom({{"X1"}, "X1"})) {
    auto g = state_action(t);
    if (g[0] == 0 && g[1] == 0) write0 = t;
  }
  e.J[e.pure.ids.at("X1")] = write0;
  Report rep = validate_effectful(e);
  bool centrality = false;
  for (const auto& v : rep.violations)
    if (v.law == "J-image-centrality") centrality = true;
  CHECK(centrality);
}

TEST_CASE("central terms outside the inclusion's image are listed") {
  // Keep only the identities as pure terms.
  Premulticat p = stateful3();
  EffectfulMulticat e;
  e.eff = p;
  e.pure.table.objects = p.table.objects;
  e.pure.table.maxContext = p.table.maxContext;
  const std::string& id = p.ids.at("X1");
  e.pure.table.homs[{{"X1"}, "X1"}] = {"pure_id"};
  e.pure.ids["X1"] = "pure_id";
  e.pure.sub[{"pure_id", {"pure_id"}}] = "pure_id";
  e.J["pure_id"] = id;
  Report rep = validate_effectful(e);
  CHECK(rep.violations.empty());
  // The transparent binary term (among others) is central but not hit.
  CHECK(!rep.infos.empty());
  for (const auto& i : rep.infos) CHECK(i.law == "central-outside-image");
}

TEST_CASE("applying the construction to its own effectful part is stable") {
  Premulticat p = stateful3();
  EffectfulMulticat e = premult_to_effectful(p);
  EffectfulMulticat e2 = premult_to_effectful(e.eff);
  CHECK(e2 == e);
}

TEST_CASE("effectful morphisms: identity valid, broken square flagged") {
  Premulticat p = stateful3();
  EffectfulMulticat e = premult_to_effectful(p);

  EffectfulMorphism m;
  m.src = &e;
  m.dst = &e;
  m.f0.src = &e.pure;
  m.f0.dst = &e.pure;
  m.f1.src = &e.eff;
  m.f1.dst = &e.eff;
  for (const auto& o : e.pure.table.objects) {
    m.f0.objMap[o] = o;
    m.f1.objMap[o] = o;
  }
  for (const auto& [k, terms] : e.pure.table.homs) {
    (void)k;
    for (const auto& t : terms) m.f0.termMap[t] = t;
  }
  for (const auto& [k, terms] : e.eff.table.homs) {
    (void)k;
    for (const auto& t : terms) m.f1.termMap[t] = t;
  }
  Report rep = validate_effectful_morphism(m);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);

  // Break the square on one hom: move an effectful image elsewhere.
  EffectfulMorphism bad = m;
  bad.f0.src = &e.pure;  // keep pointers aligned after copy
  const std::string& id = e.eff.ids.at("X1");
  for (const auto& t : *e.eff.table.find_hom({{"X1"}, "X1"}))
    if (t != id) { bad.f1.termMap[e.J.at(e.pure.ids.at("X1"))] = t; break; }
  Report rep2 = validate_effectful_morphism(bad);
  bool square = false;
  for (const auto& v : rep2.violations)
    if (v.law == "inclusion-square") square = true;
  CHECK(square);
}
