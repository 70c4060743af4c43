#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiarity/enriched.hpp"

using namespace multiarity;

namespace {

FinSet two() { return FinSet{{"0", "1"}}; }
FinSet one() { return FinSet{{"*"}}; }

Premulticat stateful3() { return stateful_premulticat(two(), {one()}, 3); }

// Decode the per-state action of a term over the singleton carrier:
// g[s] = s' for the flattened codomain index b*|S| + s' with b = 0.
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

// One object, one term per hom at each level up to binary contexts;
// every substitution is forced, so all the laws hold degenerately.
EnrichedMulticat trivial_enriched() {
  EnrichedMulticat d;
  d.objects = {"A"};
  d.homs0.objects = d.homs1.objects = {"A"};
  d.homs0.maxContext = d.homs1.maxContext = 2;
  d.homs0.homs[{{"A"}, "A"}] = {"p1"};
  d.homs0.homs[{{"A", "A"}, "A"}] = {"p2"};
  d.homs1.homs[{{"A"}, "A"}] = {"q1"};
  d.homs1.homs[{{"A", "A"}, "A"}] = {"q2"};
  d.bar = {{"p1", "q1"}, {"p2", "q2"}};
  d.ids0 = {{"A", "p1"}};
  d.psub[{"p1", {"p1"}}] = "p1";
  d.psub[{"p1", {"p2"}}] = "p2";
  d.psub[{"p2", {"p1", "p1"}}] = "p2";
  d.esub[{1, "q1", {"q1"}}] = "q1";
  d.esub[{1, "q1", {"q2"}}] = "q2";
  d.esub[{1, "q2", {"q1", "p1"}}] = "q2";
  d.esub[{2, "q2", {"p1", "q1"}}] = "q2";
  return d;
}

}  // namespace

TEST_CASE("trivial one-object structure validates and round-trips") {
  EnrichedMulticat d = trivial_enriched();
  Report rep = validate_enriched(d);
  CHECK(rep.status() == "pass");
  CHECK(rep.checked > 0);

  Report rt = roundtrip_enriched(d);
  CHECK(rt.pass());

  EffectfulMulticat e = enriched_to_effectful(d);
  CHECK(validate_effectful(e).pass());
  CHECK(roundtrip_effectful(e).pass());
}

TEST_CASE("two-level presentation of the stateful structure") {
  EffectfulMulticat e = premult_to_effectful(stateful3());
  EnrichedMulticat d = effectful_to_enriched(e);

  Report rep = validate_enriched(d);
  CHECK(rep.violations.empty());
  CHECK(rep.gaps.empty());
  CHECK(rep.checked > 0);

  // Oracle: on unary terms, plugging at the effectful slot composes the
  // state actions, with the inner argument acting first.
  int seen = 0;
  for (const auto& [key, r] : d.esub) {
    const auto& [j, t, us] = key;
    if (us.size() != 1 || t.find('#') == std::string::npos) continue;
    auto gt = state_action(t);
    auto gu = state_action(us[0]);
    if (gt.size() != 2 || gu.size() != 2) continue;
    auto gr = state_action(r);
    REQUIRE(gr.size() == 2);
    for (int s = 0; s < 2; ++s) CHECK(gr[s] == gt[gu[s]]);
    CHECK(j == 1);
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("round trips are exact on the stateful structure") {
  EffectfulMulticat e = premult_to_effectful(stateful3());
  CHECK(roundtrip_effectful(e).pass());
  CHECK(roundtrip_enriched(effectful_to_enriched(e)).pass());
}

TEST_CASE("round trips are exact on a purely pure structure") {
  Clone c = set_clone_fragment({two()}, 2);
  EffectfulMulticat e = trivially_effectful(clone_to_multicat(c));
  EnrichedMulticat d = effectful_to_enriched(e);
  CHECK(validate_enriched(d).pass());
  CHECK(roundtrip_effectful(e).pass());
  CHECK(roundtrip_enriched(d).pass());
}

TEST_CASE("a slot-dependent substitution is caught by the exchange law") {
  EffectfulMulticat e = premult_to_effectful(stateful3());
  EnrichedMulticat d = effectful_to_enriched(e);

  // Find a slot-1 entry on a binary effectful term whose arguments are
  // both pure, so that a sibling slot-2 entry with the same arguments
  // exists; corrupting one side must surface as a coherence-b failure.
  bool mutated = false;
  TermIndex i1(d.homs1);
  for (auto& [key, r] : d.esub) {
    const auto& [j, t, us] = key;
    if (j != 1 || us.size() != 2) continue;
    if (!d.bar.count(us[0]) || !d.bar.count(us[1])) continue;
    if (!d.esubst(2, t, us)) continue;
    const auto* pool = d.homs1.find_hom(i1.at(r));
    REQUIRE(pool != nullptr);
    for (const auto& other : *pool)
      if (other != r) {
        r = other;
        mutated = true;
        break;
      }
    if (mutated) break;
  }
  REQUIRE(mutated);

  Report rep = validate_enriched(d);
  CHECK_FALSE(rep.violations.empty());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.law == "coherence-b") found = true;
  CHECK(found);
}

TEST_CASE("transformations at both presentations agree on components") {
  // On a purely pure structure every term is central, so a single
  // unary component gives a transformation in one presentation exactly
  // when it does in the other.
  Clone c = set_clone_fragment({two()}, 2);
  EffectfulMulticat e = trivially_effectful(clone_to_multicat(c));
  EnrichedMulticat d = effectful_to_enriched(e);

  EnrichedMorphism idm;
  idm.src = idm.dst = &d;
  for (const auto& o : d.objects) idm.objMap[o] = o;
  for (const auto& [k, terms] : d.homs0.homs) {
    (void)k;
    for (const auto& t : terms) idm.f0[t] = t;
  }
  for (const auto& [k, terms] : d.homs1.homs) {
    (void)k;
    for (const auto& t : terms) idm.f1[t] = t;
  }
  REQUIRE(validate_enriched_morphism(idm).pass());

  PremultMorphism pidm;
  pidm.src = pidm.dst = &e.eff;
  for (const auto& o : e.eff.table.objects) pidm.objMap[o] = o;
  for (const auto& [k, terms] : e.eff.table.homs) {
    (void)k;
    for (const auto& t : terms) pidm.termMap[t] = t;
  }
  REQUIRE(validate_premult_morphism(pidm).pass());

  const std::string& obj = d.objects[0];
  const auto* unary = d.homs0.find_hom({{obj}, obj});
  REQUIRE(unary != nullptr);
  int agreeing = 0, valid = 0;
  for (const auto& cand : *unary) {
    EnrichedTransformation etr;
    etr.src = etr.dst = &idm;
    etr.components[obj] = cand;
    Report er = validate_enriched_transformation(etr);

    PremultTransformation ptr_;
    ptr_.src = ptr_.dst = &pidm;
    ptr_.components[obj] = cand;
    Report pr = validate_premult_transformation(ptr_);

    bool eok = er.violations.empty() && er.gaps.empty();
    bool pok = pr.violations.empty() && pr.gaps.empty();
    CHECK(eok == pok);
    if (eok == pok) ++agreeing;
    if (eok) ++valid;
  }
  CHECK(agreeing == static_cast<int>(unary->size()));
  CHECK(valid >= 1);  // the identity component always works
}

TEST_CASE("hom-category into the trivial structure has a single algebra") {
  EnrichedMulticat t = trivial_enriched();

  Report self = algebra_category(t, t);
  CHECK(self.pass());
  REQUIRE_FALSE(self.infos.empty());
  CHECK(self.infos[0].law == "algebra-count");
  CHECK(self.infos[0].instance == "1");

  Clone c = set_clone_fragment({one()}, 2);
  EnrichedMulticat d =
      effectful_to_enriched(trivially_effectful(clone_to_multicat(c)));
  Report rep = algebra_category(d, t);
  CHECK(rep.pass());
  REQUIRE_FALSE(rep.infos.empty());
  CHECK(rep.infos[0].law == "algebra-count");
  CHECK(rep.infos[0].instance == "1");
}

TEST_CASE("hom-category laws hold on the stateful structure's self-maps") {
  EffectfulMulticat e = premult_to_effectful(stateful3());
  EnrichedMulticat d = effectful_to_enriched(e);
  Report rep = algebra_category(d, d);
  CHECK(rep.pass());
  REQUIRE_FALSE(rep.infos.empty());
  CHECK(rep.infos[0].law == "algebra-count");
  CHECK(std::stoi(rep.infos[0].instance) >= 1);
}
