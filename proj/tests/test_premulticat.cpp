#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiarity/premulticat.hpp"
#include "multiarity/premulticat_lemmas.hpp"

using namespace multiarity;

namespace {

FinSet two() { return FinSet{{"0", "1"}}; }
FinSet one() { return FinSet{{"*"}}; }

// Stateful functions over a 2-element state with a trivial carrier, up to
// ternary contexts: every term is determined by its action on the state.
Premulticat stateful3() {
  return stateful_premulticat(two(), {one()}, 3);
}

// The state action of a term over the trivial carrier: position i of the
// graph is the value b*|S|+s' at state i, which here is just s'.
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

bool state_transparent(const std::string& name) {
  auto g = state_action(name);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != static_cast<int>(i % 2)) return false;
  return true;
}

std::string unary_with_action(const Premulticat& p, int at0, int at1) {
  for (const auto& t : *p.table.find_hom({{"X1"}, "X1"})) {
    auto g = state_action(t);
    if (g[0] == at0 && g[1] == at1) return t;
  }
  FAIL("no such unary term");
  return "";
}

PremultMorphism identity_premorphism(const Premulticat& p) {
  PremultMorphism f;
  f.src = &p;
  f.dst = &p;
  for (const auto& o : p.table.objects) f.objMap[o] = o;
  for (const auto& [k, terms] : p.table.homs) {
    (void)k;
    for (const auto& t : terms) f.termMap[t] = t;
  }
  return f;
}

}  // namespace

TEST_CASE("stateful premulticategory: shape, sizes, laws") {
  Premulticat p = stateful3();
  // |Mhom(A;B)| = |B x S|^{|A x S|} = 2^2 with trivial carriers.
  CHECK(p.table.find_hom({{"X1"}, "X1"})->size() == 4);
  CHECK(p.table.find_hom({{"X1", "X1"}, "X1"})->size() == 4);
  Report rep = validate_premulticat(p);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);
}

TEST_CASE("identity is central, write-0 against write-1 is not") {
  Premulticat p = stateful3();
  CHECK(is_central(p, p.ids.at("X1")).central);

  std::string write0 = unary_with_action(p, 0, 0);
  std::string write1 = unary_with_action(p, 1, 1);
  CentralityResult c = is_central(p, write0);
  CHECK(!c.central);
  CHECK(!c.witness.empty());
  // The witness names the two disagreeing composites.
  CHECK(c.witness.find(" != ") == std::string::npos);  // formatted as a = b but c = d
  CHECK(c.witness.find(write0) != std::string::npos);
  CHECK(!is_central(p, write1).central);
}

TEST_CASE("trivial state makes every term central") {
  Premulticat p = stateful_premulticat(one(), {two()}, 2);
  REQUIRE(validate_premulticat(p).violations.empty());
  for (const auto& [k, terms] : p.table.homs) {
    (void)k;
    for (const auto& t : terms) CHECK(is_central(p, t).central);
  }
}

TEST_CASE("lowered multicategory: valid and everywhere central") {
  Clone c = set_clone_fragment({two()}, 2);
  Multicat m = clone_to_multicat(c);
  Premulticat p = multicat_to_premulticat(m);
  Report rep = validate_premulticat(p);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);
  for (const auto& [k, terms] : p.table.homs) {
    (void)k;
    for (const auto& t : terms) CHECK(is_central(p, t).central);
  }
  // The centre of a lowered multicategory is the whole thing.
  CHECK(centre(p) == p);
}

TEST_CASE("centre of the stateful premulticategory") {
  Premulticat p = stateful3();
  Premulticat z = centre(p);
  // Below the top arity the centre is exactly the state-transparent part;
  // at the top arity centrality is vacuous within the truncation (any
  // double substitution would exceed the bound), so everything remains.
  for (const auto& [k, terms] : z.table.homs) {
    if (k.ctx.size() < 3) {
      CHECK(terms.size() == 1);
      for (const auto& t : terms) CHECK(state_transparent(t));
    } else {
      CHECK(terms.size() == 4);
    }
  }
  Report rep = validate_premulticat(z);
  CHECK(rep.violations.empty());
  for (const auto& [k, terms] : z.table.homs) {
    (void)k;
    for (const auto& t : terms) CHECK(is_central(z, t).central);
  }
}

TEST_CASE("iterated substitution basics") {
  Premulticat p = stateful3();
  TermIndex idx(p.table);
  const auto& binary = *p.table.find_hom({{"X1", "X1"}, "X1"});
  const auto& unary = *p.table.find_hom({{"X1"}, "X1"});
  const std::string& id = p.ids.at("X1");
  for (const auto& t : binary) {
    // n = 1 is plain single-position substitution.
    for (const auto& u : unary)
      CHECK(isub(p, t, 2, {u}) == *p.subst1(t, 2, u));
    // Substituting identities everywhere returns t.
    CHECK(isub(p, t, 1, {id, id}) == t);
  }
  // Missing intermediates raise a coverage error: plugging two binary
  // terms into a binary term exceeds the truncation.
  const std::string& b = binary[1];
  CHECK_THROWS_AS(isub(p, b, 1, {b, b}), CoverageError);
}

TEST_CASE("derived equations hold on the stateful table") {
  Premulticat p = stateful3();
  Report rep = check_splitting(p, 60000);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);

  rep = check_isub_assoc(p, 60000);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);

  rep = check_un_cent(p, 60000);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);

  rep = check_cent_left(p, 60000);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);

  rep = check_cent_right(p, 60000);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);

  rep = check_multicat_assoc(p, 40000);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);

  rep = check_freyd_assoc(p, 40000);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);
}

TEST_CASE("derived equations hold on a lowered multicategory") {
  Clone c = set_clone_fragment({two()}, 2);
  Premulticat p = multicat_to_premulticat(clone_to_multicat(c));
  CHECK(check_splitting(p, 40000).violations.empty());
  CHECK(check_isub_assoc(p, 40000).violations.empty());
  CHECK(check_cent_left(p, 40000).violations.empty());
  CHECK(check_multicat_assoc(p, 40000).violations.empty());
}

TEST_CASE("morphisms commute with iterated substitution") {
  Premulticat p = stateful3();
  PremultMorphism f = identity_premorphism(p);
  REQUIRE(validate_premult_morphism(f).violations.empty());
  Report rep = check_isub_pres(f, 60000);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);
}

TEST_CASE("corrupted substitution entry yields a witnessed violation") {
  Premulticat p = stateful3();
  // Corrupt one nested-substitution participant: rewrite the result of
  // some binary-position entry to a different term of the same hom.
  for (auto& [key, r] : p.sub1) {
    const auto& [t, pos, u] = key;
    (void)t;
    (void)pos;
    (void)u;
    HomKey rk = TermIndex(p.table).at(r);
    for (const auto& other : *p.table.find_hom(rk))
      if (other != r) { r = other; break; }
    break;
  }
  Report rep = validate_premulticat(p);
  CHECK(!rep.violations.empty());
}

TEST_CASE("premulticategory transformations") {
  Premulticat p = stateful3();
  PremultMorphism f = identity_premorphism(p);

  // Identity components: valid, and each component central.
  PremultTransformation idt;
  idt.src = &f;
  idt.dst = &f;
  idt.components["X1"] = p.ids.at("X1");
  Report rep = validate_premult_transformation(idt);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);

  // A write component is rejected for non-centrality.
  PremultTransformation bad;
  bad.src = &f;
  bad.dst = &f;
  bad.components["X1"] = unary_with_action(p, 0, 0);
  rep = validate_premult_transformation(bad);
  bool centrality_flagged = false;
  for (const auto& v : rep.violations)
    if (v.law == "component-centrality") centrality_flagged = true;
  CHECK(centrality_flagged);

  // Composition of valid transformations stays valid.
  PremultTransformation comp = compose_premult_transformations(idt, idt);
  CHECK(comp.components == idt.components);
  CHECK(validate_premult_transformation(comp).violations.empty());
}
