#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiarity/freecons.hpp"

using namespace multiarity;

namespace {

FinSet two() { return FinSet{{"0", "1"}}; }

// Build a category from arrow declarations, filling in identity
// composites automatically.
struct ArrowDecl {
  std::string name, src, tgt;
};
FinCategory make_cat(std::vector<std::string> objects,
                     std::vector<ArrowDecl> arrows,
                     std::map<std::pair<std::string, std::string>,
                              std::string> comp = {}) {
  FinCategory c;
  c.objects = std::move(objects);
  for (const auto& o : c.objects) {
    std::string id = "id_" + o;
    c.homs[{o, o}].push_back(id);
    c.ids[o] = id;
  }
  for (const auto& a : arrows) c.homs[{a.src, a.tgt}].push_back(a.name);
  c.comp = std::move(comp);
  for (const auto& [k, fs] : c.homs)
    for (const auto& f : fs) {
      c.comp[{f, c.ids.at(k.first)}] = f;
      c.comp[{c.ids.at(k.second), f}] = f;
    }
  return c;
}

FinCategory terminal_cat() { return make_cat({"T"}, {}); }
FinCategory arrow_cat() { return make_cat({"A", "B"}, {{"f", "A", "B"}}); }
FinCategory discrete2() { return make_cat({"A", "B"}, {}); }
FinCategory idem_monoid() {
  return make_cat({"M"}, {{"e", "M", "M"}}, {{{"e", "e"}, "e"}});
}
FinCategory chain3() {
  return make_cat({"A", "B", "C"},
                  {{"f", "A", "B"}, {"g", "B", "C"}, {"gf", "A", "C"}},
                  {{{"g", "f"}, "gf"}});
}

std::vector<FinCategory> fixture_cats() {
  return {terminal_cat(), arrow_cat(), discrete2(), idem_monoid(), chain3()};
}

std::size_t hom_size(const FinCategory& c, const std::string& a,
                     const std::string& b) {
  const auto* h = c.find_hom(a, b);
  return h ? h->size() : 0;
}

ArrowObj two_to_one(const std::string& tag) {
  FinSet l0({tag + "x0", tag + "x1"});
  FinSet l1({tag + "y"});
  std::map<std::string, std::string> t{{tag + "x0", tag + "y"},
                                       {tag + "x1", tag + "y"}};
  return ArrowObj(l0, l1, FinMap(l0, l1, t));
}

}  // namespace

TEST_CASE("free clone on the walking arrow") {
  FinCategory cat = arrow_cat();
  Clone c = free_clone(cat, 2);

  // Tagged-sum hom-sets.
  const auto* h = c.table.find_hom({{"A", "A"}, "B"});
  REQUIRE(h != nullptr);
  CHECK(h->size() == 2);
  const auto* u = c.table.find_hom({{"A"}, "A"});
  REQUIRE(u != nullptr);
  CHECK(*u == std::vector<std::string>{free_clone_unit("A", "A", "id_A")});

  Report rep = validate_clone(c);
  CHECK(rep.status() == "pass");
  CHECK(rep.gaps.empty());
  CHECK(rep.checked > 0);
}

TEST_CASE("free clone laws and unary restriction on all fixtures") {
  for (const auto& cat : fixture_cats()) {
    Clone c = free_clone(cat, 2);
    Report rep = validate_clone(c);
    CHECK(rep.status() == "pass");
    CHECK(rep.gaps.empty());

    // Unary hom-sets recover the input category's hom-sets.
    for (const auto& a : cat.objects)
      for (const auto& b : cat.objects) {
        const auto* h = c.table.find_hom({{a}, b});
        std::size_t got = h ? h->size() : 0;
        CHECK(got == hom_size(cat, a, b));
      }
    // ... and composition: (1,g)[(1,f)] = (1, g.f).
    for (const auto& [k, r] : cat.comp) {
      const auto& [g, f] = k;
      auto [fa, fb] = cat.home(f);
      auto gk = cat.home(g);
      const std::string* s = c.subst(free_clone_unit(fb, gk.second, g),
                                     {free_clone_unit(fa, fb, f)});
      REQUIRE(s != nullptr);
      CHECK(*s == free_clone_unit(fa, gk.second, r));
    }
  }
}

TEST_CASE("substituting projections retags a unary term") {
  FinCategory cat = arrow_cat();
  Clone c = free_clone(cat, 2);
  TermIndex idx(c.table);
  int seen = 0;
  for (const auto& [k, terms] : c.table.homs) {
    if (k.ctx.size() != 1) continue;
    for (const auto& t : terms) {
      auto [one, f] = free_clone_untag(t);
      REQUIRE(one == 1);
      // Any wider context containing the source object at slot j.
      for (const auto& [k2, _] : c.table.homs) {
        (void)_;
        for (std::size_t j = 1; j <= k2.ctx.size(); ++j) {
          if (k2.ctx[j - 1] != k.ctx[0]) continue;
          const std::string* pr = c.proj(k2.ctx, static_cast<int>(j));
          REQUIRE(pr != nullptr);
          const std::string* r = c.subst(t, {*pr});
          REQUIRE(r != nullptr);
          CHECK(*r == free_clone_term({k2.ctx, k.tgt},
                                      static_cast<int>(j), f));
          ++seen;
        }
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("mediating morphism extends the unit to the identity") {
  FinCategory cat = arrow_cat();
  Clone c = free_clone(cat, 2);
  FunctorData F;
  for (const auto& o : cat.objects) F.objMap[o] = o;
  for (const auto& [k, fs] : cat.homs)
    for (const auto& f : fs)
      F.arrowMap[f] = free_clone_unit(k.first, k.second, f);
  CloneMorphism m = mediating_clone_morphism(c, c, F);
  CHECK(validate_clone_morphism(m).pass());
  for (const auto& [t, img] : m.termMap) CHECK(t == img);
}

TEST_CASE("mediating morphism into a concrete clone is the unique extension") {
  FinCategory cat = idem_monoid();
  Clone c = free_clone(cat, 2);
  Clone frag = set_clone_fragment({two()}, 2);

  // The functor sends M to the carrier, e to the constant-0 self-map.
  std::string idterm, consterm;
  for (const auto& t : *frag.table.find_hom({{"X1"}, "X1"})) {
    auto g = t.substr(t.find('#') + 1);
    if (g == "0.1.") idterm = t;
    if (g == "0.0.") consterm = t;
  }
  REQUIRE_FALSE(idterm.empty());
  REQUIRE_FALSE(consterm.empty());

  FunctorData F;
  F.objMap["M"] = "X1";
  F.arrowMap["id_M"] = idterm;
  F.arrowMap["e"] = consterm;
  CloneMorphism m = mediating_clone_morphism(c, frag, F);
  CHECK(validate_clone_morphism(m).pass());
  // Restricting along the unit recovers the functor.
  CHECK(m.termMap.at(free_clone_unit("M", "M", "e")) == consterm);
  CHECK(m.termMap.at(free_clone_unit("M", "M", "id_M")) == idterm);

  // Every valid competitor agreeing with F on unary tagged arrows agrees
  // with the mediating morphism everywhere.
  auto all = clone_algebras(c, frag);
  int competitors = 0;
  for (const auto& g : all) {
    if (g.objMap.at("M") != "X1") continue;
    bool restricts = true;
    for (const auto& [f, img] : F.arrowMap)
      restricts = restricts &&
                  g.termMap.at(free_clone_unit("M", "M", f)) == img;
    if (!restricts) continue;
    ++competitors;
    CHECK(g.termMap == m.termMap);
  }
  CHECK(competitors == 1);
}

TEST_CASE("free cartesian category on a projection-only clone") {
  Clone c = free_clone(terminal_cat(), 2);  // projections only
  FreeCartesian fc = free_cartesian(c, 2);

  Report rep = validate_fincategory(fc.cat);
  CHECK(rep.status() == "pass");

  CHECK(hom_size(fc.cat, "[T]", "[]") == 1);
  CHECK(hom_size(fc.cat, "[T]", "[T,T]") == 1);

  CHECK(check_terminal(fc).pass());
  Report prod = check_binary_products(fc, c);
  CHECK(prod.status() == "pass");
  CHECK(prod.checked > 0);
}

TEST_CASE("free cartesian category on the walking-arrow free clone") {
  Clone c = free_clone(arrow_cat(), 2);
  FreeCartesian fc = free_cartesian(c, 2);
  Report rep = validate_fincategory(fc.cat);
  CHECK(rep.status() == "pass");
  CHECK(check_terminal(fc).pass());
  Report prod = check_binary_products(fc, c);
  CHECK(prod.status() == "pass");
  CHECK(prod.checked > 0);
}

TEST_CASE("iterated free construction matches the product-of-sums count") {
  for (const auto& cat : fixture_cats()) {
    Clone c = free_clone(cat, 2);
    FreeCartesian fc = free_cartesian(c, 2);
    for (const auto& [n1, l1] : fc.obj_list)
      for (const auto& [n2, l2] : fc.obj_list) {
        std::size_t expect = 1;
        for (const auto& b : l2) {
          std::size_t sum = 0;
          for (const auto& a : l1) sum += hom_size(cat, a, b);
          expect *= sum;
        }
        if (l1.empty() && !l2.empty()) expect = 0;
        CHECK(hom_size(fc.cat, n1, n2) == expect);
      }
  }
}

TEST_CASE("free strict monoidal category on a concrete multicategory") {
  Multicat m = clone_to_multicat(set_clone_fragment({two()}, 2));
  FreeMonoidal fm = free_strict_monoidal(m, 2);

  // The empty list is the unit with a single endo-arrow.
  REQUIRE(fm.cat.find_hom("[]", "[]") != nullptr);
  CHECK(fm.cat.find_hom("[]", "[]")->size() == 1);

  // Single-block arrows are the multimorphisms.
  std::size_t binary = m.table.find_hom({{"X1", "X1"}, "X1"})->size();
  CHECK(hom_size(fm.cat, "[X1,X1]", "[X1]") == binary);

  // Splitting one input over two outputs would need an empty block.
  CHECK(fm.cat.find_hom("[X1]", "[X1,X1]") == nullptr);

  Report rep = validate_fincategory(fm.cat);
  CHECK(rep.pass());

  Report inter = check_monoidal_interchange(fm, 200000);
  CHECK(inter.violations.empty());
  CHECK(inter.checked > 0);

  // Tensoring with the unit arrow is the identity on names.
  std::string unit_arrow = *fm.cat.find_hom("[]", "[]")->begin();
  int tensors = 0;
  for (const auto& [k, arrows] : fm.cat.homs) {
    (void)k;
    for (const auto& f : arrows) {
      auto r = monoidal_tensor(fm, f, unit_arrow);
      auto l = monoidal_tensor(fm, unit_arrow, f);
      REQUIRE(r.has_value());
      REQUIRE(l.has_value());
      CHECK(*r == f);
      CHECK(*l == f);
      ++tensors;
    }
  }
  CHECK(tensors > 0);
}

TEST_CASE("free category on a graph") {
  FinGraph g;
  g.vertices = {"A", "B", "C"};
  g.edges[{"A", "B"}] = {"e"};
  g.edges[{"B", "C"}] = {"d"};

  FinCategory c = free_category_on_graph(g, 2);
  CHECK(hom_size(c, "A", "B") == 1);
  CHECK(hom_size(c, "A", "C") == 1);
  const auto* aa = c.find_hom("A", "A");
  REQUIRE(aa != nullptr);
  CHECK(*aa == std::vector<std::string>{"id_A"});
  Report rep = validate_fincategory(c);
  CHECK(rep.status() == "pass");

  // Truncation: with a loop, long concatenations are gaps, not errors.
  FinGraph loop;
  loop.vertices = {"A"};
  loop.edges[{"A", "A"}] = {"l"};
  FinCategory lc = free_category_on_graph(loop, 3);
  CHECK(hom_size(lc, "A", "A") == 4);  // id, l, l.l, l.l.l
  Report lrep = validate_fincategory(lc);
  CHECK(lrep.violations.empty());
  CHECK(lrep.skipped > 0);
}

TEST_CASE("length-one truncation is the graph with formal units") {
  FinGraph g;
  g.vertices = {"A", "B"};
  g.edges[{"A", "B"}] = {"e1", "e2"};
  g.edges[{"B", "A"}] = {"r"};
  FinCategory c = free_category_on_graph(g, 1);
  for (const auto& v1 : g.vertices)
    for (const auto& v2 : g.vertices) {
      std::size_t edges = 0;
      auto it = g.edges.find({v1, v2});
      if (it != g.edges.end()) edges = it->second.size();
      CHECK(hom_size(c, v1, v2) == edges + (v1 == v2 ? 1 : 0));
    }
}

TEST_CASE("two-level free category on an edge-labelled graph") {
  // No edges: the diagonal hom is just the unit at both levels.
  ArrowGraph empty;
  empty.vertices = {"A"};
  FreeEnrichedCategory fe = free_enriched_category(empty, 2);
  REQUIRE(fe.homObjs.count({"A", "A"}));
  CHECK(fe.homObjs.at({"A", "A"}).level0.size() == 1);
  CHECK(fe.homObjs.at({"A", "A"}).level1.size() == 1);

  // One generating edge with level sizes (2,1).
  ArrowGraph one;
  one.vertices = {"A", "B"};
  one.edges[{"A", "B"}] = two_to_one("e");
  FreeEnrichedCategory f1 = free_enriched_category(one, 1);
  CHECK(f1.homObjs.at({"A", "B"}).level0.size() == 2);
  CHECK(f1.homObjs.at({"A", "B"}).level1.size() == 1);
  CHECK(check_ioo_functor(f1).pass());

  // Two composable edges: the path hom multiplies the levels.
  ArrowGraph chain;
  chain.vertices = {"A", "B", "C"};
  chain.edges[{"A", "B"}] = two_to_one("e");
  chain.edges[{"B", "C"}] = two_to_one("d");
  FreeEnrichedCategory f2 = free_enriched_category(chain, 2);
  CHECK(f2.homObjs.at({"A", "C"}).level0.size() == 4);
  CHECK(f2.homObjs.at({"A", "C"}).level1.size() == 1);
  CHECK(validate_fincategory(f2.level0).status() == "pass");
  CHECK(validate_fincategory(f2.level1).status() == "pass");
  CHECK(check_ioo_functor(f2).pass());

  CHECK_THROWS_AS(free_enriched_category(chain, 2, 3), CapacityError);
}
