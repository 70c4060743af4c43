// Regenerates the JSON fixture corpus under fixtures/. Run from the
// repository root (or pass the output directory as the first argument).

#include <fstream>
#include <iostream>
#include <string>

#include "multiarity/json_io.hpp"

using namespace multiarity;

namespace {

std::string out_dir = "fixtures";

void write(const std::string& name, const json& j) {
  std::ofstream f(out_dir + "/" + name);
  f << j.dump(2) << "\n";
  std::cout << "wrote " << out_dir << "/" << name << "\n";
}

FinCategory make_cat(
    std::vector<std::string> objects,
    std::vector<std::tuple<std::string, std::string, std::string>> arrows,
    std::map<std::pair<std::string, std::string>, std::string> comp = {}) {
  FinCategory c;
  c.objects = std::move(objects);
  for (const auto& o : c.objects) {
    std::string id = "id_" + o;
    c.homs[{o, o}].push_back(id);
    c.ids[o] = id;
  }
  for (const auto& [n, s, t] : arrows) c.homs[{s, t}].push_back(n);
  c.comp = std::move(comp);
  for (const auto& [k, fs] : c.homs)
    for (const auto& f : fs) {
      c.comp[{f, c.ids.at(k.first)}] = f;
      c.comp[{c.ids.at(k.second), f}] = f;
    }
  return c;
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

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) out_dir = argv[1];
  FinSet two{{"0", "1"}};
  FinSet one{{"*"}};

  // --- categories -------------------------------------------------------
  FinCategory terminal = make_cat({"T"}, {});
  FinCategory arrow = make_cat({"A", "B"}, {{"f", "A", "B"}});
  FinCategory discrete2 = make_cat({"A", "B"}, {});
  FinCategory idem =
      make_cat({"M"}, {{"e", "M", "M"}}, {{{"e", "e"}, "e"}});
  FinCategory chain = make_cat(
      {"A", "B", "C"}, {{"f", "A", "B"}, {"g", "B", "C"}, {"gf", "A", "C"}},
      {{{"g", "f"}, "gf"}});
  write("cat-terminal.json", fincategory_to_json(terminal));
  write("cat-arrow.json", fincategory_to_json(arrow));
  write("cat-discrete2.json", fincategory_to_json(discrete2));
  write("cat-idem-monoid.json", fincategory_to_json(idem));
  write("cat-chain3.json", fincategory_to_json(chain));

  // --- clones -----------------------------------------------------------
  Clone proj_clone = free_clone(terminal, 2);  // projections only
  write("clone-projections.json", clone_to_json(proj_clone));
  Clone frag = set_clone_fragment({two}, 2);
  write("clone-fragment.json", clone_to_json(frag));
  write("clone-free-arrow.json", clone_to_json(free_clone(arrow, 2)));

  // --- multicategories --------------------------------------------------
  Multicat fragm = clone_to_multicat(frag);
  write("multicat-fragment.json", multicat_to_json(fragm));
  write("multicat-discrete-chain.json",
        multicat_to_json(discrete_multicat(chain, 2)));

  // --- premulticategories -----------------------------------------------
  Premulticat st2 = stateful_premulticat(two, {one}, 2);
  Premulticat st3 = stateful_premulticat(two, {one}, 3);
  write("premulticat-stateful2.json", premulticat_to_json(st2));
  write("premulticat-stateful3.json", premulticat_to_json(st3));
  write("premulticat-lowered-fragment.json",
        premulticat_to_json(multicat_to_premulticat(fragm)));

  // --- effectful / two-level --------------------------------------------
  EffectfulMulticat eff3 = premult_to_effectful(st3);
  write("effectful-stateful3.json", effectful_to_json(eff3));
  EffectfulMulticat effp = trivially_effectful(fragm);
  write("effectful-pure-fragment.json", effectful_to_json(effp));
  write("enriched-g-of-stateful3.json",
        enriched_to_json(effectful_to_enriched(eff3)));
  write("enriched-g-of-pure-fragment.json",
        enriched_to_json(effectful_to_enriched(effp)));

  EnrichedMulticat trivial;
  trivial.objects = {"A"};
  trivial.homs0.objects = trivial.homs1.objects = {"A"};
  trivial.homs0.maxContext = trivial.homs1.maxContext = 2;
  trivial.homs0.homs[{{"A"}, "A"}] = {"p1"};
  trivial.homs0.homs[{{"A", "A"}, "A"}] = {"p2"};
  trivial.homs1.homs[{{"A"}, "A"}] = {"q1"};
  trivial.homs1.homs[{{"A", "A"}, "A"}] = {"q2"};
  trivial.bar = {{"p1", "q1"}, {"p2", "q2"}};
  trivial.ids0 = {{"A", "p1"}};
  trivial.psub[{"p1", {"p1"}}] = "p1";
  trivial.psub[{"p1", {"p2"}}] = "p2";
  trivial.psub[{"p2", {"p1", "p1"}}] = "p2";
  trivial.esub[{1, "q1", {"q1"}}] = "q1";
  trivial.esub[{1, "q1", {"q2"}}] = "q2";
  trivial.esub[{1, "q2", {"q1", "p1"}}] = "q2";
  trivial.esub[{2, "q2", {"p1", "q1"}}] = "q2";
  write("enriched-trivial.json", enriched_to_json(trivial));

  // --- graphs and arrow objects -----------------------------------------
  FinGraph graph;
  graph.vertices = {"A", "B", "C"};
  graph.edges[{"A", "B"}] = {"e"};
  graph.edges[{"B", "C"}] = {"d"};
  write("graph-chain.json", fingraph_to_json(graph));

  auto two_to_one = [](const std::string& tag) {
    FinSet l0({tag + "x0", tag + "x1"});
    FinSet l1({tag + "y"});
    std::map<std::string, std::string> t{{tag + "x0", tag + "y"},
                                         {tag + "x1", tag + "y"}};
    return ArrowObj(l0, l1, FinMap(l0, l1, t));
  };
  json ag;
  ag["vertices"] = {"A", "B", "C"};
  json edges = json::object();
  edges["A->B"] = arrowobj_to_json(two_to_one("e"));
  edges["B->C"] = arrowobj_to_json(two_to_one("d"));
  ag["edges"] = edges;
  write("arrowgraph-chain.json", ag);

  write("arrowobj-2to1.json", arrowobj_to_json(two_to_one("a")));
  write("arrowobj-3to2.json", [&] {
    FinSet l0({"u0", "u1", "u2"});
    FinSet l1({"v0", "v1"});
    std::map<std::string, std::string> t{
        {"u0", "v0"}, {"u1", "v0"}, {"u2", "v1"}};
    return arrowobj_to_json(ArrowObj(l0, l1, FinMap(l0, l1, t)));
  }());
  json pool = json::array();
  pool.push_back(arrowobj_to_json(unit_arrow()));
  pool.push_back(arrowobj_to_json(two_to_one("a")));
  pool.push_back(arrowobj_to_json(two_to_one("b")));
  write("arrowobj-pool.json", pool);

  // --- single-entry mutation catalog ------------------------------------
  // Each file is a shape-valid structure whose laws fail at exactly one
  // corrupted table entry; file names carry the structure kind.
  auto flip_unary_frag = [&](const std::string& t) {
    // Another term of the same unary hom of the carrier fragment.
    const auto& terms = frag.table.homs.at({{"X1"}, "X1"});
    for (const auto& x : terms)
      if (x != t) return x;
    throw InternalConsistencyError("no alternative unary term");
  };

  {
    Clone m = frag;  // 1: corrupt one substitution result
    auto it = m.sub.begin();
    while (it->second == it->first.first ||
           TermIndex(m.table).at(it->second).ctx.size() != 1)
      ++it;
    it->second = flip_unary_frag(it->second);
    write("mutant-01-clone.json", clone_to_json(m));
  }
  {
    Clone m = free_clone(arrow, 2);  // 2: corrupt one substitution result
    TermIndex idx(m.table);
    bool done = false;
    for (auto& [key, r] : m.sub) {
      (void)key;
      for (const auto& x : m.table.homs.at(idx.at(r)))
        if (x != r) { r = x; done = true; break; }
      if (done) break;
    }
    if (!done) throw InternalConsistencyError("no swappable sub entry");
    write("mutant-02-clone.json", clone_to_json(m));
  }
  {
    Multicat m = fragm;  // 3: identity entry points at a non-identity
    m.ids["X1"] = flip_unary_frag(m.ids.at("X1"));
    write("mutant-03-multicat.json", multicat_to_json(m));
  }
  {
    Multicat m = fragm;  // 4: corrupt one substitution result
    auto it = m.sub.begin();
    while (TermIndex(m.table).at(it->second).ctx.size() != 1) ++it;
    it->second = flip_unary_frag(it->second);
    write("mutant-04-multicat.json", multicat_to_json(m));
  }
  {
    Premulticat m = st2;  // 5: corrupt one splice result
    TermIndex idx(m.table);
    auto it = m.sub1.begin();
    while (idx.at(it->second).ctx.size() != 1) ++it;
    const auto& terms = m.table.homs.at(idx.at(it->second));
    for (const auto& x : terms)
      if (x != it->second) { it->second = x; break; }
    write("mutant-05-premulticat.json", premulticat_to_json(m));
  }
  {
    Premulticat m = st2;  // 6: identity entry points at a write term
    const auto& terms = m.table.homs.at({{"X1"}, "X1"});
    for (const auto& x : terms)
      if (x != m.ids.at("X1")) { m.ids["X1"] = x; break; }
    write("mutant-06-premulticat.json", premulticat_to_json(m));
  }
  {
    EffectfulMulticat m = eff3;  // 7: inclusion hits a non-central term
    TermIndex idx(m.eff.table);
    for (auto& [t, jt] : m.J) {
      if (idx.at(jt).ctx.size() != 1) continue;
      bool done = false;
      for (const auto& x : m.eff.table.homs.at(idx.at(jt)))
        if (!is_central(m.eff, x).central) { jt = x; done = true; break; }
      if (done) break;
    }
    write("mutant-07-effectful.json", effectful_to_json(m));
  }
  {
    EffectfulMulticat m = eff3;  // 8: corrupt one pure substitution
    TermIndex idx(m.pure.table);
    bool done = false;
    for (auto& [key, r] : m.pure.sub) {
      (void)key;
      for (const auto& x : m.pure.table.homs.at(idx.at(r)))
        if (x != r) { r = x; done = true; break; }
      if (done) break;
    }
    if (!done) throw InternalConsistencyError("no swappable pure sub entry");
    write("mutant-08-effectful.json", effectful_to_json(m));
  }
  {
    EnrichedMulticat m = effectful_to_enriched(eff3);
    // 9: corrupt one effectful substitution entry
    TermIndex idx(m.homs1);
    auto it = m.esub.begin();
    while (true) {
      bool swapped = false;
      for (const auto& x : m.homs1.homs.at(idx.at(it->second)))
        if (x != it->second) { it->second = x; swapped = true; break; }
      if (swapped) break;
      ++it;
    }
    write("mutant-09-enriched.json", enriched_to_json(m));
  }
  {
    EnrichedMulticat m = effectful_to_enriched(eff3);
    // 10: corrupt one pure substitution entry
    TermIndex idx(m.homs0);
    auto it = m.psub.begin();
    while (true) {
      bool swapped = false;
      for (const auto& x : m.homs0.homs.at(idx.at(it->second)))
        if (x != it->second) { it->second = x; swapped = true; break; }
      if (swapped) break;
      ++it;
    }
    write("mutant-10-enriched.json", enriched_to_json(m));
  }
  return 0;
}
