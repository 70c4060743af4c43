#ifndef MULTIARITY_CLONE_HPP
#define MULTIARITY_CLONE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multiarity/table.hpp"

namespace multiarity {

// A finite truncated abstract clone: projections for every tabled context
// and a (possibly partial) simultaneous substitution table. Substitution
// never grows contexts, so a clone table can in principle be closed; the
// validator reports missing entries as "sub-closure gaps".
struct Clone {
  MultiHomTable table;
  // (context, 1-based index) -> projection term of Mhom(ctx; ctx[j-1]).
  std::map<std::pair<std::vector<std::string>, int>, std::string> projections;
  // (t, [u_1..u_m]) -> result term.
  std::map<std::pair<std::string, std::vector<std::string>>, std::string> sub;

  const std::string* proj(const std::vector<std::string>& ctx, int j) const {
    auto it = projections.find({ctx, j});
    return it == projections.end() ? nullptr : &it->second;
  }

  const std::string* subst(const std::string& t,
                           const std::vector<std::string>& us) const {
    auto it = sub.find({t, us});
    return it == sub.end() ? nullptr : &it->second;
  }

  bool operator==(const Clone& o) const {
    return table == o.table && projections == o.projections && sub == o.sub;
  }
};

// Shape validation shared by the law checkers: projections and sub entries
// must type-check against the hom table.
inline void validate_clone_shape(const Clone& c) {
  c.table.validate_shape();
  TermIndex index(c.table);
  for (const auto& [key, term] : c.projections) {
    const auto& [ctx, j] = key;
    if (j < 1 || j > static_cast<int>(ctx.size()))
      throw ShapeError("clone: projection index " + std::to_string(j) +
                       " out of range");
    HomKey expect{ctx, ctx[j - 1]};
    if (!c.table.has_term(expect, term))
      throw ShapeError("clone: projection " + term + " is not tabled in " +
                       expect.str());
  }
  // Every tabled context must have all its projections.
  std::map<std::vector<std::string>, bool> contexts;
  for (const auto& [k, terms] : c.table.homs) contexts[k.ctx] = true;
  for (const auto& [ctx, _] : contexts) {
    (void)_;
    for (int j = 1; j <= static_cast<int>(ctx.size()); ++j)
      if (!c.proj(ctx, j))
        throw ShapeError("clone: missing projection #" + std::to_string(j) +
                         " for context of " +
                         HomKey{ctx, ctx[0]}.str());
  }
  for (const auto& [key, result] : c.sub) {
    const auto& [t, us] = key;
    HomKey tk = index.at(t);
    if (us.size() != tk.ctx.size())
      throw ShapeError("clone: sub arity mismatch at " +
                       instance_str(t, us));
    if (us.empty()) throw ShapeError("clone: empty sub tuple at " + t);
    HomKey u0 = index.at(us[0]);
    for (std::size_t i = 0; i < us.size(); ++i) {
      HomKey uk = index.at(us[i]);
      if (uk.ctx != u0.ctx)
        throw ShapeError("clone: sub arguments of " + instance_str(t, us) +
                         " have different contexts");
      if (uk.tgt != tk.ctx[i])
        throw ShapeError("clone: sub argument " + us[i] + " of " +
                         instance_str(t, us) + " targets " + uk.tgt +
                         ", expected " + tk.ctx[i]);
    }
    HomKey rk{u0.ctx, tk.tgt};
    if (!c.table.has_term(rk, result))
      throw ShapeError("clone: sub result " + result + " of " +
                       instance_str(t, us) + " is not tabled in " + rk.str());
  }
}

// The clone laws, checked on every instance whose substitutions are all
// tabled ("where defined"). Also reports sub-closure gaps: tuples that
// type-check but have no sub entry.
inline Report validate_clone(const Clone& c) {
  validate_clone_shape(c);
  Report rep;
  TermIndex index(c.table);

  // Group hom-sets by context for fast "all u_i over a common context".
  std::map<std::vector<std::string>, std::vector<HomKey>> by_ctx;
  for (const auto& [k, terms] : c.table.homs) by_ctx[k.ctx].push_back(k);

  auto terms_of = [&](const HomKey& k) { return c.table.find_hom(k); };

  // Left unitality: pr^j[u_1..u_n] = u_j, and sub-closure bookkeeping.
  for (const auto& [bctx, bkeys] : by_ctx) {
    for (const auto& [actx, _] : by_ctx) {
      (void)_;
      // Argument tuples u_i : actx -> bctx[i].
      std::vector<const std::vector<std::string>*> choices;
      bool ok = true;
      for (const auto& b : bctx) {
        const auto* h = terms_of({actx, b});
        if (!h || h->empty()) { ok = false; break; }
        choices.push_back(h);
      }
      if (!ok) continue;
      for_each_tuple(choices, [&](const std::vector<std::string>& us) {
        // Closure gaps, over every t in every hom with this source context.
        for (const auto& hk : bkeys)
          for (const auto& t : *terms_of(hk))
            if (!c.subst(t, us))
              rep.gap("sub-closure", instance_str(t, us),
                      "no substitution entry for a type-correct tuple");
        for (int j = 1; j <= static_cast<int>(bctx.size()); ++j) {
          const std::string* pr = c.proj(bctx, j);
          const std::string* r = c.subst(*pr, us);
          if (!r) { ++rep.skipped; continue; }
          ++rep.checked;
          if (*r != us[j - 1])
            rep.violation("left-unit", instance_str(*pr, us),
                          *r + " != " + us[j - 1]);
        }
      });
    }
  }

  // Right unitality: t[pr^1..pr^n] = t.
  for (const auto& [k, terms] : c.table.homs) {
    std::vector<std::string> prs;
    for (int j = 1; j <= static_cast<int>(k.ctx.size()); ++j)
      prs.push_back(*c.proj(k.ctx, j));
    for (const auto& t : terms) {
      const std::string* r = c.subst(t, prs);
      if (!r) { ++rep.skipped; continue; }
      ++rep.checked;
      if (*r != t)
        rep.violation("right-unit", instance_str(t, prs), *r + " != " + t);
    }
  }

  // Associativity: t[u_.][v_.] = t[u_1[v_.],..,u_l[v_.]].
  for (const auto& [tk, tterms] : c.table.homs) {
    for (const auto& [actx, _] : by_ctx) {
      (void)_;
      std::vector<const std::vector<std::string>*> uchoices;
      bool ok = true;
      for (const auto& b : tk.ctx) {
        const auto* h = terms_of({actx, b});
        if (!h || h->empty()) { ok = false; break; }
        uchoices.push_back(h);
      }
      if (!ok) continue;
      for (const auto& [dctx, _2] : by_ctx) {
        (void)_2;
        std::vector<const std::vector<std::string>*> vchoices;
        bool ok2 = true;
        for (const auto& a : actx) {
          const auto* h = terms_of({dctx, a});
          if (!h || h->empty()) { ok2 = false; break; }
          vchoices.push_back(h);
        }
        if (!ok2) continue;
        for_each_tuple(uchoices, [&](const std::vector<std::string>& us) {
          for_each_tuple(vchoices, [&](const std::vector<std::string>& vs) {
            for (const auto& t : tterms) {
              const std::string* tu = c.subst(t, us);
              bool defined = tu != nullptr;
              std::vector<std::string> uvs;
              for (const auto& u : us) {
                const std::string* uv = defined ? c.subst(u, vs) : nullptr;
                if (!uv) { defined = false; break; }
                uvs.push_back(*uv);
              }
              const std::string* lhs =
                  defined ? c.subst(*tu, vs) : nullptr;
              const std::string* rhs =
                  defined && lhs ? c.subst(t, uvs) : nullptr;
              if (!lhs || !rhs) { ++rep.skipped; continue; }
              ++rep.checked;
              if (*lhs != *rhs)
                rep.violation(
                    "associativity",
                    instance_str(instance_str(t, us), vs),
                    *lhs + " != " + *rhs);
            }
          });
        });
      }
    }
  }
  return rep;
}

// A clone morphism: an object map plus a per-hom term map.
struct CloneMorphism {
  const Clone* src = nullptr;
  const Clone* dst = nullptr;
  std::map<std::string, std::string> objMap;
  std::map<std::string, std::string> termMap;  // term-name based, like sub

  HomKey map_key(const HomKey& k) const {
    HomKey out;
    for (const auto& o : k.ctx) out.ctx.push_back(objMap.at(o));
    out.tgt = objMap.at(k.tgt);
    return out;
  }
};

inline Report validate_clone_morphism(const CloneMorphism& f) {
  Report rep;
  const Clone& s = *f.src;
  const Clone& d = *f.dst;
  TermIndex sidx(s.table);
  for (const auto& o : s.table.objects) {
    auto it = f.objMap.find(o);
    if (it == f.objMap.end() || !d.table.has_object(it->second))
      throw ShapeError("clone morphism: object map not into target objects");
  }
  // Term map totality and typing.
  for (const auto& [k, terms] : s.table.homs) {
    HomKey dk = f.map_key(k);
    for (const auto& t : terms) {
      auto it = f.termMap.find(t);
      if (it == f.termMap.end())
        throw ShapeError("clone morphism: no image for term '" + t + "'");
      if (!d.table.has_term(dk, it->second))
        throw ShapeError("clone morphism: image of '" + t +
                         "' is not tabled in " + dk.str());
    }
  }
  // Projections are preserved.
  for (const auto& [key, pr] : s.projections) {
    const auto& [ctx, j] = key;
    std::vector<std::string> dctx;
    for (const auto& o : ctx) dctx.push_back(f.objMap.at(o));
    const std::string* dpr = d.proj(dctx, j);
    ++rep.checked;
    if (!dpr || f.termMap.at(pr) != *dpr)
      rep.violation("morphism-projection",
                    "pr#" + std::to_string(j) + " of " +
                        HomKey{ctx, ctx[j - 1]}.str(),
                    f.termMap.at(pr) + " != " + (dpr ? *dpr : "<missing>"));
  }
  // Substitution is preserved on every defined instance.
  for (const auto& [key, r] : s.sub) {
    const auto& [t, us] = key;
    std::vector<std::string> fus;
    for (const auto& u : us) fus.push_back(f.termMap.at(u));
    const std::string* dres = d.subst(f.termMap.at(t), fus);
    if (!dres) { ++rep.skipped; continue; }
    ++rep.checked;
    if (f.termMap.at(r) != *dres)
      rep.violation("morphism-substitution", instance_str(t, us),
                    f.termMap.at(r) + " != " + *dres);
  }
  return rep;
}

// A transformation between parallel clone morphisms: per-object unary
// components eta_A in Mhom(fA; gA) of the codomain clone.
struct CloneTransformation {
  const CloneMorphism* src = nullptr;  // f
  const CloneMorphism* dst = nullptr;  // g (parallel to f)
  std::map<std::string, std::string> components;
};

// The transformation law: eta_B[f(t)] = g(t)[eta_{A_1}[pr^1],...,
// eta_{A_n}[pr^n]] for every tabled multimap t : A_1..A_n -> B.
inline Report validate_clone_transformation(const CloneTransformation& tr) {
  Report rep;
  const CloneMorphism& f = *tr.src;
  const CloneMorphism& g = *tr.dst;
  if (f.src != g.src || f.dst != g.dst)
    throw ShapeError("clone transformation: morphisms are not parallel");
  const Clone& s = *f.src;
  const Clone& d = *f.dst;
  for (const auto& o : s.table.objects) {
    auto it = tr.components.find(o);
    if (it == tr.components.end())
      throw ShapeError("clone transformation: missing component at '" + o +
                       "'");
    HomKey k{{f.objMap.at(o)}, g.objMap.at(o)};
    if (!d.table.has_term(k, it->second))
      throw ShapeError("clone transformation: component at '" + o +
                       "' is not tabled in " + k.str());
  }
  for (const auto& [k, terms] : s.table.homs) {
    std::vector<std::string> fctx, gctx;
    for (const auto& o : k.ctx) {
      fctx.push_back(f.objMap.at(o));
      gctx.push_back(g.objMap.at(o));
    }
    for (const auto& t : terms) {
      const std::string& eta_b = tr.components.at(k.tgt);
      // LHS: eta_B[f(t)].
      const std::string* lhs = d.subst(eta_b, {f.termMap.at(t)});
      // RHS: g(t)[eta_{A_1}[pr^1_{fctx}],...].
      bool defined = lhs != nullptr;
      std::vector<std::string> args;
      for (std::size_t i = 0; defined && i < k.ctx.size(); ++i) {
        const std::string* pr = d.proj(fctx, static_cast<int>(i + 1));
        const std::string* padded =
            pr ? d.subst(tr.components.at(k.ctx[i]), {*pr}) : nullptr;
        if (!padded) { defined = false; break; }
        args.push_back(*padded);
      }
      const std::string* rhs =
          defined ? d.subst(g.termMap.at(t), args) : nullptr;
      if (!lhs || !rhs) {
        ++rep.skipped;
        rep.gap("transformation", t, "a required substitution is untabled");
        continue;
      }
      ++rep.checked;
      if (*lhs != *rhs)
        rep.violation("transformation", t, *lhs + " != " + *rhs);
    }
  }
  return rep;
}

// Componentwise composite (eps * eta)_A := eps_A[eta_A].
inline CloneTransformation compose_clone_transformations(
    const CloneTransformation& eps, const CloneTransformation& eta) {
  if (eta.dst != eps.src)
    throw ShapeError("compose: transformations are not composable");
  CloneTransformation out;
  out.src = eta.src;
  out.dst = eps.dst;
  const Clone& d = *eta.src->dst;
  for (const auto& [o, comp] : eta.components) {
    const std::string* r = d.subst(eps.components.at(o), {comp});
    if (!r)
      throw CoverageError("compose: substitution " +
                          instance_str(eps.components.at(o), {comp}) +
                          " is untabled");
    out.components[o] = *r;
  }
  return out;
}

// Exhaustive enumeration of clone morphisms c -> fragment, i.e. the
// fragment-relative algebras of c. Backtracking over object and term
// assignments, pruning with projection preservation and every sub entry
// whose participants are all assigned.
inline std::vector<CloneMorphism> clone_algebras(
    const Clone& c, const Clone& fragment, std::size_t guard = 1000000) {
  validate_clone_shape(c);
  validate_clone_shape(fragment);
  std::vector<CloneMorphism> out;

  // Terms of c in a fixed order, with their hom keys.
  std::vector<std::pair<std::string, HomKey>> terms;
  for (const auto& [k, ts] : c.table.homs)
    for (const auto& t : ts) terms.emplace_back(t, k);

  // Reverse projection lookup in c: term -> (ctx, j) if it is a projection.
  std::map<std::string, std::pair<std::vector<std::string>, int>> proj_of;
  for (const auto& [key, pr] : c.projections) proj_of[pr] = key;

  std::vector<std::string> objs = c.table.objects;
  std::map<std::string, std::string> objMap;

  std::function<void(std::size_t)> assign_objects;
  std::function<void(std::size_t, CloneMorphism&)> assign_terms;

  std::size_t visited = 0;
  auto step = [&]() {
    if (++visited > guard)
      throw CapacityError("clone_algebras: search guard exceeded");
  };

  assign_terms = [&](std::size_t i, CloneMorphism& f) {
    if (i == terms.size()) {
      Report rep = validate_clone_morphism(f);
      if (rep.violations.empty()) out.push_back(f);
      return;
    }
    const auto& [t, k] = terms[i];
    HomKey dk = f.map_key(k);
    const auto* cands = fragment.table.find_hom(dk);
    if (!cands) return;
    for (const auto& cand : *cands) {
      step();
      // Projections must map to the matching projection.
      auto pit = proj_of.find(t);
      if (pit != proj_of.end()) {
        std::vector<std::string> dctx;
        for (const auto& o : pit->second.first) dctx.push_back(f.objMap.at(o));
        const std::string* dpr = fragment.proj(dctx, pit->second.second);
        if (!dpr || cand != *dpr) continue;
      }
      f.termMap[t] = cand;
      // Check every sub entry whose terms are all assigned so far.
      bool ok = true;
      for (const auto& [skey, r] : c.sub) {
        const auto& [st, us] = skey;
        auto have = [&](const std::string& x) {
          return f.termMap.count(x) > 0;
        };
        if (!have(st) || !have(r)) continue;
        bool all = true;
        std::vector<std::string> fus;
        for (const auto& u : us) {
          if (!have(u)) { all = false; break; }
          fus.push_back(f.termMap.at(u));
        }
        if (!all) continue;
        const std::string* dres = fragment.subst(f.termMap.at(st), fus);
        if (dres && *dres != f.termMap.at(r)) { ok = false; break; }
      }
      if (ok) assign_terms(i + 1, f);
      f.termMap.erase(t);
    }
  };

  assign_objects = [&](std::size_t i) {
    if (i == objs.size()) {
      CloneMorphism f;
      f.src = &c;
      f.dst = &fragment;
      f.objMap = objMap;
      assign_terms(0, f);
      return;
    }
    for (const auto& d : fragment.table.objects) {
      step();
      objMap[objs[i]] = d;
      assign_objects(i + 1);
      objMap.erase(objs[i]);
    }
  };

  assign_objects(0);
  return out;
}

// The finite fragment of the Set-clone on the given carriers: terms are
// all functions from the induced products into the carriers, projections
// are coordinate projections and substitution is composition with tupling.
// Object i is named "X<i>" and carries carriers[i].
inline Clone set_clone_fragment(const std::vector<FinSet>& carriers,
                                int maxArity,
                                std::size_t hom_guard = 10000) {
  if (carriers.empty())
    throw ShapeError("set_clone_fragment: no carriers given");
  Clone c;
  c.table.maxContext = maxArity;
  std::map<std::string, FinSet> carrier_of;
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    std::string name = "X" + std::to_string(i + 1);
    c.table.objects.push_back(name);
    carrier_of[name] = carriers[i];
  }

  // A term is a function on product tuples, encoded by the sequence of
  // codomain element indices over the domain tuples in product order.
  auto term_name = [](const HomKey& k, const std::vector<std::size_t>& graph) {
    std::string s = k.str() + "#";
    for (auto g : graph) s += std::to_string(g) + ".";
    return s;
  };

  struct HomData {
    FinSet domain;                        // product of the context carriers
    FinSet codomain;
    std::map<std::string, std::vector<std::size_t>> graph_of;  // name -> graph
  };
  std::map<HomKey, HomData> data;

  // Enumerate contexts of length 1..maxArity over the object names.
  std::vector<std::vector<std::string>> contexts;
  std::vector<std::vector<std::string>> frontier{{}};
  for (int len = 1; len <= maxArity; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& pre : frontier)
      for (const auto& o : c.table.objects) {
        auto ctx = pre;
        ctx.push_back(o);
        next.push_back(ctx);
        contexts.push_back(ctx);
      }
    frontier = next;
  }

  for (const auto& ctx : contexts) {
    std::vector<FinSet> comps;
    for (const auto& o : ctx) comps.push_back(carrier_of[o]);
    FinSet dom = product(comps).first;
    for (const auto& tgt : c.table.objects) {
      const FinSet& cod = carrier_of[tgt];
      HomKey k{ctx, tgt};
      double count = 1;
      for (std::size_t i = 0; i < dom.size(); ++i) count *= cod.size();
      if (count > static_cast<double>(hom_guard))
        throw CapacityError("set_clone_fragment: hom-set " + k.str() +
                            " would have " + std::to_string(count) +
                            " terms (guard " + std::to_string(hom_guard) +
                            ")");
      HomData hd;
      hd.domain = dom;
      hd.codomain = cod;
      std::vector<std::string> names;
      std::vector<std::size_t> sizes(dom.size(), cod.size());
      for (const auto& graph : index_tuples(sizes)) {
        std::string n = term_name(k, graph);
        names.push_back(n);
        hd.graph_of[n] = graph;
      }
      c.table.homs[k] = names;
      data[k] = std::move(hd);
    }
  }

  // Projections: the coordinate functions.
  for (const auto& ctx : contexts) {
    std::vector<FinSet> comps;
    for (const auto& o : ctx) comps.push_back(carrier_of[o]);
    auto [dom, projs] = product(comps);
    for (int j = 1; j <= static_cast<int>(ctx.size()); ++j) {
      HomKey k{ctx, ctx[static_cast<std::size_t>(j) - 1]};
      const HomData& hd = data[k];
      std::vector<std::size_t> graph;
      for (const auto& e : dom.elements)
        graph.push_back(hd.codomain.index_of(projs[j - 1](e)));
      c.projections[{ctx, j}] = term_name(k, graph);
    }
  }

  // Substitution: t[u_1,...,u_m] computed extensionally as t after the
  // tupling of the u_i.
  for (const auto& [tk, hd] : data) {
    for (const auto& actx : contexts) {
      std::vector<FinSet> acomps;
      for (const auto& o : actx) acomps.push_back(carrier_of[o]);
      FinSet adom = product(acomps).first;
      std::vector<const HomData*> ahd;
      bool ok = true;
      for (const auto& b : tk.ctx) {
        auto it = data.find({actx, b});
        if (it == data.end()) { ok = false; break; }
        ahd.push_back(&it->second);
      }
      if (!ok) continue;
      HomKey rk{actx, tk.tgt};
      std::vector<const std::vector<std::string>*> choices;
      for (const auto& b : tk.ctx)
        choices.push_back(&c.table.homs[{actx, b}]);
      for_each_tuple(choices, [&](const std::vector<std::string>& us) {
        // Precompute the composite graph index map once per tuple.
        std::vector<std::size_t> midIdx(adom.size());
        for (std::size_t ei = 0; ei < adom.size(); ++ei) {
          std::vector<std::string> mid;
          for (std::size_t i = 0; i < us.size(); ++i) {
            std::size_t vi = ahd[i]->graph_of.at(us[i])[ei];
            mid.push_back(ahd[i]->codomain.elements[vi]);
          }
          midIdx[ei] = hd.domain.index_of(tuple_name(mid));
        }
        for (const auto& t : c.table.homs[tk]) {
          const auto& tg = hd.graph_of.at(t);
          std::vector<std::size_t> graph(adom.size());
          for (std::size_t ei = 0; ei < adom.size(); ++ei)
            graph[ei] = tg[midIdx[ei]];
          c.sub[{t, us}] = term_name(rk, graph);
        }
      });
    }
  }
  return c;
}

}  // namespace multiarity

#endif
