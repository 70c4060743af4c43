#ifndef MULTIARITY_MULTICAT_HPP
#define MULTIARITY_MULTICAT_HPP

#include <map>
#include <string>
#include <vector>

#include "multiarity/category.hpp"
#include "multiarity/clone.hpp"
#include "multiarity/table.hpp"

namespace multiarity {

// A finite truncated multicategory: identities plus simultaneous
// substitution whose result context is the concatenation of the inner
// contexts. Concatenation can exceed the truncation bound, so the sub
// table is genuinely partial: gaps are coverage, not violations.
struct Multicat {
  MultiHomTable table;
  std::map<std::string, std::string> ids;  // object -> term of Mhom(A;A)
  std::map<std::pair<std::string, std::vector<std::string>>, std::string> sub;

  const std::string* subst(const std::string& t,
                           const std::vector<std::string>& us) const {
    auto it = sub.find({t, us});
    return it == sub.end() ? nullptr : &it->second;
  }

  bool operator==(const Multicat& o) const {
    return table == o.table && ids == o.ids && sub == o.sub;
  }
};

inline void validate_multicat_shape(const Multicat& m) {
  m.table.validate_shape();
  TermIndex index(m.table);
  for (const auto& o : m.table.objects) {
    auto it = m.ids.find(o);
    if (it == m.ids.end())
      throw ShapeError("multicat: missing identity at '" + o + "'");
    if (!m.table.has_term({{o}, o}, it->second))
      throw ShapeError("multicat: identity at '" + o + "' is not tabled in " +
                       HomKey{{o}, o}.str());
  }
  for (const auto& [key, result] : m.sub) {
    const auto& [t, us] = key;
    HomKey tk = index.at(t);
    if (us.size() != tk.ctx.size())
      throw ShapeError("multicat: sub arity mismatch at " +
                       instance_str(t, us, "<", ">"));
    std::vector<std::string> concat;
    for (std::size_t i = 0; i < us.size(); ++i) {
      HomKey uk = index.at(us[i]);
      if (uk.tgt != tk.ctx[i])
        throw ShapeError("multicat: sub argument " + us[i] + " of " +
                         instance_str(t, us, "<", ">") + " targets " + uk.tgt +
                         ", expected " + tk.ctx[i]);
      concat.insert(concat.end(), uk.ctx.begin(), uk.ctx.end());
    }
    HomKey rk{concat, tk.tgt};
    if (static_cast<int>(concat.size()) > m.table.maxContext)
      throw ShapeError("multicat: sub result context of " +
                       instance_str(t, us, "<", ">") +
                       " exceeds the truncation bound");
    if (!m.table.has_term(rk, result))
      throw ShapeError("multicat: sub result " + result + " of " +
                       instance_str(t, us, "<", ">") + " is not tabled in " +
                       rk.str());
  }
}

// The multicategory laws, where defined: id_B<u> = u, t<id_.> = t, and
// t<u_.><v_..> = t<u_1<v_1.>,...,u_l<v_l.>>.
inline Report validate_multicat(const Multicat& m) {
  validate_multicat_shape(m);
  Report rep;
  TermIndex index(m.table);

  // Left unitality.
  for (const auto& [k, terms] : m.table.homs)
    for (const auto& u : terms) {
      const std::string& id = m.ids.at(k.tgt);
      const std::string* r = m.subst(id, {u});
      if (!r) {
        ++rep.skipped;
        rep.gap("left-unit", instance_str(id, {u}, "<", ">"),
                "substitution untabled");
        continue;
      }
      ++rep.checked;
      if (*r != u)
        rep.violation("left-unit", instance_str(id, {u}, "<", ">"),
                      *r + " != " + u);
    }

  // Right unitality.
  for (const auto& [k, terms] : m.table.homs) {
    std::vector<std::string> idv;
    for (const auto& b : k.ctx) idv.push_back(m.ids.at(b));
    for (const auto& t : terms) {
      const std::string* r = m.subst(t, idv);
      if (!r) {
        ++rep.skipped;
        rep.gap("right-unit", instance_str(t, idv, "<", ">"),
                "substitution untabled");
        continue;
      }
      ++rep.checked;
      if (*r != t)
        rep.violation("right-unit", instance_str(t, idv, "<", ">"),
                      *r + " != " + t);
    }
  }

  // Associativity over pairs of tabled sub entries: (t,us)->r1 then
  // (r1,vs)->lhs, with vs split along the contexts of the u_i.
  std::map<std::string, std::vector<
      const std::pair<const std::pair<std::string, std::vector<std::string>>,
                      std::string>*>> by_outer;
  for (const auto& e : m.sub) by_outer[e.first.first].push_back(&e);

  for (const auto& e1 : m.sub) {
    const auto& [t, us] = e1.first;
    const std::string& r1 = e1.second;
    auto it = by_outer.find(r1);
    if (it == by_outer.end()) continue;
    for (const auto* e2 : it->second) {
      const auto& vs = e2->first.second;
      const std::string& lhs = e2->second;
      // Split vs along the context lengths of the u_i.
      bool defined = true;
      std::vector<std::string> inner;
      std::size_t off = 0;
      for (const auto& u : us) {
        std::size_t len = index.at(u).ctx.size();
        std::vector<std::string> block(vs.begin() + off,
                                       vs.begin() + off + len);
        off += len;
        const std::string* uv = m.subst(u, block);
        if (!uv) { defined = false; break; }
        inner.push_back(*uv);
      }
      const std::string* rhs = defined ? m.subst(t, inner) : nullptr;
      if (!rhs) {
        ++rep.skipped;
        continue;
      }
      ++rep.checked;
      if (lhs != *rhs)
        rep.violation("associativity",
                      instance_str(instance_str(t, us, "<", ">"), vs, "<",
                                   ">"),
                      lhs + " != " + *rhs);
    }
  }
  return rep;
}

// The canonical multicategory of a clone: same table, identity = first
// projection, and t<u_1,...,u_m> = t[u_1[pr-block 1],...,u_m[pr-block m]]
// where block i re-indexes u_i's context into the concatenation.
inline Multicat clone_to_multicat(const Clone& c) {
  validate_clone_shape(c);
  Multicat m;
  m.table = c.table;
  TermIndex index(c.table);
  for (const auto& o : c.table.objects) {
    const std::string* pr = c.proj({o}, 1);
    if (!pr)
      throw CoverageError("clone_to_multicat: missing pr^1 at '" + o + "'");
    m.ids[o] = *pr;
  }

  // Enumerate typeable tuples: t in any hom, u_i tabled with target the
  // i-th context object, concatenation within bounds.
  std::map<std::string, std::vector<HomKey>> by_tgt;
  for (const auto& [k, terms] : c.table.homs) by_tgt[k.tgt].push_back(k);

  for (const auto& [tk, tterms] : c.table.homs) {
    // Choose a hom key (hence a context) for every argument slot.
    std::vector<std::vector<HomKey>> slot_keys;
    bool ok = true;
    for (const auto& b : tk.ctx) {
      auto it = by_tgt.find(b);
      if (it == by_tgt.end()) { ok = false; break; }
      slot_keys.push_back(it->second);
    }
    if (!ok) continue;
    std::vector<std::size_t> sizes;
    for (const auto& ks : slot_keys) sizes.push_back(ks.size());
    for (const auto& pick : index_tuples(sizes)) {
      std::vector<HomKey> uks;
      std::vector<std::string> concat;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        uks.push_back(slot_keys[i][pick[i]]);
        concat.insert(concat.end(), uks[i].ctx.begin(), uks[i].ctx.end());
      }
      if (static_cast<int>(concat.size()) > c.table.maxContext) continue;
      // The result would live in a hom over the concatenated context; if
      // the clone tables no such context, there is nothing to record.
      bool ctx_tabled = false;
      for (const auto& [hk, _] : c.table.homs)
        if (hk.ctx == concat) { ctx_tabled = true; break; }
      if (!ctx_tabled) continue;
      // Projection padding per slot.
      std::vector<std::vector<std::string>> pads;
      bool have_pads = true;
      std::size_t off = 0;
      for (const auto& uk : uks) {
        std::vector<std::string> pad;
        for (std::size_t j = 0; j < uk.ctx.size(); ++j) {
          const std::string* pr =
              c.proj(concat, static_cast<int>(off + j + 1));
          if (!pr) { have_pads = false; break; }
          pad.push_back(*pr);
        }
        if (!have_pads) break;
        off += uk.ctx.size();
        pads.push_back(pad);
      }
      if (!have_pads)
        throw CoverageError(
            "clone_to_multicat: missing projections for a concatenated "
            "context");
      std::vector<const std::vector<std::string>*> choices;
      for (const auto& uk : uks) choices.push_back(c.table.find_hom(uk));
      for_each_tuple(choices, [&](const std::vector<std::string>& us) {
        std::vector<std::string> padded;
        bool defined = true;
        for (std::size_t i = 0; i < us.size(); ++i) {
          const std::string* p = c.subst(us[i], pads[i]);
          if (!p) { defined = false; break; }
          padded.push_back(*p);
        }
        for (const auto& t : tterms) {
          if (!defined) {
            throw CoverageError("clone_to_multicat: clone sub missing for " +
                                instance_str(t, us, "<", ">"));
          }
          const std::string* r = c.subst(t, padded);
          if (!r)
            throw CoverageError("clone_to_multicat: clone sub missing for " +
                                instance_str(t, us, "<", ">"));
          m.sub[{t, us}] = *r;
        }
      });
    }
  }
  return m;
}

// The discrete multicategory of a category: unary hom-sets copy the
// category, every higher arity is empty.
inline Multicat discrete_multicat(const FinCategory& cat, int maxContext) {
  Report laws = validate_fincategory(cat);
  if (!laws.violations.empty())
    throw ShapeError("discrete_multicat: input fails category laws: " +
                     laws.violations[0].law + " at " +
                     laws.violations[0].instance);
  Multicat m;
  m.table.objects = cat.objects;
  m.table.maxContext = maxContext;
  for (const auto& [k, arrows] : cat.homs)
    m.table.homs[{{k.first}, k.second}] = arrows;
  m.ids = cat.ids;
  for (const auto& [k, r] : cat.comp)
    m.sub[{k.first, {k.second}}] = r;
  return m;
}

// Restriction of a multicategory to its unary contexts, as a category.
inline FinCategory unary_restriction(const Multicat& m) {
  FinCategory c;
  c.objects = m.table.objects;
  for (const auto& [k, terms] : m.table.homs)
    if (k.ctx.size() == 1) c.homs[{k.ctx[0], k.tgt}] = terms;
  c.ids = m.ids;
  for (const auto& [key, r] : m.sub) {
    const auto& [t, us] = key;
    if (us.size() == 1 && c.comp.find({t, us[0]}) == c.comp.end()) {
      // Keep only composites between unary terms.
      bool unary = false;
      for (const auto& [k, terms] : c.homs)
        for (const auto& x : terms)
          if (x == us[0]) unary = true;
      if (unary) c.comp[{t, us[0]}] = r;
    }
  }
  return c;
}

struct MulticatMorphism {
  const Multicat* src = nullptr;
  const Multicat* dst = nullptr;
  std::map<std::string, std::string> objMap;
  std::map<std::string, std::string> termMap;

  HomKey map_key(const HomKey& k) const {
    HomKey out;
    for (const auto& o : k.ctx) out.ctx.push_back(objMap.at(o));
    out.tgt = objMap.at(k.tgt);
    return out;
  }
};

inline Report validate_multicat_morphism(const MulticatMorphism& f) {
  Report rep;
  const Multicat& s = *f.src;
  const Multicat& d = *f.dst;
  for (const auto& o : s.table.objects)
    if (!f.objMap.count(o) || !d.table.has_object(f.objMap.at(o)))
      throw ShapeError("multicat morphism: object map not into target");
  for (const auto& [k, terms] : s.table.homs) {
    HomKey dk = f.map_key(k);
    for (const auto& t : terms) {
      if (!f.termMap.count(t))
        throw ShapeError("multicat morphism: no image for term '" + t + "'");
      if (!d.table.has_term(dk, f.termMap.at(t)))
        throw ShapeError("multicat morphism: image of '" + t +
                         "' is not tabled in " + dk.str());
    }
  }
  for (const auto& [o, id] : s.ids) {
    ++rep.checked;
    if (f.termMap.at(id) != d.ids.at(f.objMap.at(o)))
      rep.violation("morphism-identity", o,
                    f.termMap.at(id) + " != " + d.ids.at(f.objMap.at(o)));
  }
  for (const auto& [key, r] : s.sub) {
    const auto& [t, us] = key;
    std::vector<std::string> fus;
    for (const auto& u : us) fus.push_back(f.termMap.at(u));
    const std::string* dres = d.subst(f.termMap.at(t), fus);
    if (!dres) { ++rep.skipped; continue; }
    ++rep.checked;
    if (f.termMap.at(r) != *dres)
      rep.violation("morphism-substitution", instance_str(t, us, "<", ">"),
                    f.termMap.at(r) + " != " + *dres);
  }
  return rep;
}

struct MulticatTransformation {
  const MulticatMorphism* src = nullptr;  // f
  const MulticatMorphism* dst = nullptr;  // g
  std::map<std::string, std::string> components;  // A -> term in Mhom(fA;gA)
};

// eta_B<f(t)> = g(t)<eta_{A_1},...,eta_{A_n}> per tabled multimap.
inline Report validate_multicat_transformation(
    const MulticatTransformation& tr) {
  Report rep;
  const MulticatMorphism& f = *tr.src;
  const MulticatMorphism& g = *tr.dst;
  if (f.src != g.src || f.dst != g.dst)
    throw ShapeError("multicat transformation: morphisms are not parallel");
  const Multicat& s = *f.src;
  const Multicat& d = *f.dst;
  for (const auto& o : s.table.objects) {
    if (!tr.components.count(o))
      throw ShapeError("multicat transformation: missing component at '" + o +
                       "'");
    HomKey k{{f.objMap.at(o)}, g.objMap.at(o)};
    if (!d.table.has_term(k, tr.components.at(o)))
      throw ShapeError("multicat transformation: component at '" + o +
                       "' is not tabled in " + k.str());
  }
  for (const auto& [k, terms] : s.table.homs) {
    std::vector<std::string> etas;
    for (const auto& a : k.ctx) etas.push_back(tr.components.at(a));
    const std::string& eta_b = tr.components.at(k.tgt);
    for (const auto& t : terms) {
      const std::string* lhs = d.subst(eta_b, {f.termMap.at(t)});
      const std::string* rhs = d.subst(g.termMap.at(t), etas);
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

inline MulticatTransformation compose_multicat_transformations(
    const MulticatTransformation& eps, const MulticatTransformation& eta) {
  if (eta.dst != eps.src)
    throw ShapeError("compose: transformations are not composable");
  MulticatTransformation out;
  out.src = eta.src;
  out.dst = eps.dst;
  const Multicat& d = *eta.src->dst;
  for (const auto& [o, comp] : eta.components) {
    const std::string* r = d.subst(eps.components.at(o), {comp});
    if (!r)
      throw CoverageError("compose: substitution " +
                          instance_str(eps.components.at(o), {comp}, "<",
                                       ">") +
                          " is untabled");
    out.components[o] = *r;
  }
  return out;
}

}  // namespace multiarity

#endif
