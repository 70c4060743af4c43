#ifndef MULTIARITY_EFFECTFUL_HPP
#define MULTIARITY_EFFECTFUL_HPP

#include <map>
#include <string>
#include <vector>

#include "multiarity/multicat.hpp"
#include "multiarity/premulticat.hpp"

namespace multiarity {

// An effectful multicategory: a multicategory of pure terms, a
// premulticategory of effectful terms over the same objects, and an
// identity-on-objects inclusion J whose images are central.
struct EffectfulMulticat {
  Multicat pure;
  Premulticat eff;
  std::map<std::string, std::string> J;  // pure term -> eff term

  bool operator==(const EffectfulMulticat& o) const {
    return pure == o.pure && eff == o.eff && J == o.J;
  }
};

inline Report validate_effectful(const EffectfulMulticat& e) {
  if (e.pure.table.objects != e.eff.table.objects)
    throw ShapeError("effectful: pure and effectful object sets differ");
  Report rep;
  {
    Report r = validate_multicat(e.pure);
    for (auto& v : r.violations) v.law = "pure-" + v.law;
    rep.merge(r);
  }
  {
    Report r = validate_premulticat(e.eff);
    for (auto& v : r.violations) v.law = "eff-" + v.law;
    rep.merge(r);
  }

  // J as a premulticategory morphism from the id-padded view of pure.
  Premulticat lowered = multicat_to_premulticat(e.pure);
  PremultMorphism j;
  j.src = &lowered;
  j.dst = &e.eff;
  for (const auto& o : e.pure.table.objects) j.objMap[o] = o;
  j.termMap = e.J;
  {
    Report r = validate_premult_morphism(j);
    for (auto& v : r.violations) v.law = "J-" + v.law;
    rep.merge(r);
  }

  // Every J-image must be central in the effectful part.
  std::map<std::string, bool> image;
  for (const auto& [t, jt] : e.J) {
    (void)t;
    image[jt] = true;
  }
  for (const auto& [t, jt] : e.J) {
    CentralityResult c = is_central(e.eff, jt);
    ++rep.checked;
    if (!c.central)
      rep.violation("J-image-centrality", t + " -> " + jt, c.witness);
  }

  // Central effectful terms outside J's image are legal; list them.
  for (const auto& [k, terms] : e.eff.table.homs) {
    (void)k;
    for (const auto& t : terms)
      if (!image.count(t) && is_central(e.eff, t).central)
        rep.info("central-outside-image", t,
                 "central within table but not a J-image");
  }
  return rep;
}

// Every premulticategory is effectful: take the centre as the pure part,
// with simultaneous substitution derived by iterating sub1, and J the
// inclusion.
inline EffectfulMulticat premult_to_effectful(const Premulticat& p) {
  EffectfulMulticat e;
  e.eff = p;
  Premulticat z = centre(p);
  e.pure.table = z.table;
  e.pure.ids = z.ids;
  TermIndex idx(z.table);
  // Simultaneous substitution over the centre, where every iterated step
  // stays within the table.
  std::map<std::string, std::vector<HomKey>> by_tgt;
  for (const auto& [k, terms] : z.table.homs) by_tgt[k.tgt].push_back(k);
  for (const auto& [tk, terms] : z.table.homs) {
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
      std::size_t concat = 0;
      std::vector<const std::vector<std::string>*> choices;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        const HomKey& uk = slot_keys[i][pick[i]];
        concat += uk.ctx.size();
        choices.push_back(z.table.find_hom(uk));
      }
      if (static_cast<int>(concat) > z.table.maxContext) continue;
      for (const auto& t : terms)
        for_each_tuple(choices, [&](const std::vector<std::string>& us) {
          const std::string* r = try_isub(z, idx, t, 1, us);
          if (r) e.pure.sub[{t, us}] = *r;
        });
    }
  }
  for (const auto& [k, terms] : z.table.homs) {
    (void)k;
    for (const auto& t : terms) e.J[t] = t;
  }
  // The derived pure part must be a lawful multicategory.
  Report r = validate_multicat(e.pure);
  if (!r.violations.empty())
    throw InternalConsistencyError(
        "premult_to_effectful: derived pure part violates " +
        r.violations[0].law + " at " + r.violations[0].instance);
  return e;
}

// A morphism of effectful multicategories: a pure and an effectful leg
// agreeing under the inclusions.
struct EffectfulMorphism {
  const EffectfulMulticat* src = nullptr;
  const EffectfulMulticat* dst = nullptr;
  MulticatMorphism f0;
  PremultMorphism f1;
};

inline Report validate_effectful_morphism(const EffectfulMorphism& m) {
  if (!m.src || !m.dst || m.f0.src != &m.src->pure ||
      m.f0.dst != &m.dst->pure || m.f1.src != &m.src->eff ||
      m.f1.dst != &m.dst->eff)
    throw ShapeError("effectful morphism: legs do not match the endpoints");
  if (m.f0.objMap != m.f1.objMap)
    throw ShapeError("effectful morphism: legs disagree on objects");
  Report rep;
  {
    Report r = validate_multicat_morphism(m.f0);
    for (auto& v : r.violations) v.law = "pure-" + v.law;
    rep.merge(r);
  }
  {
    Report r = validate_premult_morphism(m.f1);
    for (auto& v : r.violations) v.law = "eff-" + v.law;
    rep.merge(r);
  }
  // The square: J after the pure leg equals the effectful leg after J.
  TermIndex sidx(m.src->pure.table);
  for (const auto& [k, terms] : m.src->pure.table.homs) {
    (void)k;
    for (const auto& t : terms) {
      ++rep.checked;
      const std::string& via_pure = m.dst->J.at(m.f0.termMap.at(t));
      const std::string& via_eff = m.f1.termMap.at(m.src->J.at(t));
      if (via_pure != via_eff)
        rep.violation("inclusion-square",
                      t + " in " + sidx.at(t).str(),
                      via_pure + " != " + via_eff);
    }
  }
  return rep;
}

}  // namespace multiarity

#endif
