#ifndef MULTIARITY_CATEGORY_HPP
#define MULTIARITY_CATEGORY_HPP

#include <map>
#include <string>
#include <vector>

#include "multiarity/errors.hpp"
#include "multiarity/report.hpp"

namespace multiarity {

// A finite category presentation: named objects, named arrows per ordered
// pair, identities, and a total composition table. Arrow names are unique
// across the whole category so comp can be keyed by names alone.
struct FinCategory {
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      homs;                                      // (src, tgt) -> arrows
  std::map<std::string, std::string> ids;        // object -> arrow
  std::map<std::pair<std::string, std::string>, std::string> comp;  // (g,f)

  bool has_object(const std::string& o) const {
    for (const auto& x : objects)
      if (x == o) return true;
    return false;
  }

  const std::vector<std::string>* find_hom(const std::string& a,
                                           const std::string& b) const {
    auto it = homs.find({a, b});
    return it == homs.end() ? nullptr : &it->second;
  }

  std::pair<std::string, std::string> home(const std::string& arrow) const {
    for (const auto& [k, arrows] : homs)
      for (const auto& f : arrows)
        if (f == arrow) return k;
    throw ShapeError("FinCategory: unknown arrow '" + arrow + "'");
  }

  const std::string* compose(const std::string& g,
                             const std::string& f) const {
    auto it = comp.find({g, f});
    return it == comp.end() ? nullptr : &it->second;
  }

  bool operator==(const FinCategory& o) const {
    return objects == o.objects && homs == o.homs && ids == o.ids &&
           comp == o.comp;
  }
};

inline void validate_fincategory_shape(const FinCategory& c) {
  std::map<std::string, std::pair<std::string, std::string>> seen;
  for (const auto& [k, arrows] : c.homs) {
    if (!c.has_object(k.first) || !c.has_object(k.second))
      throw ShapeError("FinCategory: hom between unknown objects " + k.first +
                       " -> " + k.second);
    for (const auto& f : arrows) {
      auto [it, fresh] = seen.emplace(f, k);
      if (!fresh)
        throw ShapeError("FinCategory: duplicate arrow name '" + f + "'");
    }
  }
  for (const auto& o : c.objects) {
    auto it = c.ids.find(o);
    if (it == c.ids.end())
      throw ShapeError("FinCategory: missing identity at '" + o + "'");
    auto h = seen.find(it->second);
    if (h == seen.end() || h->second != std::make_pair(o, o))
      throw ShapeError("FinCategory: identity at '" + o +
                       "' is not an endo-arrow");
  }
  for (const auto& [k, r] : c.comp) {
    const auto& [g, f] = k;
    auto gf = seen.find(g), ff = seen.find(f), rf = seen.find(r);
    if (gf == seen.end() || ff == seen.end() || rf == seen.end())
      throw ShapeError("FinCategory: comp entry with unknown arrow");
    if (ff->second.second != gf->second.first)
      throw ShapeError("FinCategory: comp (" + g + "," + f +
                       ") is not composable");
    if (rf->second != std::make_pair(ff->second.first, gf->second.second))
      throw ShapeError("FinCategory: comp (" + g + "," + f +
                       ") result has wrong endpoints");
  }
}

// Category laws, checked where the composition table is defined; a missing
// composable pair is a coverage gap (truncated free categories are partial).
inline Report validate_fincategory(const FinCategory& c) {
  validate_fincategory_shape(c);
  Report rep;
  for (const auto& [k, arrows] : c.homs) {
    const std::string& id_src = c.ids.at(k.first);
    const std::string& id_tgt = c.ids.at(k.second);
    for (const auto& f : arrows) {
      const std::string* r = c.compose(f, id_src);
      const std::string* l = c.compose(id_tgt, f);
      if (!r || !l) {
        rep.gap("category-unit", f, "identity composite untabled");
        ++rep.skipped;
        continue;
      }
      ++rep.checked;
      if (*r != f)
        rep.violation("category-right-unit", f, *r + " != " + f);
      if (*l != f)
        rep.violation("category-left-unit", f, *l + " != " + f);
    }
  }
  for (const auto& [k1, arrows1] : c.homs)
    for (const auto& f : arrows1)
      for (const auto& [k2, arrows2] : c.homs) {
        if (k2.first != k1.second) continue;
        for (const auto& g : arrows2)
          for (const auto& [k3, arrows3] : c.homs) {
            if (k3.first != k2.second) continue;
            for (const auto& h : arrows3) {
              const std::string* gf = c.compose(g, f);
              const std::string* hg = c.compose(h, g);
              const std::string* l = gf ? c.compose(h, *gf) : nullptr;
              const std::string* r = hg ? c.compose(*hg, f) : nullptr;
              if (!l || !r) {
                ++rep.skipped;
                continue;
              }
              ++rep.checked;
              if (*l != *r)
                rep.violation("category-associativity",
                              h + "." + g + "." + f, *l + " != " + *r);
            }
          }
      }
  return rep;
}

}  // namespace multiarity

#endif
