#ifndef MULTIARITY_FREECONS_HPP
#define MULTIARITY_FREECONS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multiarity/arrowcat.hpp"
#include "multiarity/category.hpp"
#include "multiarity/clone.hpp"
#include "multiarity/multicat.hpp"

namespace multiarity {

namespace detail {

// All object tuples of length 1..maxLen over the given names, shortest
// first, in lexicographic order within each length.
inline std::vector<std::vector<std::string>> object_tuples(
    const std::vector<std::string>& objects, int maxLen) {
  std::vector<std::vector<std::string>> out;
  for (int n = 1; n <= maxLen; ++n) {
    std::vector<std::size_t> sizes(n, objects.size());
    for (const auto& idx : index_tuples(sizes)) {
      std::vector<std::string> tup;
      for (auto i : idx) tup.push_back(objects[i]);
      out.push_back(std::move(tup));
    }
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Free clone on a finite category.
//
// Terms of Mhom(A_1..A_n; B) are tagged arrows (j, f) with f: A_j -> B;
// the projection at slot j is (j, id_{A_j}) and substitution composes the
// underlying arrows: (i,f)[(k_1,g_1),..,(k_n,g_n)] = (k_i, f.g_i).
// ---------------------------------------------------------------------------

inline std::string free_clone_term(const HomKey& k, int j,
                                   const std::string& f) {
  return k.str() + "#" + std::to_string(j) + ":" + f;
}

// Recover the tag (j, f) from a generated term name.
inline std::pair<int, std::string> free_clone_untag(const std::string& term) {
  auto hash = term.rfind('#');
  auto colon = term.find(':', hash);
  if (hash == std::string::npos || colon == std::string::npos)
    throw ShapeError("free clone: malformed term name '" + term + "'");
  return {std::stoi(term.substr(hash + 1, colon - hash - 1)),
          term.substr(colon + 1)};
}

inline Clone free_clone(const FinCategory& cat, int maxContext) {
  Report laws = validate_fincategory(cat);
  if (!laws.pass())
    throw ShapeError("free_clone: input category violates " +
                     laws.violations[0].law + " at " +
                     laws.violations[0].instance);
  Clone c;
  c.table.objects = cat.objects;
  c.table.maxContext = maxContext;

  auto ctxs = detail::object_tuples(cat.objects, maxContext);
  for (const auto& ctx : ctxs)
    for (const auto& b : cat.objects) {
      HomKey k{ctx, b};
      std::vector<std::string> terms;
      for (std::size_t j = 1; j <= ctx.size(); ++j) {
        const auto* hom = cat.find_hom(ctx[j - 1], b);
        if (!hom) continue;
        for (const auto& f : *hom)
          terms.push_back(free_clone_term(k, static_cast<int>(j), f));
      }
      if (!terms.empty()) c.table.homs[k] = std::move(terms);
    }

  for (const auto& ctx : ctxs)
    for (std::size_t j = 1; j <= ctx.size(); ++j)
      c.projections[{ctx, static_cast<int>(j)}] = free_clone_term(
          {ctx, ctx[j - 1]}, static_cast<int>(j), cat.ids.at(ctx[j - 1]));

  // Substitution: close the table over every typeable instance.
  TermIndex idx(c.table);
  for (const auto& [tk, terms] : c.table.homs) {
    for (const auto& inner : ctxs) {
      // Candidate arguments per slot share the inner context.
      std::vector<const std::vector<std::string>*> choices;
      bool ok = true;
      for (const auto& a : tk.ctx) {
        const auto* hom = c.table.find_hom({inner, a});
        if (!hom) { ok = false; break; }
        choices.push_back(hom);
      }
      if (!ok) continue;
      for (const auto& t : terms) {
        auto [i, f] = free_clone_untag(t);
        for_each_tuple(choices, [&, i, f](const std::vector<std::string>& us) {
          auto [ki, gi] = free_clone_untag(us[i - 1]);
          const std::string* fg = cat.compose(f, gi);
          if (!fg)
            throw CoverageError("free_clone: composition (" + f + "," + gi +
                                ") is untabled in the input category");
          c.sub[{t, us}] = free_clone_term({inner, tk.tgt}, ki, *fg);
        });
      }
    }
  }
  return c;
}

// The unit: an arrow f: A -> B goes to the tagged unary term (1, f).
inline std::string free_clone_unit(const std::string& a, const std::string& b,
                                   const std::string& f) {
  return free_clone_term({{a}, b}, 1, f);
}

// Functor data from the category underlying a free clone into the unary
// part of a target clone.
struct FunctorData {
  std::map<std::string, std::string> objMap;
  std::map<std::string, std::string> arrowMap;  // cat arrow -> unary term
};

// The canonical extension of a functor to the free clone: a tagged term
// (j, f) goes to F(f) substituted with the j-th projection of the mapped
// context.
inline CloneMorphism mediating_clone_morphism(const Clone& freec,
                                              const Clone& target,
                                              const FunctorData& F) {
  CloneMorphism m;
  m.src = &freec;
  m.dst = &target;
  m.objMap = F.objMap;
  TermIndex idx(freec.table);
  for (const auto& [k, terms] : freec.table.homs) {
    std::vector<std::string> fctx;
    for (const auto& a : k.ctx) fctx.push_back(F.objMap.at(a));
    for (const auto& t : terms) {
      auto [j, f] = free_clone_untag(t);
      auto fa = F.arrowMap.find(f);
      if (fa == F.arrowMap.end())
        throw ShapeError("mediating morphism: no image for arrow '" + f +
                         "'");
      const std::string* pr = target.proj(fctx, j);
      if (!pr)
        throw CoverageError("mediating morphism: missing projection " +
                            std::to_string(j) + " in the target");
      const std::string* img = target.subst(fa->second, {*pr});
      if (!img)
        throw CoverageError("mediating morphism: target substitution " +
                            instance_str(fa->second, {*pr}) + " is untabled");
      m.termMap[t] = *img;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Free cartesian category on a clone: objects are lists of clone objects,
// an arrow into [B_1..B_m] is an m-tuple of terms, composition is
// componentwise simultaneous substitution. The empty list is terminal.
// ---------------------------------------------------------------------------

struct FreeCartesian {
  FinCategory cat;
  std::map<std::string, std::vector<std::string>> obj_list;
  std::map<std::string, std::vector<std::string>> arrow_parts;
};

inline std::string list_name(const std::vector<std::string>& xs) {
  return "[" + detail::join(xs, ",") + "]";
}

inline std::string tuple_arrow_name(const std::string& src,
                                    const std::string& dst,
                                    const std::vector<std::string>& parts) {
  return src + "->" + dst + ":(" + detail::join(parts, ";") + ")";
}

inline FreeCartesian free_cartesian(const Clone& c, int maxListLen) {
  validate_clone_shape(c);
  if (maxListLen > c.table.maxContext)
    throw ShapeError(
        "free_cartesian: list length bound exceeds the clone's context "
        "bound");
  FreeCartesian fc;
  fc.cat.objects.push_back(list_name({}));
  fc.obj_list[list_name({})] = {};
  for (const auto& l : detail::object_tuples(c.table.objects, maxListLen)) {
    fc.cat.objects.push_back(list_name(l));
    fc.obj_list[list_name(l)] = l;
  }

  // Hom(src, dst) = tuples of terms of Mhom(src; dst_i).
  for (const auto& [sname, src] : fc.obj_list)
    for (const auto& [dname, dst] : fc.obj_list) {
      if (dst.empty()) {
        fc.cat.homs[{sname, dname}] = {tuple_arrow_name(sname, dname, {})};
        fc.arrow_parts[tuple_arrow_name(sname, dname, {})] = {};
        continue;
      }
      if (src.empty()) continue;  // no nullary-context terms are tabled
      std::vector<const std::vector<std::string>*> choices;
      bool ok = true;
      for (const auto& b : dst) {
        const auto* hom = c.table.find_hom({src, b});
        if (!hom) { ok = false; break; }
        choices.push_back(hom);
      }
      if (!ok) continue;
      std::vector<std::string> arrows;
      for_each_tuple(choices, [&](const std::vector<std::string>& parts) {
        std::string name = tuple_arrow_name(sname, dname, parts);
        arrows.push_back(name);
        fc.arrow_parts[name] = parts;
      });
      if (!arrows.empty()) fc.cat.homs[{sname, dname}] = std::move(arrows);
    }

  // Identities are tuples of projections.
  for (const auto& [oname, l] : fc.obj_list) {
    std::vector<std::string> parts;
    for (std::size_t j = 1; j <= l.size(); ++j) {
      const std::string* pr = c.proj(l, static_cast<int>(j));
      if (!pr)
        throw CoverageError("free_cartesian: clone lacks projection " +
                            std::to_string(j) + " for " + oname);
      parts.push_back(*pr);
    }
    fc.cat.ids[oname] = tuple_arrow_name(oname, oname, parts);
  }

  // Composition: substitute the source tuple into each component.
  for (const auto& [k1, fs] : fc.cat.homs)
    for (const auto& [k2, gs] : fc.cat.homs) {
      if (k2.first != k1.second) continue;
      for (const auto& f : fs)
        for (const auto& g : gs) {
          const auto& fp = fc.arrow_parts.at(f);
          const auto& gp = fc.arrow_parts.at(g);
          std::vector<std::string> parts;
          bool ok = true;
          for (const auto& gi : gp) {
            const std::string* r = c.subst(gi, fp);
            if (!r) { ok = false; break; }
            parts.push_back(*r);
          }
          if (ok)
            fc.cat.comp[{g, f}] =
                tuple_arrow_name(k1.first, k2.second, parts);
        }
    }
  return fc;
}

// The empty list is terminal: exactly one arrow from every object.
inline Report check_terminal(const FreeCartesian& fc) {
  Report rep;
  std::string term = list_name({});
  for (const auto& o : fc.cat.objects) {
    const auto* hom = fc.cat.find_hom(o, term);
    ++rep.checked;
    if (!hom || hom->size() != 1)
      rep.violation("terminal-object", o,
                    "expected exactly one arrow into " + term);
  }
  return rep;
}

// Concatenation of lists is a binary product: the tuple of projection
// arrows detects every tabled cone uniquely.
inline Report check_binary_products(const FreeCartesian& fc, const Clone& c,
                                    long max_instances = -1) {
  Report rep;
  auto capped = [&] {
    return max_instances > 0 && rep.checked + rep.skipped >= max_instances;
  };
  for (const auto& [n1, l1] : fc.obj_list) {
    for (const auto& [n2, l2] : fc.obj_list) {
      std::vector<std::string> both = l1;
      both.insert(both.end(), l2.begin(), l2.end());
      std::string pname = list_name(both);
      if (!fc.obj_list.count(pname)) continue;  // beyond the list bound

      // The two projection arrows out of the concatenation.
      auto projections = [&](std::size_t offset,
                             const std::vector<std::string>& l,
                             const std::string& lname)
          -> std::optional<std::string> {
        std::vector<std::string> parts;
        for (std::size_t j = 1; j <= l.size(); ++j) {
          const std::string* pr =
              c.proj(both, static_cast<int>(offset + j));
          if (!pr) return std::nullopt;
          parts.push_back(*pr);
        }
        return tuple_arrow_name(pname, lname, parts);
      };
      auto p1 = projections(0, l1, n1);
      auto p2 = projections(l1.size(), l2, n2);
      if (!both.empty() && (!p1 || !p2)) {
        ++rep.skipped;
        rep.gap("binary-product", pname, "projections unavailable");
        continue;
      }

      for (const auto& x : fc.cat.objects) {
        const auto* cone1 = fc.cat.find_hom(x, n1);
        const auto* cone2 = fc.cat.find_hom(x, n2);
        const auto* into = fc.cat.find_hom(x, pname);
        if (!cone1 || !cone2) continue;
        for (const auto& h1 : *cone1)
          for (const auto& h2 : *cone2) {
            if (capped()) return rep;
            int mediating = 0;
            bool undecided = false;
            if (into)
              for (const auto& m : *into) {
                const std::string* c1 =
                    p1 ? fc.cat.compose(*p1, m) : nullptr;
                const std::string* c2 =
                    p2 ? fc.cat.compose(*p2, m) : nullptr;
                if ((p1 && !c1) || (p2 && !c2)) { undecided = true; break; }
                bool m1 = !p1 || *c1 == h1;
                bool m2 = !p2 || *c2 == h2;
                if (m1 && m2) ++mediating;
              }
            if (undecided) {
              ++rep.skipped;
              rep.gap("binary-product", h1 + " & " + h2,
                      "a projection composite is untabled");
              continue;
            }
            ++rep.checked;
            if (mediating != 1)
              rep.violation("binary-product", h1 + " & " + h2,
                            std::to_string(mediating) +
                                " mediating arrows into " + pname);
          }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Free strict monoidal category on a multicategory: an arrow into
// [B_1..B_m] carves the source list into m consecutive non-empty blocks
// and gives one multimorphism per block.
// ---------------------------------------------------------------------------

struct FreeMonoidal {
  FinCategory cat;
  std::map<std::string, std::vector<std::string>> obj_list;
  // arrow -> (block sizes, block terms)
  std::map<std::string, std::pair<std::vector<int>, std::vector<std::string>>>
      arrow_data;
};

inline std::string monoidal_arrow_name(const std::string& src,
                                       const std::string& dst,
                                       const std::vector<int>& sizes,
                                       const std::vector<std::string>& parts) {
  std::vector<std::string> ss;
  for (int s : sizes) ss.push_back(std::to_string(s));
  return src + "->" + dst + ":" + detail::join(ss, ".") + ":(" +
         detail::join(parts, ";") + ")";
}

namespace detail {

// All ways to write n as an ordered sum of m positive parts.
inline std::vector<std::vector<int>> compositions(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int left, int blocks) {
    if (blocks == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int s = 1; s + (blocks - 1) <= left; ++s) {
      cur.push_back(s);
      go(left - s, blocks - 1);
      cur.pop_back();
    }
  };
  go(n, m);
  return out;
}

}  // namespace detail

inline FreeMonoidal free_strict_monoidal(const Multicat& m, int maxListLen) {
  Report laws = validate_multicat(m);
  if (!laws.pass())
    throw ShapeError("free_strict_monoidal: input violates " +
                     laws.violations[0].law);
  FreeMonoidal fm;
  fm.cat.objects.push_back(list_name({}));
  fm.obj_list[list_name({})] = {};
  for (const auto& l : detail::object_tuples(m.table.objects, maxListLen)) {
    fm.cat.objects.push_back(list_name(l));
    fm.obj_list[list_name(l)] = l;
  }

  for (const auto& [sname, src] : fm.obj_list)
    for (const auto& [dname, dst] : fm.obj_list) {
      std::vector<std::string> arrows;
      // compositions(0,0) yields the lone empty partition, so the unique
      // arrow [] -> [] falls out of the general case.
      for (const auto& sizes : detail::compositions(
               static_cast<int>(src.size()), static_cast<int>(dst.size()))) {
        std::vector<const std::vector<std::string>*> choices;
        bool ok = true;
        int off = 0;
        for (std::size_t i = 0; i < dst.size(); ++i) {
          std::vector<std::string> block(src.begin() + off,
                                         src.begin() + off + sizes[i]);
          off += sizes[i];
          const auto* hom = m.table.find_hom({block, dst[i]});
          if (!hom) { ok = false; break; }
          choices.push_back(hom);
        }
        if (!ok) continue;
        for_each_tuple(choices, [&](const std::vector<std::string>& parts) {
          std::string name = monoidal_arrow_name(sname, dname, sizes, parts);
          arrows.push_back(name);
          fm.arrow_data[name] = {sizes, parts};
        });
      }
      if (!arrows.empty()) fm.cat.homs[{sname, dname}] = std::move(arrows);
    }

  for (const auto& [oname, l] : fm.obj_list) {
    std::vector<int> sizes(l.size(), 1);
    std::vector<std::string> parts;
    for (const auto& a : l) parts.push_back(m.ids.at(a));
    fm.cat.ids[oname] = monoidal_arrow_name(oname, oname, sizes, parts);
  }

  // Composition: blockwise simultaneous substitution.
  for (const auto& [k1, fs] : fm.cat.homs)
    for (const auto& [k2, gs] : fm.cat.homs) {
      if (k2.first != k1.second) continue;
      for (const auto& f : fs)
        for (const auto& g : gs) {
          const auto& [fsizes, fparts] = fm.arrow_data.at(f);
          const auto& [gsizes, gparts] = fm.arrow_data.at(g);
          std::vector<int> rsizes;
          std::vector<std::string> rparts;
          bool ok = true;
          int off = 0;
          for (std::size_t i = 0; i < gparts.size(); ++i) {
            std::vector<std::string> args(fparts.begin() + off,
                                          fparts.begin() + off + gsizes[i]);
            int span = 0;
            for (int b = off; b < off + gsizes[i]; ++b) span += fsizes[b];
            off += gsizes[i];
            auto it = m.sub.find({gparts[i], args});
            if (it == m.sub.end()) { ok = false; break; }
            rsizes.push_back(span);
            rparts.push_back(it->second);
          }
          if (ok)
            fm.cat.comp[{g, f}] = monoidal_arrow_name(
                k1.first, k2.second, rsizes, rparts);
        }
    }
  return fm;
}

// Tensor of two arrows: concatenate block structures. Absent when the
// concatenated lists exceed the bound.
inline std::optional<std::string> monoidal_tensor(const FreeMonoidal& fm,
                                                  const std::string& f,
                                                  const std::string& g) {
  auto split = [&](const std::string& a) {
    for (const auto& [k, arrows] : fm.cat.homs)
      for (const auto& x : arrows)
        if (x == a) return k;
    throw ShapeError("monoidal_tensor: unknown arrow '" + a + "'");
  };
  auto kf = split(f), kg = split(g);
  std::vector<std::string> src = fm.obj_list.at(kf.first);
  std::vector<std::string> dst = fm.obj_list.at(kf.second);
  const auto& src2 = fm.obj_list.at(kg.first);
  const auto& dst2 = fm.obj_list.at(kg.second);
  src.insert(src.end(), src2.begin(), src2.end());
  dst.insert(dst.end(), dst2.begin(), dst2.end());
  if (!fm.obj_list.count(list_name(src)) ||
      !fm.obj_list.count(list_name(dst)))
    return std::nullopt;
  auto [fsizes, fparts] = fm.arrow_data.at(f);
  const auto& [gsizes, gparts] = fm.arrow_data.at(g);
  fsizes.insert(fsizes.end(), gsizes.begin(), gsizes.end());
  fparts.insert(fparts.end(), gparts.begin(), gparts.end());
  return monoidal_arrow_name(list_name(src), list_name(dst), fsizes, fparts);
}

// Interchange of tensor and composition, checked where all four
// composites and both tensors are tabled.
inline Report check_monoidal_interchange(const FreeMonoidal& fm,
                                         long max_instances = -1) {
  Report rep;
  for (const auto& [k1, fs] : fm.cat.homs)
    for (const auto& f : fs)
      for (const auto& [k2, gs] : fm.cat.homs) {
        if (k2.first != k1.second) continue;
        for (const auto& g : gs)
          for (const auto& [k3, hs] : fm.cat.homs)
            for (const auto& h : hs)
              for (const auto& [k4, ks] : fm.cat.homs) {
                if (k4.first != k3.second) continue;
                for (const auto& kk : ks) {
                  if (max_instances > 0 &&
                      rep.checked + rep.skipped >= max_instances)
                    return rep;
                  auto fh = monoidal_tensor(fm, f, h);
                  auto gk = monoidal_tensor(fm, g, kk);
                  const std::string* gf = fm.cat.compose(g, f);
                  const std::string* kh = fm.cat.compose(kk, h);
                  if (!fh || !gk || !gf || !kh) { ++rep.skipped; continue; }
                  const std::string* lhs = fm.cat.compose(*gk, *fh);
                  auto rhs = monoidal_tensor(fm, *gf, *kh);
                  if (!lhs || !rhs) { ++rep.skipped; continue; }
                  ++rep.checked;
                  if (*lhs != *rhs)
                    rep.violation("monoidal-interchange", f + "," + g + "," +
                                      h + "," + kk,
                                  *lhs + " != " + *rhs);
                }
              }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// Free category on a graph: arrows are edge paths up to the length bound
// plus formal identities; composition is concatenation where it fits.
// ---------------------------------------------------------------------------

struct FinGraph {
  std::vector<std::string> vertices;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      edges;
};

inline FinCategory free_category_on_graph(const FinGraph& g, int maxPathLen) {
  FinCategory c;
  c.objects = g.vertices;

  // Paths as edge-name sequences, grouped by endpoints.
  std::map<std::pair<std::string, std::string>,
           std::vector<std::vector<std::string>>>
      paths;
  for (const auto& [k, es] : g.edges)
    for (const auto& e : es) paths[k].push_back({e});
  for (int len = 2; len <= maxPathLen; ++len) {
    std::map<std::pair<std::string, std::string>,
             std::vector<std::vector<std::string>>>
        next;
    for (const auto& [k, ps] : paths)
      for (const auto& p : ps) {
        if (static_cast<int>(p.size()) != len - 1) continue;
        for (const auto& [ek, es] : g.edges) {
          if (ek.first != k.second) continue;
          for (const auto& e : es) {
            auto q = p;
            q.push_back(e);
            next[{k.first, ek.second}].push_back(q);
          }
        }
      }
    for (auto& [k, ps] : next) {
      auto& tgt = paths[k];
      tgt.insert(tgt.end(), ps.begin(), ps.end());
    }
  }

  for (const auto& [k, ps] : paths) {
    auto& arrows = c.homs[k];
    for (const auto& p : ps) arrows.push_back(detail::join(p, "."));
  }
  for (const auto& v : g.vertices) {
    std::string id = "id_" + v;
    c.homs[{v, v}].push_back(id);
    c.ids[v] = id;
  }

  // Composition: concatenation within the bound; identities are strict.
  for (const auto& [k1, as] : c.homs)
    for (const auto& [k2, bs] : c.homs) {
      if (k2.first != k1.second) continue;
      for (const auto& f : as)
        for (const auto& g2 : bs) {
          bool fid = f == c.ids.at(k1.first) && k1.first == k1.second;
          bool gid = g2 == c.ids.at(k2.second) && k2.first == k2.second;
          if (fid) { c.comp[{g2, f}] = g2; continue; }
          if (gid) { c.comp[{g2, f}] = f; continue; }
          int flen = 1 + static_cast<int>(
              std::count(f.begin(), f.end(), '.'));
          int glen = 1 + static_cast<int>(
              std::count(g2.begin(), g2.end(), '.'));
          if (flen + glen <= maxPathLen) c.comp[{g2, f}] = f + "." + g2;
        }
    }
  return c;
}

// ---------------------------------------------------------------------------
// Free category on a graph whose edges carry two-level hom data: each
// ordered vertex pair has an ArrowObj of generators. The hom from A to B
// is the coproduct over paths of the pointwise products of the edge
// objects, plus a unit summand on the diagonal. Realized as a pair of
// ordinary categories with an identity-on-objects functor between them.
// ---------------------------------------------------------------------------

struct ArrowGraph {
  std::vector<std::string> vertices;
  std::map<std::pair<std::string, std::string>, ArrowObj> edges;
};

struct FreeEnrichedCategory {
  FinCategory level0, level1;
  std::map<std::string, std::string> ioo;  // level-0 arrow -> level-1 arrow
  std::map<std::pair<std::string, std::string>, ArrowObj> homObjs;
};

inline FreeEnrichedCategory free_enriched_category(const ArrowGraph& g,
                                                   int maxPathLen,
                                                   std::size_t guard =
                                                       200000) {
  FreeEnrichedCategory out;
  out.level0.objects = out.level1.objects = g.vertices;

  struct Elem {
    std::vector<std::string> path;   // visited vertices, length >= 2
    std::vector<std::string> comps;  // one edge element per step
  };
  // Arrow name and per-hom bookkeeping.
  auto name_of = [](const Elem& e, int level) {
    return detail::join(e.path, ">") + "#" + std::to_string(level) + "#" +
           detail::join(e.comps, ",");
  };
  std::map<std::pair<std::string, std::string>, std::vector<Elem>> elems0,
      elems1;
  std::size_t total = 0;
  auto bump = [&] {
    if (++total > guard)
      throw CapacityError("free_enriched_category: element guard exceeded");
  };

  // Grow paths level by level, tupling edge elements at both levels.
  std::map<std::pair<std::string, std::string>, std::vector<Elem>> front0,
      front1;
  for (const auto& [k, a] : g.edges) {
    for (const auto& x : a.level0.elements) {
      bump();
      front0[k].push_back({{k.first, k.second}, {x}});
    }
    for (const auto& x : a.level1.elements)
      front1[k].push_back({{k.first, k.second}, {x}});
  }
  elems0 = front0;
  elems1 = front1;
  for (int len = 2; len <= maxPathLen; ++len) {
    std::map<std::pair<std::string, std::string>, std::vector<Elem>> n0, n1;
    auto extend = [&](const auto& front, const auto& pick, auto& next) {
      for (const auto& [k, es] : front)
        for (const auto& e : es)
          for (const auto& [ek, a] : g.edges) {
            if (ek.first != k.second) continue;
            for (const auto& x : pick(a)) {
              bump();
              Elem q = e;
              q.path.push_back(ek.second);
              q.comps.push_back(x);
              next[{k.first, ek.second}].push_back(q);
            }
          }
    };
    extend(front0, [](const ArrowObj& a) { return a.level0.elements; }, n0);
    extend(front1, [](const ArrowObj& a) { return a.level1.elements; }, n1);
    for (const auto& [k, es] : n0) {
      auto& tgt = elems0[k];
      tgt.insert(tgt.end(), es.begin(), es.end());
    }
    for (const auto& [k, es] : n1) {
      auto& tgt = elems1[k];
      tgt.insert(tgt.end(), es.begin(), es.end());
    }
    front0 = std::move(n0);
    front1 = std::move(n1);
  }

  auto build = [&](FinCategory& cat, const auto& elems, int level) {
    std::map<std::string, Elem> decode;
    for (const auto& [k, es] : elems) {
      auto& arrows = cat.homs[k];
      for (const auto& e : es) {
        arrows.push_back(name_of(e, level));
        decode[name_of(e, level)] = e;
      }
    }
    for (const auto& v : g.vertices) {
      std::string id = "id" + std::to_string(level) + "_" + v;
      cat.homs[{v, v}].push_back(id);
      cat.ids[v] = id;
    }
    for (const auto& [k1, as] : cat.homs)
      for (const auto& [k2, bs] : cat.homs) {
        if (k2.first != k1.second) continue;
        for (const auto& f : as)
          for (const auto& g2 : bs) {
            bool fid = f == cat.ids.at(k1.first) && k1.first == k1.second;
            bool gid = g2 == cat.ids.at(k2.second) && k2.first == k2.second;
            if (fid) { cat.comp[{g2, f}] = g2; continue; }
            if (gid) { cat.comp[{g2, f}] = f; continue; }
            const Elem& fe = decode.at(f);
            const Elem& ge = decode.at(g2);
            if (static_cast<int>(fe.comps.size() + ge.comps.size()) >
                maxPathLen)
              continue;
            Elem r = fe;
            r.path.insert(r.path.end(), ge.path.begin() + 1, ge.path.end());
            r.comps.insert(r.comps.end(), ge.comps.begin(), ge.comps.end());
            cat.comp[{g2, f}] = name_of(r, level);
          }
      }
  };
  build(out.level0, elems0, 0);
  build(out.level1, elems1, 1);

  // The identity-on-objects functor applies each edge's structure map
  // componentwise.
  for (const auto& [k, es] : elems0)
    for (const auto& e : es) {
      Elem img = e;
      for (std::size_t i = 0; i < e.comps.size(); ++i) {
        const ArrowObj& a = g.edges.at({e.path[i], e.path[i + 1]});
        img.comps[i] = a.diamond(e.comps[i]);
      }
      out.ioo[name_of(e, 0)] = name_of(img, 1);
    }
  for (const auto& v : g.vertices)
    out.ioo["id0_" + v] = "id1_" + v;

  // Per-pair hom objects summarize both levels with the induced map.
  for (const auto& v1 : g.vertices)
    for (const auto& v2 : g.vertices) {
      const auto* h0 = out.level0.find_hom(v1, v2);
      const auto* h1 = out.level1.find_hom(v1, v2);
      if (!h0 && !h1) continue;
      FinSet s0(h0 ? *h0 : std::vector<std::string>{});
      FinSet s1(h1 ? *h1 : std::vector<std::string>{});
      std::map<std::string, std::string> table;
      for (const auto& x : s0.elements) table[x] = out.ioo.at(x);
      out.homObjs[{v1, v2}] = ArrowObj(s0, s1, FinMap(s0, s1, table));
    }
  return out;
}

// The level map of a free two-level category is functorial.
inline Report check_ioo_functor(const FreeEnrichedCategory& fec) {
  Report rep;
  for (const auto& [o, id] : fec.level0.ids) {
    ++rep.checked;
    if (fec.ioo.at(id) != fec.level1.ids.at(o))
      rep.violation("functor-identity", o,
                    fec.ioo.at(id) + " != " + fec.level1.ids.at(o));
  }
  for (const auto& [k, r] : fec.level0.comp) {
    const auto& [g2, f] = k;
    const std::string* img =
        fec.level1.compose(fec.ioo.at(g2), fec.ioo.at(f));
    if (!img) { ++rep.skipped; continue; }
    ++rep.checked;
    if (fec.ioo.at(r) != *img)
      rep.violation("functor-composition", g2 + "." + f,
                    fec.ioo.at(r) + " != " + *img);
  }
  return rep;
}

}  // namespace multiarity

#endif
