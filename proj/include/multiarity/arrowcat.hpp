#ifndef MULTIARITY_ARROWCAT_HPP
#define MULTIARITY_ARROWCAT_HPP

#include <string>
#include <vector>

#include "multiarity/finset.hpp"

namespace multiarity {

// An object of the arrow category [->,Set]: a single function
// diamond : level0 -> level1.
struct ArrowObj {
  FinSet level0;
  FinSet level1;
  FinMap diamond;

  ArrowObj() = default;
  ArrowObj(FinSet l0, FinSet l1, FinMap d)
      : level0(std::move(l0)), level1(std::move(l1)), diamond(std::move(d)) {
    if (diamond.dom != level0 || diamond.cod != level1)
      throw ShapeError("ArrowObj: diamond must map level0 to level1");
  }

  bool operator==(const ArrowObj& o) const {
    return level0 == o.level0 && level1 == o.level1 && diamond == o.diamond;
  }
  bool operator!=(const ArrowObj& o) const { return !(*this == o); }
};

// A morphism of [->,Set]: a commuting square (f0, f1).
struct Square {
  ArrowObj src;
  ArrowObj dst;
  FinMap f0;
  FinMap f1;

  Square() = default;
  Square(ArrowObj s, ArrowObj d, FinMap m0, FinMap m1)
      : src(std::move(s)), dst(std::move(d)), f0(std::move(m0)),
        f1(std::move(m1)) {
    if (f0.dom != src.level0 || f0.cod != dst.level0 ||
        f1.dom != src.level1 || f1.cod != dst.level1)
      throw ShapeError("Square: component domains/codomains do not line up");
    if (compose(f1, src.diamond) != compose(dst.diamond, f0))
      throw ShapeError("Square: the square does not commute");
  }

  bool is_iso() const { return is_bijective(f0) && is_bijective(f1); }

  bool operator==(const Square& o) const {
    return src == o.src && dst == o.dst && f0 == o.f0 && f1 == o.f1;
  }
  bool operator!=(const Square& o) const { return !(*this == o); }
};

inline Square identity_square(const ArrowObj& a) {
  return Square(a, a, identity_map(a.level0), identity_map(a.level1));
}

inline Square compose_squares(const Square& g, const Square& f) {
  if (f.dst != g.src) throw ShapeError("compose_squares: not composable");
  return Square(f.src, g.dst, compose(g.f0, f.f0), compose(g.f1, f.f1));
}

// The common unit of both tensors: the identity arrow on a singleton.
inline ArrowObj unit_arrow() {
  FinSet one({"*"});
  return ArrowObj(one, one, identity_map(one));
}

// A funny tensor a [] b together with its defining pushout data: the span
// legs (a_diamond x 1, 1 x b_diamond) out of a0 x b0 and the pushout cocone
// (iota, iota') into level1.
struct TensorResult {
  ArrowObj object;
  std::vector<FinMap> span;  // span[0]: a0xb0 -> a1xb0, span[1]: a0xb0 -> a0xb1
  Cocone pushout;            // legs into object.level1, one per span leg
};

// Pointwise cartesian product of arrow objects, with projection squares.
inline std::pair<ArrowObj, std::vector<Square>> pointwise_product(
    const ArrowObj& a, const ArrowObj& b) {
  auto [l0, p0] = product({a.level0, b.level0});
  auto [l1, p1] = product({a.level1, b.level1});
  ArrowObj obj(l0, l1, product_map({a.diamond, b.diamond}));
  std::vector<Square> projections;
  projections.emplace_back(obj, a, p0[0], p1[0]);
  projections.emplace_back(obj, b, p0[1], p1[1]);
  return {obj, projections};
}

// The funny tensor: level0 = a0 x b0; level1 = pushout of
// a_diamond x 1 and 1 x b_diamond; diamond = the diagonal composite.
inline TensorResult funny_tensor(const ArrowObj& a, const ArrowObj& b) {
  FinSet l0 = product({a.level0, b.level0}).first;
  FinMap left = product_map({a.diamond, identity_map(b.level0)});
  FinMap right = product_map({identity_map(a.level0), b.diamond});
  Cocone push = wide_pushout({left, right});
  FinMap diamond = compose(push.legs[0], left);
  // Both composites around the pushout square agree by construction.
  if (diamond != compose(push.legs[1], right))
    throw InternalConsistencyError("funny_tensor: pushout square broke");
  return TensorResult{ArrowObj(l0, push.apex, diamond), {left, right},
                      push};
}

namespace detail {

// One step of the left-bracketed iterate, with the running prefix object.
struct TensorChain {
  std::vector<ArrowObj> inputs;
  std::vector<ArrowObj> prefixes;      // prefixes[m] = tensor of inputs[0..m]
  std::vector<TensorResult> steps;     // steps[m]: prefixes[m-1] [] inputs[m]
};

inline TensorChain tensor_chain(const std::vector<ArrowObj>& objs) {
  if (objs.empty()) throw ShapeError("funny_tensor_n: empty list");
  TensorChain c;
  c.inputs = objs;
  c.prefixes.push_back(objs[0]);
  for (std::size_t m = 1; m < objs.size(); ++m) {
    c.steps.push_back(funny_tensor(c.prefixes.back(), objs[m]));
    c.prefixes.push_back(c.steps.back().object);
  }
  return c;
}

// Left-nested level-0 token of a component tuple: ((x1,x2),x3),...
inline std::string nest0(const TensorChain& c,
                         const std::vector<std::string>& parts,
                         std::size_t upto) {
  std::string acc = parts[0];
  for (std::size_t m = 1; m <= upto; ++m) acc = tuple_name({acc, parts[m]});
  return acc;
}

// The canonical leg of the left-bracketed tensor over the wide-pushout
// diagram: sends a tuple with the level-1 entry in slot j (0-based) to its
// class in the iterated tensor's level1.
inline std::string iterated_leg(const TensorChain& c,
                                const std::vector<std::string>& parts,
                                std::size_t j, std::size_t upto) {
  if (upto == 0) return parts[0];
  const TensorResult& step = c.steps[upto - 1];
  if (j < upto) {
    std::string e = iterated_leg(c, parts, j, upto - 1);
    return step.pushout.legs[0](tuple_name({e, parts[upto]}));
  }
  std::string p = nest0(c, parts, upto - 1);
  return step.pushout.legs[1](tuple_name({p, parts[upto]}));
}

}  // namespace detail

// The n-ary funny tensor, computed two ways: the left-bracketed iterate of
// the binary tensor (the object under test) and the wide-pushout
// characterization (the oracle), together with the mediating comparison
// bijection and the level-0 tuple/nesting bijection.
struct NTensorResult {
  ArrowObj iterated;       // left-bracketed binary iterate
  Cocone wide;             // wide pushout of the n maps prod a_0 -> prod a_{d(i,j)}
  FinMap mediating;        // wide.apex -> iterated.level1 (a bijection)
  FinMap reshuffle0;       // n-ary product of level0s -> iterated.level0
  std::vector<FinMap> span;  // the wide-pushout diagram legs
};

inline NTensorResult funny_tensor_n(const std::vector<ArrowObj>& objs) {
  detail::TensorChain chain = detail::tensor_chain(objs);
  const ArrowObj& iterated = chain.prefixes.back();
  std::size_t n = objs.size();

  // Wide-pushout characterization: legs prod a_0 -> prod a_{delta(i,j)}
  // with the diamond in position j and identities elsewhere.
  std::vector<FinMap> span;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<FinMap> comps;
    for (std::size_t i = 0; i < n; ++i)
      comps.push_back(i == j ? objs[i].diamond : identity_map(objs[i].level0));
    span.push_back(product_map(comps));
  }
  Cocone wide = wide_pushout(span);

  // The iterated tensor is a cocone over the same diagram; its legs send a
  // tuple with one level-1 coordinate to the corresponding pushout class.
  std::vector<FinMap> target_legs;
  for (std::size_t j = 0; j < n; ++j) {
    std::map<std::string, std::string> t;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < n; ++i)
      sizes.push_back(i == j ? objs[i].level1.size() : objs[i].level0.size());
    bool any_empty = false;
    for (auto s : sizes) any_empty = any_empty || s == 0;
    if (!any_empty) {
      for (const auto& idx : index_tuples(sizes)) {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < n; ++i)
          parts.push_back(i == j ? objs[i].level1.elements[idx[i]]
                                 : objs[i].level0.elements[idx[i]]);
        t[tuple_name(parts)] = detail::iterated_leg(chain, parts, j, n - 1);
      }
    }
    target_legs.emplace_back(span[j].cod, iterated.level1, std::move(t));
  }
  FinMap mediating = mediating_map(wide, Cocone(iterated.level1, target_legs));

  // Level-0 comparison: flat n-ary tuples vs the left-nested pairs.
  std::vector<FinSet> zeroes;
  for (const auto& o : objs) zeroes.push_back(o.level0);
  auto [flat0, flat_projs] = product(zeroes);
  (void)flat_projs;
  std::map<std::string, std::string> r0;
  std::vector<std::size_t> sizes0;
  bool empty0 = false;
  for (const auto& z : zeroes) {
    sizes0.push_back(z.size());
    empty0 = empty0 || z.size() == 0;
  }
  if (!empty0) {
    for (const auto& idx : index_tuples(sizes0)) {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < n; ++i)
        parts.push_back(zeroes[i].elements[idx[i]]);
      r0[tuple_name(parts)] = detail::nest0(chain, parts, n - 1);
    }
  }
  FinMap reshuffle0(flat0, iterated.level0, std::move(r0));
  return NTensorResult{iterated, wide, mediating, reshuffle0, span};
}

namespace detail {

// Mediating square out of a funny tensor, given target legs over its span.
inline Square tensor_mediating_square(const TensorResult& t,
                                      const ArrowObj& dst, const FinMap& f0,
                                      const FinMap& leg0, const FinMap& leg1) {
  FinMap f1 = mediating_map(t.pushout, Cocone(dst.level1, {leg0, leg1}));
  return Square(t.object, dst, f0, f1);
}

// Swap bijection between the canonical products X x Y and Y x X.
inline FinMap swap_map(const FinSet& x, const FinSet& y) {
  FinSet xy = product({x, y}).first;
  FinSet yx = product({y, x}).first;
  std::map<std::string, std::string> t;
  for (const auto& ex : x.elements)
    for (const auto& ey : y.elements)
      t[tuple_name({ex, ey})] = tuple_name({ey, ex});
  return FinMap(xy, yx, std::move(t));
}

}  // namespace detail

// Left unitor: I [] a -> a.
inline Square lambda_iso(const ArrowObj& a) {
  ArrowObj i = unit_arrow();
  TensorResult t = funny_tensor(i, a);
  auto [l0, p0] = product({i.level0, a.level0});
  (void)l0;
  // leg over I1 x a0: (*, x) |-> a_diamond(x); leg over I0 x a1: (*, x) |-> x.
  FinSet d0 = t.span[0].cod;
  FinSet d1 = t.span[1].cod;
  std::map<std::string, std::string> t0, t1;
  for (const auto& x : a.level0.elements)
    t0[tuple_name({"*", x})] = a.diamond(x);
  for (const auto& x : a.level1.elements) t1[tuple_name({"*", x})] = x;
  return detail::tensor_mediating_square(t, a, p0[1],
                                         FinMap(d0, a.level1, std::move(t0)),
                                         FinMap(d1, a.level1, std::move(t1)));
}

// Right unitor: a [] I -> a.
inline Square rho_iso(const ArrowObj& a) {
  ArrowObj i = unit_arrow();
  TensorResult t = funny_tensor(a, i);
  auto [l0, p0] = product({a.level0, i.level0});
  (void)l0;
  FinSet d0 = t.span[0].cod;
  FinSet d1 = t.span[1].cod;
  std::map<std::string, std::string> t0, t1;
  for (const auto& x : a.level1.elements) t0[tuple_name({x, "*"})] = x;
  for (const auto& x : a.level0.elements)
    t1[tuple_name({x, "*"})] = a.diamond(x);
  return detail::tensor_mediating_square(t, a, p0[0],
                                         FinMap(d0, a.level1, std::move(t0)),
                                         FinMap(d1, a.level1, std::move(t1)));
}

// Braiding: a [] b -> b [] a.
inline Square braid_iso(const ArrowObj& a, const ArrowObj& b) {
  TensorResult ab = funny_tensor(a, b);
  TensorResult ba = funny_tensor(b, a);
  FinMap f0 = detail::swap_map(a.level0, b.level0);
  FinMap leg0 = compose(ba.pushout.legs[1], detail::swap_map(a.level1, b.level0));
  FinMap leg1 = compose(ba.pushout.legs[0], detail::swap_map(a.level0, b.level1));
  return detail::tensor_mediating_square(ab, ba.object, f0, leg0, leg1);
}

// Associator: (a [] b) [] c -> a [] (b [] c), built by comparing both
// bracketings against the ternary wide pushout.
inline Square assoc_iso(const ArrowObj& a, const ArrowObj& b,
                        const ArrowObj& c) {
  NTensorResult left = funny_tensor_n({a, b, c});
  TensorResult bc = funny_tensor(b, c);
  TensorResult r = funny_tensor(a, bc.object);

  // The right-bracketed tensor as a cocone over the ternary diagram.
  std::vector<FinMap> legs;
  for (std::size_t j = 0; j < 3; ++j) {
    std::map<std::string, std::string> t;
    const FinSet& dj = left.span[j].cod;
    for (const auto& e : dj.elements) {
      // Recover the components through the product projections.
      std::vector<FinSet> comps = {j == 0 ? a.level1 : a.level0,
                                   j == 1 ? b.level1 : b.level0,
                                   j == 2 ? c.level1 : c.level0};
      auto projs = product(comps).second;
      std::string x = projs[0](e), y = projs[1](e), z = projs[2](e);
      if (j == 0) {
        t[e] = r.pushout.legs[0](tuple_name({x, tuple_name({y, z})}));
      } else {
        std::string q = j == 1 ? bc.pushout.legs[0](tuple_name({y, z}))
                               : bc.pushout.legs[1](tuple_name({y, z}));
        t[e] = r.pushout.legs[1](tuple_name({x, q}));
      }
    }
    legs.emplace_back(left.span[j].cod, r.object.level1, std::move(t));
  }
  FinMap right_med = mediating_map(left.wide, Cocone(r.object.level1, legs));
  FinMap f1 = compose(right_med, inverse(left.mediating));

  // Level 0: ((x,y),z) |-> (x,(y,z)).
  std::map<std::string, std::string> t0;
  for (const auto& x : a.level0.elements)
    for (const auto& y : b.level0.elements)
      for (const auto& z : c.level0.elements)
        t0[tuple_name({tuple_name({x, y}), z})] =
            tuple_name({x, tuple_name({y, z})});
  FinMap f0(left.iterated.level0, r.object.level0, std::move(t0));
  return Square(left.iterated, r.object, f0, f1);
}

struct CoherenceIsos {
  Square lambda;  // I [] a -> a
  Square rho;     // a [] I -> a
  Square braid;   // a [] b -> b [] a
  Square assoc;   // (a [] b) [] c -> a [] (b [] c)
};

inline CoherenceIsos coherence_isos(const ArrowObj& a, const ArrowObj& b,
                                    const ArrowObj& c) {
  return CoherenceIsos{lambda_iso(a), rho_iso(a), braid_iso(a, b),
                       assoc_iso(a, b, c)};
}

// The canonical comparison mu : a [] b -> a x b (identity at level 0).
inline Square mu(const ArrowObj& a, const ArrowObj& b) {
  TensorResult t = funny_tensor(a, b);
  ArrowObj prod = pointwise_product(a, b).first;
  FinMap leg0 = product_map({identity_map(a.level1), b.diamond});
  FinMap leg1 = product_map({a.diamond, identity_map(b.level1)});
  return detail::tensor_mediating_square(t, prod,
                                         identity_map(t.object.level0), leg0,
                                         leg1);
}

// Projections out of the funny tensor: pi . mu and pi' . mu.
inline std::pair<Square, Square> funny_projections(const ArrowObj& a,
                                                   const ArrowObj& b) {
  Square m = mu(a, b);
  auto [prod, projs] = pointwise_product(a, b);
  (void)prod;
  return {compose_squares(projs[0], m), compose_squares(projs[1], m)};
}

// Functorial action of [] on squares: f [] g : a [] b -> a' [] b'.
inline Square funny_on_squares(const Square& f, const Square& g) {
  TensorResult src = funny_tensor(f.src, g.src);
  TensorResult dst = funny_tensor(f.dst, g.dst);
  FinMap f0 = product_map({f.f0, g.f0});
  FinMap leg0 = compose(dst.pushout.legs[0], product_map({f.f1, g.f0}));
  FinMap leg1 = compose(dst.pushout.legs[1], product_map({f.f0, g.f1}));
  return detail::tensor_mediating_square(src, dst.object, f0, leg0, leg1);
}

// Pairing of two squares out of a common source into the pointwise product.
inline Square square_pair(const Square& s1, const Square& s2) {
  if (s1.src != s2.src) throw ShapeError("square_pair: sources differ");
  auto [prod, projs] = pointwise_product(s1.dst, s2.dst);
  (void)projs;
  FinMap f0 = tupling(s1.src.level0, prod.level0, {s1.f0, s2.f0});
  FinMap f1 = tupling(s1.src.level1, prod.level1, {s1.f1, s2.f1});
  return Square(s1.src, prod, f0, f1);
}

// Interchange zeta : (a x b) [] (c x d) -> (a [] c) x (b [] d), built as a
// morphism out of the defining colimit.
inline Square interchange(const ArrowObj& a, const ArrowObj& b,
                          const ArrowObj& c, const ArrowObj& d) {
  ArrowObj axb = pointwise_product(a, b).first;
  ArrowObj cxd = pointwise_product(c, d).first;
  TensorResult lhs = funny_tensor(axb, cxd);
  TensorResult ac = funny_tensor(a, c);
  TensorResult bd = funny_tensor(b, d);
  ArrowObj rhs = pointwise_product(ac.object, bd.object).first;

  // Level 0 reshuffle ((x,y),(z,w)) |-> ((x,z),(y,w)).
  std::map<std::string, std::string> t0;
  for (const auto& x : a.level0.elements)
    for (const auto& y : b.level0.elements)
      for (const auto& z : c.level0.elements)
        for (const auto& w : d.level0.elements)
          t0[tuple_name({tuple_name({x, y}), tuple_name({z, w})})] =
              tuple_name({tuple_name({x, z}), tuple_name({y, w})});
  FinMap f0(lhs.object.level0, rhs.level0, std::move(t0));

  // Legs over the span of the source tensor.
  std::map<std::string, std::string> l0, l1;
  for (const auto& x : a.level1.elements)
    for (const auto& y : b.level1.elements)
      for (const auto& z : c.level0.elements)
        for (const auto& w : d.level0.elements)
          l0[tuple_name({tuple_name({x, y}), tuple_name({z, w})})] =
              tuple_name({ac.pushout.legs[0](tuple_name({x, z})),
                          bd.pushout.legs[0](tuple_name({y, w}))});
  for (const auto& x : a.level0.elements)
    for (const auto& y : b.level0.elements)
      for (const auto& z : c.level1.elements)
        for (const auto& w : d.level1.elements)
          l1[tuple_name({tuple_name({x, y}), tuple_name({z, w})})] =
              tuple_name({ac.pushout.legs[1](tuple_name({x, z})),
                          bd.pushout.legs[1](tuple_name({y, w}))});
  return detail::tensor_mediating_square(
      lhs, rhs, f0, FinMap(lhs.span[0].cod, rhs.level1, std::move(l0)),
      FinMap(lhs.span[1].cod, rhs.level1, std::move(l1)));
}

// Interchange zeta' built the other way round: as a morphism into the
// product, from the funny projections; it agrees with the colimit-side
// interchange map elementwise.
inline Square interchange_via_projections(const ArrowObj& a, const ArrowObj& b,
                                          const ArrowObj& c,
                                          const ArrowObj& d) {
  ArrowObj axb = pointwise_product(a, b).first;
  ArrowObj cxd = pointwise_product(c, d).first;
  auto [pi_ab, pi2_ab] = [&] {
    auto projs = pointwise_product(a, b).second;
    return std::pair<Square, Square>(projs[0], projs[1]);
  }();
  auto projs_cd = pointwise_product(c, d).second;
  (void)axb;
  (void)cxd;
  Square left = funny_on_squares(pi_ab, projs_cd[0]);
  Square right = funny_on_squares(pi2_ab, projs_cd[1]);
  return square_pair(left, right);
}

// Enumerate all commuting squares between two arrow objects (small sets).
inline std::vector<Square> all_squares(const ArrowObj& a, const ArrowObj& b,
                                       std::size_t guard = 100000) {
  std::vector<Square> out;
  std::vector<FinMap> maps0, maps1;
  auto all_maps = [&](const FinSet& d, const FinSet& c) {
    std::vector<FinMap> ms;
    if (d.size() == 0) {
      ms.emplace_back(d, c, std::map<std::string, std::string>{});
      return ms;
    }
    if (c.size() == 0) return ms;
    std::vector<std::size_t> sizes(d.size(), c.size());
    for (const auto& idx : index_tuples(sizes)) {
      std::map<std::string, std::string> t;
      for (std::size_t i = 0; i < d.size(); ++i)
        t[d.elements[i]] = c.elements[idx[i]];
      ms.emplace_back(d, c, std::move(t));
      if (ms.size() > guard) throw CapacityError("all_squares: too many maps");
    }
    return ms;
  };
  maps0 = all_maps(a.level0, b.level0);
  maps1 = all_maps(a.level1, b.level1);
  for (const auto& m0 : maps0)
    for (const auto& m1 : maps1)
      if (compose(m1, a.diamond) == compose(b.diamond, m0))
        out.emplace_back(a, b, m0, m1);
  return out;
}

}  // namespace multiarity

#endif
