#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiarity/arrowcat.hpp"
#include "multiarity/duoidal.hpp"

using namespace multiarity;

namespace {

// Small deterministic pool of arrow objects (levels <= 3).
ArrowObj two_to_one() {
  FinSet two({"0", "1"});
  FinSet one({"p"});
  return ArrowObj(two, one, FinMap(two, one, {{"0", "p"}, {"1", "p"}}));
}

ArrowObj id_two() {
  FinSet two({"0", "1"});
  return ArrowObj(two, two, identity_map(two));
}

ArrowObj swap_two() {
  FinSet two({"0", "1"});
  return ArrowObj(two, two, FinMap(two, two, {{"0", "1"}, {"1", "0"}}));
}

ArrowObj three_to_two() {
  FinSet three({"a", "b", "c"});
  FinSet two({"x", "y"});
  return ArrowObj(three, two,
                  FinMap(three, two, {{"a", "x"}, {"b", "x"}, {"c", "y"}}));
}

std::vector<ArrowObj> pool() {
  return {unit_arrow(), two_to_one(), id_two(), swap_two(), three_to_two()};
}

}  // namespace

TEST_CASE("pointwise product") {
  ArrowObj I = unit_arrow();
  auto [ii, projs] = pointwise_product(I, I);
  CHECK(ii.level0.size() == 1);
  CHECK(ii.level1.size() == 1);
  CHECK(projs[0].is_iso());

  auto [p, pr2] = pointwise_product(two_to_one(), two_to_one());
  (void)pr2;
  CHECK(p.level0.size() == 4);
  CHECK(p.level1.size() == 1);

  auto [ai, pai] = pointwise_product(three_to_two(), I);
  CHECK(ai.level0.size() == 3);
  CHECK(pai[0].is_iso());
}

TEST_CASE("funny tensor basics") {
  // I [] a is isomorphic to a via lambda.
  for (const auto& a : pool()) {
    Square l = lambda_iso(a);
    CHECK(l.is_iso());
    Square r = rho_iso(a);
    CHECK(r.is_iso());
  }

  // (2->1) [] (2->1): level0 of size 4, level1 of size 1.
  TensorResult t = funny_tensor(two_to_one(), two_to_one());
  CHECK(t.object.level0.size() == 4);
  CHECK(t.object.level1.size() == 1);

  // (id_A) [] (id_B) is the pointwise product at both levels.
  TensorResult tid = funny_tensor(id_two(), id_two());
  ArrowObj prod = pointwise_product(id_two(), id_two()).first;
  CHECK(tid.object.level0.size() == prod.level0.size());
  CHECK(tid.object.level1.size() == prod.level1.size());
  Square m = mu(id_two(), id_two());
  CHECK(m.is_iso());
}

TEST_CASE("n-ary tensor against the wide-pushout oracle") {
  // Unary tensor is the object itself.
  NTensorResult u = funny_tensor_n({three_to_two()});
  CHECK(u.iterated == three_to_two());
  CHECK(is_bijective(u.mediating));

  // [I,I,I] collapses to the unit.
  NTensorResult iii = funny_tensor_n({unit_arrow(), unit_arrow(),
                                      unit_arrow()});
  CHECK(iii.iterated.level0.size() == 1);
  CHECK(iii.iterated.level1.size() == 1);

  // [(2->1)]^3: level0 of size 8, both pipelines agree.
  NTensorResult t3 = funny_tensor_n({two_to_one(), two_to_one(),
                                     two_to_one()});
  CHECK(t3.iterated.level0.size() == 8);
  CHECK(is_bijective(t3.mediating));
  CHECK(is_bijective(t3.reshuffle0));

  // Agreement for every n <= 4 over a mixed tuple.
  std::vector<ArrowObj> objs = {two_to_one(), id_two(), swap_two(),
                                three_to_two()};
  for (std::size_t n = 1; n <= objs.size(); ++n) {
    NTensorResult r = funny_tensor_n(
        std::vector<ArrowObj>(objs.begin(), objs.begin() + n));
    CHECK(is_bijective(r.mediating));
    // The mediating map respects the legs on both sides.
    for (std::size_t j = 0; j < n; ++j)
      CHECK(compose(r.mediating, r.wide.legs[j]).cod ==
            r.iterated.level1);
  }
}

TEST_CASE("coherence isos") {
  ArrowObj a = two_to_one(), b = swap_two(), c = id_two();
  CoherenceIsos iso = coherence_isos(a, b, c);
  CHECK(iso.lambda.is_iso());
  CHECK(iso.rho.is_iso());
  CHECK(iso.braid.is_iso());
  CHECK(iso.assoc.is_iso());

  // braid . braid = id.
  Square back = braid_iso(b, a);
  Square round = compose_squares(back, iso.braid);
  CHECK(round.f0 == identity_map(round.src.level0));
  CHECK(round.f1 == identity_map(round.src.level1));

  // lambda on I is an identity up to the singleton renaming ("(*,*)" vs
  // "*"): a bijection between one-point levels.
  Square li = lambda_iso(unit_arrow());
  CHECK(li.is_iso());
  CHECK(li.src.level0.size() == 1);
  CHECK(li.src.level1.size() == 1);
}

TEST_CASE("pentagon, triangle, hexagon") {
  auto objs = pool();
  // Triangle: (a [] I) [] b -> a [] b two ways.
  for (const auto& a : objs)
    for (const auto& b : objs) {
      Square al = assoc_iso(a, unit_arrow(), b);
      Square lhs = compose_squares(
          funny_on_squares(identity_square(a), lambda_iso(b)), al);
      Square rhs = funny_on_squares(rho_iso(a), identity_square(b));
      CHECK(lhs.f0 == rhs.f0);
      CHECK(lhs.f1 == rhs.f1);
    }

  // Pentagon on triples/pairs of small objects (levels <= 3): quadruples
  // from a thinner pool to keep runtime sane.
  std::vector<ArrowObj> small = {unit_arrow(), two_to_one(), swap_two()};
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small)
        for (const auto& d : small) {
          ArrowObj ab = funny_tensor(a, b).object;
          ArrowObj cd = funny_tensor(c, d).object;
          ArrowObj bc = funny_tensor(b, c).object;
          Square top = compose_squares(assoc_iso(a, b, cd),
                                       assoc_iso(ab, c, d));
          Square bot = compose_squares(
              funny_on_squares(identity_square(a), assoc_iso(b, c, d)),
              compose_squares(assoc_iso(a, bc, d),
                              funny_on_squares(assoc_iso(a, b, c),
                                               identity_square(d))));
          CHECK(top.f0 == bot.f0);
          CHECK(top.f1 == bot.f1);
        }

  // Hexagon for the braiding on sampled triples (levels <= 2):
  //   assoc . braid_{a, b[]c} . assoc = (1[]braid) . assoc . (braid[]1).
  std::vector<ArrowObj> tiny = {unit_arrow(), two_to_one(), swap_two()};
  for (const auto& a : tiny)
    for (const auto& b : tiny)
      for (const auto& c : tiny) {
        ArrowObj bc = funny_tensor(b, c).object;
        Square lhs = compose_squares(
            assoc_iso(b, c, a),
            compose_squares(braid_iso(a, bc), assoc_iso(a, b, c)));
        Square rhs = compose_squares(
            funny_on_squares(identity_square(b), braid_iso(a, c)),
            compose_squares(assoc_iso(b, a, c),
                            funny_on_squares(braid_iso(a, b),
                                             identity_square(c))));
        CHECK(lhs.f0 == rhs.f0);
        CHECK(lhs.f1 == rhs.f1);
      }
}

TEST_CASE("mu and funny projections") {
  ArrowObj I = unit_arrow();
  Square mii = mu(I, I);
  CHECK(mii.f0 == identity_map(mii.src.level0));
  CHECK(mii.is_iso());

  Square m21 = mu(two_to_one(), two_to_one());
  CHECK(m21.src.level1.size() == 1);
  CHECK(m21.dst.level1.size() == 1);

  // On (a, I) the first projection is the rho iso; on (I, b) the second is
  // lambda.
  for (const auto& a : pool()) {
    auto [p, q] = funny_projections(a, I);
    (void)q;
    Square r = rho_iso(a);
    CHECK(p.f0 == r.f0);
    CHECK(p.f1 == r.f1);
    auto [p2, q2] = funny_projections(I, a);
    (void)p2;
    Square l = lambda_iso(a);
    CHECK(q2.f0 == l.f0);
    CHECK(q2.f1 == l.f1);
  }

  // Naturality of the projections along a sample square.
  ArrowObj a = three_to_two(), a2 = two_to_one();
  auto squares = all_squares(a, a2);
  REQUIRE(!squares.empty());
  for (const auto& f : squares) {
    ArrowObj b = id_two();
    auto [pa, _] = funny_projections(a, b);
    (void)_;
    auto [pa2, _2] = funny_projections(a2, b);
    (void)_2;
    Square lhs = compose_squares(f, pa);
    Square rhs = compose_squares(pa2,
                                 funny_on_squares(f, identity_square(b)));
    CHECK(lhs.f0 == rhs.f0);
    CHECK(lhs.f1 == rhs.f1);
  }
}

TEST_CASE("interchange") {
  ArrowObj I = unit_arrow();
  Square z = interchange(I, I, I, I);
  CHECK(z.is_iso());

  // zeta = zeta' on sample quadruples.
  std::vector<ArrowObj> small = {I, two_to_one(), swap_two()};
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small)
        for (const auto& d : small) {
          Square zz = interchange(a, b, c, d);
          Square zp = interchange_via_projections(a, b, c, d);
          CHECK(zz.f0 == zp.f0);
          CHECK(zz.f1 == zp.f1);
        }
}

TEST_CASE("cocontinuity of - [] b") {
  // Coproduct comparison: (a1 + a2) [] b vs (a1 [] b) + (a2 [] b).
  auto objs = pool();
  for (const auto& a1 : objs)
    for (const auto& a2 : objs)
      for (const auto& b : objs) {
        auto [c0, i0] = coproduct({a1.level0, a2.level0});
        auto [c1, i1] = coproduct({a1.level1, a2.level1});
        std::map<std::string, std::string> dt;
        for (const auto& e : a1.level0.elements)
          dt[i0[0](e)] = i1[0](a1.diamond(e));
        for (const auto& e : a2.level0.elements)
          dt[i0[1](e)] = i1[1](a2.diamond(e));
        ArrowObj sum(c0, c1, FinMap(c0, c1, std::move(dt)));
        TensorResult lhs = funny_tensor(sum, b);
        TensorResult t1 = funny_tensor(a1, b);
        TensorResult t2 = funny_tensor(a2, b);
        // Comparison at both levels via the canonical elementwise maps.
        auto [s0, j0] = coproduct({t1.object.level0, t2.object.level0});
        auto [s1, j1] = coproduct({t1.object.level1, t2.object.level1});
        // Level 0: ("i:x", y) |-> "i:(x,y)".
        std::map<std::string, std::string> m0;
        for (const auto& x : a1.level0.elements)
          for (const auto& y : b.level0.elements)
            m0[tuple_name({i0[0](x), y})] = j0[0](tuple_name({x, y}));
        for (const auto& x : a2.level0.elements)
          for (const auto& y : b.level0.elements)
            m0[tuple_name({i0[1](x), y})] = j0[1](tuple_name({x, y}));
        FinMap cmp0(lhs.object.level0, s0, std::move(m0));
        CHECK(is_bijective(cmp0));
        // Level 1 via the mediating map out of the pushout.
        std::map<std::string, std::string> l0t, l1t;
        for (const auto& x : a1.level1.elements)
          for (const auto& y : b.level0.elements)
            l0t[tuple_name({i1[0](x), y})] =
                j1[0](t1.pushout.legs[0](tuple_name({x, y})));
        for (const auto& x : a2.level1.elements)
          for (const auto& y : b.level0.elements)
            l0t[tuple_name({i1[1](x), y})] =
                j1[1](t2.pushout.legs[0](tuple_name({x, y})));
        for (const auto& x : a1.level0.elements)
          for (const auto& y : b.level1.elements)
            l1t[tuple_name({i0[0](x), y})] =
                j1[0](t1.pushout.legs[1](tuple_name({x, y})));
        for (const auto& x : a2.level0.elements)
          for (const auto& y : b.level1.elements)
            l1t[tuple_name({i0[1](x), y})] =
                j1[1](t2.pushout.legs[1](tuple_name({x, y})));
        FinMap cmp1 = mediating_map(
            lhs.pushout,
            Cocone(s1, {FinMap(lhs.span[0].cod, s1, std::move(l0t)),
                        FinMap(lhs.span[1].cod, s1, std::move(l1t))}));
        CHECK(is_bijective(cmp1));
      }
}

TEST_CASE("cocontinuity on a coequalizer diagram") {
  // a1 = (2 -> 2 swap), a2 = (2 -> 1); two parallel squares a1 -> a2 picked
  // from the full square enumeration, coequalized pointwise.
  ArrowObj a1 = swap_two(), a2 = two_to_one(), b = id_two();
  auto squares = all_squares(a1, a2);
  REQUIRE(squares.size() >= 2);
  const Square &f = squares[0], &g = squares[1];
  auto [q0, c0] = coequalizer(f.f0, g.f0);
  auto [q1, c1] = coequalizer(f.f1, g.f1);
  std::map<std::string, std::string> dt;
  for (const auto& e : a2.level0.elements) dt[c0(e)] = c1(a2.diamond(e));
  ArrowObj q(q0, q1, FinMap(q0, q1, dt));
  // Tensoring with b commutes with the coequalizer: compare q [] b against
  // the coequalizer of (f [] 1) and (g [] 1).
  Square f1b = funny_on_squares(f, identity_square(b));
  Square g1b = funny_on_squares(g, identity_square(b));
  auto [e0, k0] = coequalizer(f1b.f0, g1b.f0);
  auto [e1, k1] = coequalizer(f1b.f1, g1b.f1);
  TensorResult qb = funny_tensor(q, b);
  CHECK(qb.object.level0.size() == e0.size());
  CHECK(qb.object.level1.size() == e1.size());
  // The canonical comparison at level 1: push the coequalized classes
  // through; counts agreeing plus surjectivity of both canonical maps makes
  // the comparison a bijection on these finite carriers.
  CHECK(is_surjective(k1));
  CHECK(is_surjective(c1));
  (void)k0;
}

TEST_CASE("duoidal report") {
  std::vector<ArrowObj> small = {unit_arrow(), two_to_one(), swap_two()};
  DuoidalOptions opts;
  opts.max_instances = 200;
  Report r = check_duoidal(small, opts);
  for (const auto& v : r.violations)
    MESSAGE(v.law, " @ ", v.instance, ": ", v.detail);
  CHECK(r.pass());
  CHECK(r.checked > 0);
}
