#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "operads/free_operad.hpp"
#include "fixtures.hpp"
#include "oracle_perms.hpp"
#include "test_support.hpp"

using namespace operads;

namespace {

Profile prof(const std::string& text) { return parse_profile(text); }

// one colour, a single unary generator u
Collection unary_collection() {
  Collection K;
  K.colours = {Colour("c")};
  K.add_component(prof("(c;c)"), {"u"});
  return K;
}

// one colour, a single binary generator g fixed by the transposition
Collection binary_collection() {
  Collection K;
  K.colours = {Colour("c")};
  K.add_component(prof("(c,c;c)"), {"g"});
  K.actions[{prof("(c,c;c)"), Permutation({2, 1})}] = {{"g", "g"}};
  return K;
}

// one colour, two binary generators swapped by the transposition
Collection free_binary_collection() {
  Collection K;
  K.colours = {Colour("c")};
  K.add_component(prof("(c,c;c)"), {"g0", "g1"});
  K.actions[{prof("(c,c;c)"), Permutation({2, 1})}] = {{"g0", "g1"}, {"g1", "g0"}};
  return K;
}

DecoratedVertex dv(const std::string& elem, const std::string& colour,
                   std::vector<DecChild> children) {
  DecoratedVertex v;
  v.element = elem;
  v.colour = Colour(colour);
  v.children = std::move(children);
  return v;
}

Leaf lf(int n, const std::string& colour) { return Leaf{n, Colour(colour)}; }

}  // namespace

TEST_CASE("collection validation") {
  SECTION("a binary generator with the trivial action is valid") {
    REQUIRE(validate_collection(binary_collection()).empty());
  }
  SECTION("empty collection is valid") {
    Collection K;
    K.colours = {Colour("c")};
    REQUIRE(validate_collection(K).empty());
  }
  SECTION("a broken composition law is reported") {
    Collection K;
    K.colours = {Colour("c")};
    K.add_component(prof("(c,c;c)"), {"g", "h"});
    // transposition acts non-involutively: (sw sw)* = id* fails
    K.actions[{prof("(c,c;c)"), Permutation({2, 1})}] = {{"g", "h"}, {"h", "h"}};
    std::vector<std::string> report = validate_collection(K);
    REQUIRE_FALSE(report.empty());
    REQUIRE(report.front().find("action law fails") != std::string::npos);
  }
  SECTION("missing actions are reported") {
    Collection K;
    K.colours = {Colour("c")};
    K.add_component(prof("(c,c;c)"), {"g"});
    std::vector<std::string> report = validate_collection(K);
    REQUIRE(report.size() == 1);
    REQUIRE(report.front().find("missing action") != std::string::npos);
  }
  SECTION("action landing outside the support is reported") {
    Collection K;
    K.colours = {Colour("a"), Colour("b")};
    K.add_component(prof("(a,b;a)"), {"g"});
    K.actions[{prof("(a,b;a)"), Permutation({2, 1})}] = {{"g", "g"}};
    std::vector<std::string> report = validate_collection(K);
    REQUIRE_FALSE(report.empty());
    REQUIRE(report.front().find("outside the support") != std::string::npos);
  }
}

TEST_CASE("free elements of a single unary generator are chains") {
  Collection K = unary_collection();
  std::vector<DecoratedTree> classes = free_elements(K, prof("(c;c)"), 3);
  REQUIRE(classes.size() == 4);
  REQUIRE(serialize_decorated(classes[0]) == "e:c");
  REQUIRE(serialize_decorated(classes[1]) == "u:c(l1:c)");
  REQUIRE(serialize_decorated(classes[2]) == "u:c(u:c(l1:c))");
  REQUIRE(serialize_decorated(classes[3]) == "u:c(u:c(u:c(l1:c)))");
}

TEST_CASE("free elements with bound zero") {
  Collection K = binary_collection();
  std::vector<DecoratedTree> classes = free_elements(K, prof("(c;c)"), 0);
  REQUIRE(classes.size() == 1);
  REQUIRE(classes[0].is_edge());
  REQUIRE(free_elements(K, prof("(c,c;c)"), 0).empty());
}

namespace {

// Independent quotient count for the two-vertex binary instance: all
// planar shapes and leaf numberings written out directly, the
// reordering moves applied as explicit rewrites on a tuple encoding
// (shape, three leaf numbers). Shape L is g(g(x,y),z), shape R is
// g(x,g(y,z)); swapping the root's children exchanges shapes, and
// swapping the inner vertex's children exchanges its two leaves.
int two_vertex_binary_quotient_oracle() {
  struct State {
    char shape;   // 'L' or 'R'
    int a, b, c;  // leaf numbers planar left to right
    bool operator<(const State& o) const {
      return std::tie(shape, a, b, c) < std::tie(o.shape, o.a, o.b, o.c);
    }
  };
  auto root_swap = [](State s) {
    // L: g(g(a,b),c) -> g(c,g(a,b)) = R with leaves (c,a,b)
    // R: g(a,g(b,c)) -> g(g(b,c),a) = L with leaves (b,c,a)
    if (s.shape == 'L') return State{'R', s.c, s.a, s.b};
    return State{'L', s.b, s.c, s.a};
  };
  auto inner_swap = [](State s) {
    if (s.shape == 'L') return State{'L', s.b, s.a, s.c};
    return State{'R', s.a, s.c, s.b};
  };
  std::set<State> all;
  int perm[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (char shape : {'L', 'R'})
    for (auto& p : perm) all.insert(State{shape, p[0], p[1], p[2]});
  int orbits = 0;
  std::set<State> seen;
  for (const State& start : all) {
    if (seen.count(start)) continue;
    ++orbits;
    std::vector<State> frontier{start};
    seen.insert(start);
    while (!frontier.empty()) {
      std::vector<State> next;
      for (const State& s : frontier)
        for (State t : {root_swap(s), inner_swap(s)})
          if (seen.insert(t).second) next.push_back(t);
      frontier = std::move(next);
    }
  }
  return orbits;
}

}  // namespace

TEST_CASE("two-vertex binary classes match the hand-rolled quotient oracle") {
  REQUIRE(two_vertex_binary_quotient_oracle() == 3);
  Collection K = binary_collection();
  std::vector<DecoratedTree> classes = free_elements(K, prof("(c,c,c;c)"), 2);
  int two_vertex = 0;
  for (const DecoratedTree& t : classes)
    if (t.vertex_count() == 2) ++two_vertex;
  REQUIRE(two_vertex == 3);
}

TEST_CASE("free elements listing grows prefix-closed in the bound") {
  for (const Collection& K : {unary_collection(), binary_collection(), free_binary_collection()}) {
    for (const Profile& b : {prof("(c;c)"), prof("(c,c;c)"), prof("(c,c,c;c)")}) {
      std::vector<DecoratedTree> small = free_elements(K, b, 2);
      std::vector<DecoratedTree> big = free_elements(K, b, 3);
      REQUIRE(small.size() <= big.size());
      for (std::size_t i = 0; i < small.size(); ++i) REQUIRE(small[i] == big[i]);
    }
  }
}

TEST_CASE("orbit sizes divide the bound from the vertex symmetries") {
  Collection K = free_binary_collection();
  std::vector<DecoratedTree> classes = free_elements(K, prof("(c,c,c;c)"), 3);
  REQUIRE_FALSE(classes.empty());
  for (const DecoratedTree& t : classes) {
    if (t.is_edge()) continue;
    std::size_t orbit = decorated_orbit(t, K).size();
    // n! times the product of the child-count factorials
    std::size_t bound = 1;
    for (int k = 2; k <= t.vertex_count(); ++k) bound *= static_cast<std::size_t>(k);
    struct Fact {
      std::size_t acc = 1;
      void run(const DecoratedVertex& v) {
        std::size_t f = 1;
        for (std::size_t k = 2; k <= v.children.size(); ++k) f *= k;
        acc *= f;
        for (const DecChild& c : v.children)
          if (!c.is_leaf()) run(c.vertex());
      }
    } fact;
    fact.run(t.root());
    bound *= fact.acc;
    REQUIRE(bound % orbit == 0);
  }
}

TEST_CASE("every orbit member canonicalizes to the same representative") {
  Collection K = free_binary_collection();
  for (const DecoratedTree& t : free_elements(K, prof("(c,c,c;c)"), 2)) {
    if (t.is_edge()) continue;
    for (const auto& [key, member] : decorated_orbit(t, K))
      REQUIRE(canonical_decorated(member, K) == t);
  }
}

TEST_CASE("grafting composes decorated trees") {
  DecoratedTree corolla =
      DecoratedTree::node(dv("g", "c", {DecChild(lf(1, "c")), DecChild(lf(2, "c"))}));
  SECTION("graft into the first leaf") {
    DecoratedTree t = graft(corolla, 1, corolla);
    REQUIRE(serialize_decorated(t) == "g:c(g:c(l1:c,l2:c),l3:c)");
  }
  SECTION("graft into the second leaf") {
    DecoratedTree t = graft(corolla, 2, corolla);
    REQUIRE(serialize_decorated(t) == "g:c(l1:c,g:c(l2:c,l3:c))");
  }
  SECTION("grafting the edge tree is the identity") {
    REQUIRE(graft(corolla, 1, DecoratedTree::edge(Colour("c"))) == corolla);
    REQUIRE(graft(DecoratedTree::edge(Colour("c")), 1, corolla) == corolla);
  }
  SECTION("colour mismatch is rejected") {
    DecoratedTree other = DecoratedTree::edge(Colour("d"));
    REQUIRE_THROWS_AS(graft(corolla, 1, other), DomainError);
    REQUIRE_THROWS_AS(graft(corolla, 3, corolla), DomainError);
  }
}

TEST_CASE("leaf relabelling is a right action") {
  DecoratedTree t = graft(
      DecoratedTree::node(dv("g", "c", {DecChild(lf(1, "c")), DecChild(lf(2, "c"))})), 1,
      DecoratedTree::node(dv("g", "c", {DecChild(lf(1, "c")), DecChild(lf(2, "c"))})));
  Permutation alpha({2, 3, 1});
  Permutation beta({3, 2, 1});
  REQUIRE(leaf_relabel(leaf_relabel(t, alpha), beta) == leaf_relabel(t, alpha * beta));
  // boundary permutes covariantly
  Profile b = decorated_boundary(t);
  REQUIRE(decorated_boundary(leaf_relabel(t, alpha)) == permute_profile(b, alpha));
}

TEST_CASE("evaluating chains in the arity-one exclusive-or operad") {
  Collection K = unary_collection();
  FiniteOperad P = operad_from_monoid(fixtures::xor_monoid());
  CollectionMorphism gen;
  gen.maps[prof("(c;c)")]["u"] = "1";
  FreeEvaluator eval = extend_to_free(K, P, gen);

  std::vector<DecoratedTree> classes = free_elements(K, prof("(c;c)"), 6);
  REQUIRE(classes.size() == 7);
  for (const DecoratedTree& t : classes) {
    int k = t.vertex_count();
    // direct iterated product in the monoid
    std::string expect = k % 2 == 0 ? "0" : "1";
    REQUIRE(eval(t).name == expect);
  }
}

TEST_CASE("the edge class evaluates to the unit") {
  Collection K = free_binary_collection();
  FiniteOperad A = ass_truncated(3);
  CollectionMorphism gen;
  gen.maps[prof("(c,c;c)")]["g0"] = "12";
  gen.maps[prof("(c,c;c)")]["g1"] = "21";
  FreeEvaluator eval = extend_to_free(K, A, gen);
  OperadElement got = eval(DecoratedTree::edge(Colour("c")));
  REQUIRE(got.name == "1");
  REQUIRE(got.profile == prof("(c;c)"));
}

// A generator sent to the identity permutation: two-vertex trees then
// evaluate to block composites. The generator's orbit must be free for
// the map to be equivariant, so the two-generator collection is used.
TEST_CASE("two-vertex trees evaluate to block composites") {
  Collection K = free_binary_collection();
  FiniteOperad A = ass_truncated(3);
  CollectionMorphism gen;
  gen.maps[prof("(c,c;c)")]["g0"] = "12";
  gen.maps[prof("(c,c;c)")]["g1"] = "21";
  FreeEvaluator eval = extend_to_free(K, A, gen);

  DecoratedTree comb = graft(
      DecoratedTree::node(dv("g0", "c", {DecChild(lf(1, "c")), DecChild(lf(2, "c"))})), 1,
      DecoratedTree::node(dv("g0", "c", {DecChild(lf(1, "c")), DecChild(lf(2, "c"))})));
  // left comb: the block-permutation oracle gives the composite
  Permutation expect =
      oracle::block_substitute(Permutation::identity(2), 1, Permutation::identity(2));
  REQUIRE(eval(comb).name == perm_name(expect));

  // a twisted numbering applies the leaf action on top
  DecoratedTree twisted = leaf_relabel(comb, Permutation({3, 1, 2}));
  OperadElement base = eval(comb);
  OperadElement want{permute_profile(base.profile, Permutation({3, 1, 2})),
                     A.base.act(base.profile, Permutation({3, 1, 2}), base.name)};
  REQUIRE(eval(twisted) == want);
}

TEST_CASE("evaluation is constant on equivalence classes") {
  Collection K = free_binary_collection();
  FiniteOperad A = ass_truncated(4);
  CollectionMorphism gen;
  gen.maps[prof("(c,c;c)")]["g0"] = "12";
  gen.maps[prof("(c,c;c)")]["g1"] = "21";
  FreeEvaluator eval = extend_to_free(K, A, gen);
  for (const DecoratedTree& t : free_elements(K, prof("(c,c,c;c)"), 3)) {
    OperadElement value = eval(t);
    if (t.is_edge()) continue;
    for (const auto& [key, member] : decorated_orbit(t, K)) REQUIRE(eval(member) == value);
  }
}

TEST_CASE("a non-equivariant generator map is rejected") {
  Collection K = free_binary_collection();
  FiniteOperad A = ass_truncated(3);
  CollectionMorphism gen;
  gen.maps[prof("(c,c;c)")]["g0"] = "12";
  gen.maps[prof("(c,c;c)")]["g1"] = "12";  // should be 21
  REQUIRE_THROWS_AS(extend_to_free(K, A, gen), DomainError);
}

TEST_CASE("the evaluator is an operad morphism") {
  Collection K = free_binary_collection();
  FiniteOperad A = ass_truncated(5);
  CollectionMorphism gen;
  gen.maps[prof("(c,c;c)")]["g0"] = "12";
  gen.maps[prof("(c,c;c)")]["g1"] = "21";
  FreeEvaluator eval = extend_to_free(K, A, gen);

  std::vector<DecoratedTree> classes = free_elements(K, prof("(c,c,c;c)"), 2);
  DecoratedTree corolla0 =
      DecoratedTree::node(dv("g0", "c", {DecChild(lf(1, "c")), DecChild(lf(2, "c"))}));
  for (const DecoratedTree& t : classes) {
    OperadElement et = eval(t);
    // grafting maps to composition
    for (int i = 1; i <= decorated_boundary(t).arity(); ++i) {
      OperadElement es = eval(corolla0);
      OperadElement expect{circ_profile(et.profile, i, es.profile),
                           A.circ_value(et.profile, i, es.profile, et.name, es.name)};
      REQUIRE(eval(graft(t, i, corolla0)) == expect);
    }
    // relabelling maps to the symmetric action
    int m = decorated_boundary(t).arity();
    support::Rng rng(static_cast<unsigned>(7 * m + 13));
    Permutation alpha = support::random_permutation(rng, m);
    OperadElement expect{permute_profile(et.profile, alpha),
                         A.base.act(et.profile, alpha, et.name)};
    REQUIRE(eval(leaf_relabel(t, alpha)) == expect);
  }
}
