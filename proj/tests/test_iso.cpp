#include <numeric>

#include "helpers.hpp"

using namespace nagata;
using nagata::corpus::chain_brouwerian;
using nagata::corpus::collapsing_pair;
using nagata::corpus::godel3;
using nagata::corpus::lukasiewicz3;

namespace {

// Applies a permutation to a residuated structure: index i becomes perm[i].
ResiduatedStructure permuted(const ResiduatedStructure& r, const std::vector<int>& perm) {
  const int n = r.size();
  ResiduatedStructure out = r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.base.poset.leq[perm[i]][perm[j]] = r.base.poset.le(i, j);
      out.base.mul[perm[i]][perm[j]] = perm[r.base.mul[i][j]];
      (*out.base.meet)[perm[i]][perm[j]] = perm[(*r.base.meet)[i][j]];
      (*out.base.join)[perm[i]][perm[j]] = perm[(*r.base.join)[i][j]];
      out.lres[perm[i]][perm[j]] = perm[r.lres[i][j]];
      out.rres[perm[i]][perm[j]] = perm[r.rres[i][j]];
    }
  for (int i = 0; i < n; ++i) out.base.poset.labels[perm[i]] = r.base.poset.label(i);
  out.base.unit = perm[*r.base.unit];
  if (r.point) out.point = perm[*r.point];
  return out;
}

}  // namespace

TEST_CASE("relabeled posets are isomorphic, different shapes are not") {
  const Poset c = Poset::chain(3);
  Poset r;
  r.size = 3;
  r.labels = {"x", "y", "z"};
  // The chain 1 < 0 < 2 written on shuffled indices.
  r.leq = {{1, 0, 1}, {1, 1, 1}, {0, 0, 1}};
  REQUIRE_PASSES(check_poset(r));
  REQUIRE(isomorphic(view_of(c), view_of(r)));
  REQUIRE(canonical_key(view_of(c)) == canonical_key(view_of(r)));

  REQUIRE_FALSE(isomorphic(view_of(c), view_of(Poset::antichain(3))));
  REQUIRE_FALSE(isomorphic(view_of(c), view_of(Poset::chain(4))));
}

TEST_CASE("posemigroup isomorphism respects the multiplication") {
  const ResiduatedStructure g = godel3();
  const ResiduatedStructure shuffled = permuted(g, {2, 0, 1});
  REQUIRE_PASSES(check_residuated_lattice(shuffled));
  REQUIRE(isomorphic(view_of(g), view_of(shuffled)));

  // Same chain, different product: godel and lukasiewicz are distinct.
  REQUIRE_FALSE(isomorphic(view_of(godel3()), view_of(lukasiewicz3())));
  REQUIRE(isomorphic(view_of(godel3().base), view_of(godel3().base)));
}

TEST_CASE("pair views include the connecting maps") {
  const ResiduatedStructure g = godel3();
  const TwistablePair idg = identity_pair(g);
  const ResiduatedStructure shuffled = permuted(g, {1, 2, 0});
  const TwistablePair ids = identity_pair(shuffled);
  REQUIRE(isomorphic(view_of(idg), view_of(ids)));

  const TwistablePair c = collapsing_pair();
  REQUIRE_FALSE(isomorphic(view_of(idg), view_of(c)));
  REQUIRE(isomorphic(view_of(c), view_of(c)));
}

TEST_CASE("bimodule views are pair views over both sorts") {
  const Bimodule m = division_bimodule(godel3(), 0);
  const Bimodule k = division_bimodule(permuted(godel3(), {2, 0, 1}), 2);
  REQUIRE(isomorphic(view_of(m), view_of(k)));
  REQUIRE_FALSE(
      isomorphic(view_of(m), view_of(division_bimodule(lukasiewicz3(), 0))));
}

TEST_CASE("bimonoid views separate the two operations") {
  const Bimonoid a = brouwerian_bimonoid(chain_brouwerian(2, 0));
  const FractionsResult f = bimonoid_of_fractions(chain_brouwerian(2, 0));
  // The embedding is onto for the 2-chain, so the fractions algebra is a
  // relabeled copy of the direct bimonoid.
  REQUIRE(isomorphic(view_of(a), view_of(f.fractions)));

  const Bimonoid b = brouwerian_bimonoid(chain_brouwerian(2, 1));
  REQUIRE_FALSE(isomorphic(view_of(a), view_of(b)));
}

TEST_CASE("the canonical key refuses oversized carriers") {
  const Poset big = Poset::chain(9);
  bool threw = false;
  try {
    canonical_key(view_of(big));
  } catch (const Error& e) {
    threw = true;
    REQUIRE(e.code() == Errc::BoundExceeded);
  }
  REQUIRE(threw);
}
