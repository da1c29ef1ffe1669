#include <doctest.h>

#include <set>

#include "nrw/fixtures.hpp"
#include "nrw/io.hpp"
#include "nrw/search.hpp"

using namespace nrw;

TEST_CASE("the symmetry group has 72 transforms preserving the key properties") {
  const auto group = symmetry_transforms();
  CHECK(group.size() == 72);

  const Morphism leech = fixtures::morphism("leech");
  std::set<std::string> images;
  for (const MorphismTransform& t : group) {
    const Morphism g = transformed(leech, t);
    CHECK(g.uniform_rank() == 13);
    CHECK(decide_squarefree(g).verdict == Verdict::ProvenTrue);
    images.insert(serialize_morphism(g));
  }
  // cyclic + palindromic images: the stabilizer has order 6, the orbit 12
  CHECK(images.size() == 12);
  CHECK(72 % images.size() == 0);
  CHECK(canonical_form(leech, group) <= serialize_morphism(leech));
}

TEST_CASE("orbit reduction under the identity-only group") {
  const std::vector<MorphismTransform> id = {identity_transform()};
  const std::vector<Morphism> in = {fixtures::morphism("rank5")};
  const auto classes = orbit_reduce(in, id);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].size == 1);
  CHECK(classes[0].outside == 0);
  CHECK(serialize_morphism(classes[0].representative) == serialize_morphism(in[0]));
}

TEST_CASE("orbits partition their input") {
  // the rank-5 morphism's full orbit: every member present, one class
  const auto group = symmetry_transforms();
  std::set<std::string> serials;
  std::vector<Morphism> orbit;
  for (const MorphismTransform& t : group) {
    Morphism g = transformed(fixtures::morphism("rank5"), t);
    if (serials.insert(serialize_morphism(g)).second) orbit.push_back(std::move(g));
  }
  const auto classes = orbit_reduce(orbit, group);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].size == orbit.size());
  CHECK(classes[0].outside == 0);
  CHECK(72 % classes[0].size == 0);
}

TEST_CASE("no uniform squarefree morphisms below rank 7 (pruned and audited)") {
  for (int r = 2; r <= 6; ++r) {
    SearchConfig pruned;
    pruned.threads = 1;
    SearchConfig full = pruned;
    full.prune = false;
    const SearchReport a = search_uniform_squarefree(r, pruned);
    const SearchReport b = search_uniform_squarefree(r, full);
    CHECK(a.survivors.empty());
    CHECK(io::emit_census_table(a) == io::emit_census_table(b));
    CHECK(a.pool_size == b.pool_size);
  }
}

TEST_CASE("census rejects out-of-range ranks") {
  CHECK_THROWS_AS(search_uniform_squarefree(1), std::invalid_argument);
  CHECK_THROWS_AS(search_uniform_squarefree(14), std::invalid_argument);
  CHECK_THROWS_AS(search_weakly_squarefree_thue(7, Alphabet::ternary()), std::invalid_argument);
}

TEST_CASE("cyclic search forces the rotated images") {
  const SearchReport r5 = search_cyclic_squarefree(5);
  CHECK(r5.survivors.empty());
  CHECK(r5.pool_size == 30);

  const SearchReport r13 = search_cyclic_squarefree(13);
  const std::string leech = serialize_morphism(fixtures::morphism("leech"));
  bool found = false;
  for (const Morphism& m : r13.survivors) {
    CHECK(is_cyclic(m));
    if (serialize_morphism(m) == leech) found = true;
  }
  CHECK(found);
  CHECK(r13.survivors.size() == 6);  // derived count
}

TEST_CASE("weakly squarefree Thue sweep refutes every low-rank candidate") {
  const SearchReport r2 = search_weakly_squarefree_thue(2, Alphabet::ternary());
  CHECK(r2.pool_size == 513);
  CHECK(r2.survivors.empty());
  CHECK(r2.refuted_count == r2.pool_size);
  CHECK(r2.refutations_validated == r2.refuted_count);
  for (const SweepRefutation& s : r2.refutation_samples) {
    CHECK(validate_decision(s.candidate, s.decision));
    CHECK(!fixed_point_seeds(s.candidate).empty());
  }

  const SearchReport r3 = search_weakly_squarefree_thue(3, Alphabet::ternary());
  CHECK(r3.pool_size == 13851);
  CHECK(r3.survivors.empty());
  CHECK(r3.refuted_count == r3.pool_size);

  const SearchReport b3 = search_weakly_squarefree_thue(3, Alphabet::binary01());
  CHECK(b3.survivors.empty());
  CHECK(b3.refuted_count == b3.pool_size);
}

TEST_CASE("triple-property screening keeps nothing at tiny ranks") {
  const SearchReport r = search_triple_property(4);
  CHECK(r.survivors.empty());
  CHECK(r.refuted_count == 0);  // no squarefree survivors to screen
}
