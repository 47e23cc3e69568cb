#pragma once

// Randomized checks of the almost-farthest-set and generalized-diameter
// identities. Both sides of every identity are evaluated by exhaustive scans
// over small generated instances.
//
// Trial t of a check with base seed s draws everything from
// SplitMix64(derive_seed(s, t)), so any single case replays in isolation via
// replay_case(name, s, t).
//
// Index-set comparisons tolerate a point on the wrong side only when its
// distance sits within 1e-12 * scale of the threshold, where scale is the
// largest coordinate magnitude or radius involved. Value identities use the
// same relative tolerance. The convex-hull clause of check_gd_axioms runs in
// R^2 only, by sampling hull edges, with tolerance 1e-3.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "remotal/norms.hpp"

namespace remotal {

inline constexpr double kPropertyRelTol = 1e-12;
inline constexpr double kHullTol = 1e-3;

struct PropertyCase {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  // Norm and scalars always; point sets are included when the case fails.
  nlohmann::json instance;
  bool passed = true;
  // Failing clauses with both sides' values; null when passed.
  nlohmann::json counterexample;
};

nlohmann::json to_json(const PropertyCase& c);

// Norms the checks draw from: l2, l1, linf and a weighted l3 in R^2, the
// polyhedral square, and l2, l1 and the polyhedral cube in R^3.
std::vector<NormSpec> property_palette();

std::vector<PropertyCase> check_qf_algebra(std::uint64_t seed, std::size_t trials);
std::vector<PropertyCase> check_union_lemma(std::uint64_t seed, std::size_t trials);
std::vector<PropertyCase> check_containment_cont(std::uint64_t seed, std::size_t trials);
std::vector<PropertyCase> check_farclose(std::uint64_t seed, std::size_t trials);
std::vector<PropertyCase> check_gd_axioms(std::uint64_t seed, std::size_t trials);

// Names accepted by replay_case, in suite order.
const std::vector<std::string>& property_names();

PropertyCase replay_case(const std::string& name, std::uint64_t seed, std::size_t trial);

}  // namespace remotal
