#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "comax/omega.hpp"
#include "comax/omega_generator.hpp"
#include "comax/report.hpp"

namespace comax {

/// Case split used to argue that nu(f v g) = max(nu(f), nu(g)) for a
/// comonotone pair. The hypotheses overlap; a pair exercises every branch
/// whose hypothesis it satisfies.
enum class ProofBranch {
  BothInF2,     // f, g in G, both in F2
  F2AndF3,      // f, g in G, one in F2 and the other in F3
  BothInF3,     // f, g in G, both in F3
  NotInF1,      // f or g outside F1
  F1MinusF2F3,  // f or g in F1 but outside F2 and F3
};

inline constexpr std::array<ProofBranch, 5> kAllProofBranches = {
    ProofBranch::BothInF2, ProofBranch::F2AndF3, ProofBranch::BothInF3, ProofBranch::NotInF1,
    ProofBranch::F1MinusF2F3};

std::string_view to_string(ProofBranch b);

using BranchSet = std::array<bool, kAllProofBranches.size()>;

/// Branches whose hypotheses the pair (f, g) satisfies, in either order.
BranchSet proof_branches(const MembershipFlags& f, const MembershipFlags& g);

/// Every canonical function whose value at p, prefix values (length up to
/// prefix_max), value at a_{N+1} and limit value all lie in `grid`.
/// Sorted and free of duplicates.
std::vector<OmegaFunction> structured_family(std::span<const Rational> grid, unsigned prefix_max);

struct Theorem2Options {
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;
  unsigned prefix_max = 2;
  std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  unsigned jobs = 1;
  GeneratorParams generator{};
};

/// Checks the non-monotonicity witness f_0 <= f_1 with nu(f_0) = 1 > 0 =
/// nu(f_1), then nu(f v g) = max(nu(f), nu(g)) over every comonotone pair of
/// the structured family and over `samples` generated comonotone pairs,
/// tagging each pair with its proof branch. Passes only when every branch
/// is exercised and no pair violates the identity.
VerificationReport theorem2_suite(const Theorem2Options& options);

/// Notes attached to every report about functions on X: only eventually
/// affine functions are representable here.
std::vector<std::string> representable_class_notes();

struct Problem1Options {
  std::uint64_t seed = 0;
  std::uint64_t samples = 2'000;
  unsigned prefix_max = 1;
  std::vector<Rational> grid = {Rational(0), Rational(1, 2), Rational(1)};
  unsigned jobs = 1;
  GeneratorParams generator{};
};

/// Searches normalized variants of nu for one that is comonotonically
/// maxitive on every tested pair yet not monotone. Never passes or fails:
/// the status is always "inconclusive" and candidates, if any, are listed.
VerificationReport problem1_exploration(const Problem1Options& options);

}  // namespace comax
