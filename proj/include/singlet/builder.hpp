// Layer-by-layer construction of all coupled states of a chain of identical
// spins, singlet enumeration, state counting, and zigzag product states.

#pragma once

#include "singlet/errors.hpp"
#include "singlet/state.hpp"

#include <cstdint>
#include <vector>

namespace singlet {

struct BuildOptions {
    // Drop cells with j > (n - h) * s that cannot reach the n-particle singlets.
    bool prune_for_singlets = true;
    // Refuse builds whose predicted amplitude count exceeds this (CapacityError).
    std::uint64_t amplitude_budget = 10'000'000;
};

// One coupling step: the (j_prev, parent_index) family of `prev` gains one
// particle of spin `spin`, landing on (j_new, m). The result combines the
// 2s+1 magnetic branches with their Clebsch-Gordan weights and is normalized
// whenever the parent family is. Throws ConstructionError if a required
// source state is missing, std::domain_error for invalid targets.
CoupledState couple_step(const Layer& prev, HalfInt j_prev, int parent_index, HalfInt spin, HalfInt j_new,
                         HalfInt m);

// j -> j + s
CoupledState couple_up(const Layer& prev, HalfInt j_prev, int parent_index, HalfInt spin, HalfInt m);
// j -> j - s (requires j - s >= 0)
CoupledState couple_down(const Layer& prev, HalfInt j_prev, int parent_index, HalfInt spin, HalfInt m);
// j -> j, integer spin only, j >= 1
CoupledState couple_level(const Layer& prev, HalfInt j_prev, int parent_index, HalfInt spin, HalfInt m);

// Layers 1..n. Cell enumeration order: children of the j+s parent block
// first, then descending parent j down to |j-s|; within a block, parents in
// their own index order.
std::vector<Layer> build_layers(int n, HalfInt spin, const BuildOptions& opts = {});

// All j = m = 0 states of n particles, in enumeration order. Empty when no
// singlet exists (n * spin not an integer).
SingletBasis singlet_basis(int n, HalfInt spin, const BuildOptions& opts = {});

// Number of states of `particles` particles with total angular momentum j,
// by pure recurrence (no state construction).
BigInt count_states(HalfInt j, int particles, HalfInt spin);

// Total predicted amplitude count of a build, saturating at `cap`.
std::uint64_t predicted_amplitude_count(int n, HalfInt spin, bool prune, std::uint64_t cap);

// Tensor product of block singlets (blocks of 2 for any spin, 3 for integer
// spin); a j = m = 0 product state with index 0.
CoupledState zigzag_state(HalfInt spin, const std::vector<int>& block_sizes);

// Unnormalized image under the total raising / lowering operator, exact.
AmplitudeMap apply_total_raising(const CoupledState& state);
AmplitudeMap apply_total_lowering(const CoupledState& state);

}  // namespace singlet
