// Magnetic sign-flip parity, symmetric-group action on tensor positions and
// irreducible-representation dimensions.

#pragma once

#include "singlet/state.hpp"

#include <optional>
#include <vector>

namespace singlet {

enum class Parity { Even, Odd };

// Negates every letter of every word; amplitudes unchanged. The result is a
// valid state at -m.
CoupledState flip_magnetic(const CoupledState& state);

// +1 if a == b, -1 if a == -b (exact); nullopt otherwise.
std::optional<int> relative_sign(const AmplitudeMap& a, const AmplitudeMap& b);

// Compares flip_magnetic(state) with +/-state exactly; nullopt when the
// state is not an eigenstate of the flip.
std::optional<Parity> parity_of(const CoupledState& state);

// Parity of the (particles, j) subspace from the coupling propagation rules;
// throws std::domain_error when the cell is unreachable.
Parity predicted_parity(int particles, HalfInt j, HalfInt spin);

// Swaps tensor positions k and k+1 (1-based) in every word.
CoupledState adjacent_transposition(const CoupledState& state, int k);

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;
    explicit Partition(std::vector<int> p);
    int weight() const;
};

// Dimension of the S_n irreducible representation labeled by the partition.
BigInt young_dimension(const Partition& partition);

// Exact coefficients of adjacent_transposition(basis[col], k) in the basis;
// throws ConstructionError if the image leaves the exact span.
std::vector<std::vector<RadicalSum>> transposition_action(const SingletBasis& basis, int k);

// True iff every adjacent transposition maps each basis state into the exact
// span of the basis.
bool singlet_space_closure_check(const SingletBasis& basis);

}  // namespace singlet
