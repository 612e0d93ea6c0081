#include "singlet/symmetry.hpp"

#include "singlet/builder.hpp"
#include "singlet/cg.hpp"
#include "singlet/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace singlet {

CoupledState flip_magnetic(const CoupledState& state) {
    CoupledState out;
    out.particles = state.particles;
    out.spin = state.spin;
    out.j = state.j;
    out.m = -state.m;
    out.index = state.index;
    for (const auto& [word, amp] : state.amps) {
        BasisWord flipped = word;
        for (auto& letter : flipped.letters_twice) letter = static_cast<std::int8_t>(-letter);
        out.amps.emplace(std::move(flipped), amp);
    }
    return out;
}

std::optional<int> relative_sign(const AmplitudeMap& a, const AmplitudeMap& b) {
    if (a.size() != b.size()) return std::nullopt;
    int sign = 0;
    auto ib = b.begin();
    for (auto ia = a.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        int term_sign;
        if (ia->second == ib->second) {
            term_sign = +1;
        } else if (ia->second == -ib->second) {
            term_sign = -1;
        } else {
            return std::nullopt;
        }
        if (sign == 0) {
            sign = term_sign;
        } else if (sign != term_sign) {
            return std::nullopt;
        }
    }
    return sign == 0 ? std::optional<int>(+1) : std::optional<int>(sign);
}

std::optional<Parity> parity_of(const CoupledState& state) {
    const CoupledState flipped = flip_magnetic(state);
    const std::optional<int> sign = relative_sign(flipped.amps, state.amps);
    if (!sign) return std::nullopt;
    return *sign > 0 ? Parity::Even : Parity::Odd;
}

Parity predicted_parity(int particles, HalfInt j, HalfInt spin) {
    if (count_states(j, particles, spin) == 0) {
        throw std::domain_error("predicted_parity: unreachable cell");
    }
    // Every step j_prev -> j_new contributes (-1)^(j_prev + s - j_new); the
    // product telescopes to (-1)^(h*s - j) independently of the path.
    const int exponent = (particles * spin.twice - j.twice) / 2;
    return exponent % 2 == 0 ? Parity::Even : Parity::Odd;
}

CoupledState adjacent_transposition(const CoupledState& state, int k) {
    if (k < 1 || k >= state.particles) throw std::domain_error("adjacent_transposition: k out of range");
    CoupledState out;
    out.particles = state.particles;
    out.spin = state.spin;
    out.j = state.j;
    out.m = state.m;
    out.index = state.index;
    for (const auto& [word, amp] : state.amps) {
        BasisWord swapped = word;
        std::swap(swapped.letters_twice[static_cast<std::size_t>(k - 1)],
                  swapped.letters_twice[static_cast<std::size_t>(k)]);
        out.amps.emplace(std::move(swapped), amp);
    }
    return out;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::domain_error("Partition: empty");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::domain_error("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::domain_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    int n = 0;
    for (const int part : parts) n += part;
    return n;
}

BigInt young_dimension(const Partition& partition) {
    // f^lambda = n! * prod_{i<j<=k} (l_i - l_j + j - i) / prod_i (l_i + k - i)!
    const auto& l = partition.parts;
    const int k = static_cast<int>(l.size());
    BigInt numerator = factorial(partition.weight());
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            numerator *= l[static_cast<std::size_t>(i - 1)] - l[static_cast<std::size_t>(j - 1)] + j - i;
        }
    }
    BigInt denominator = 1;
    for (int i = 1; i <= k; ++i) {
        denominator *= factorial(l[static_cast<std::size_t>(i - 1)] + k - i);
    }
    return numerator / denominator;
}

std::vector<std::vector<RadicalSum>> transposition_action(const SingletBasis& basis, int k) {
    const std::size_t dim = basis.size();
    std::vector<std::vector<RadicalSum>> action(dim, std::vector<RadicalSum>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        const CoupledState image = adjacent_transposition(basis.states[col], k);
        // The basis is exactly orthonormal, so coordinates are inner products.
        AmplitudeMap residual = image.amps;
        for (std::size_t row = 0; row < dim; ++row) {
            const RadicalSum coeff = inner_product(basis.states[row].amps, image.amps);
            action[row][col] = coeff;
            accumulate_scaled(residual, basis.states[row].amps, -coeff);
        }
        if (!residual.empty()) {
            throw ConstructionError("transposition_action: image leaves the singlet span");
        }
    }
    return action;
}

bool singlet_space_closure_check(const SingletBasis& basis) {
    for (int k = 1; k < basis.particles; ++k) {
        try {
            transposition_action(basis, k);
        } catch (const ConstructionError&) {
            return false;
        }
    }
    return true;
}

}  // namespace singlet
