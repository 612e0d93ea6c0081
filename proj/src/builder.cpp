#include "singlet/builder.hpp"

#include "singlet/cg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace singlet {

namespace {

void require_spin(HalfInt spin) {
    if (spin.twice < 1) throw std::domain_error("builder: spin must be >= 1/2");
}

// Parent momenta that can couple with one added spin to reach j, highest
// first (higher parent j, then equal for integer spin, then lower), which
// fixes the enumeration index i of every constructed state.
std::vector<HalfInt> parent_momenta(HalfInt j, HalfInt spin) {
    std::vector<HalfInt> parents;
    const int lo = std::abs(j.twice - spin.twice);
    for (int t = j.twice + spin.twice; t >= lo; t -= 2) parents.push_back(HalfInt(t));
    return parents;
}

HalfInt prune_bound(int n, int h, HalfInt spin) { return HalfInt((n - h) * spin.twice); }

}  // namespace

BigInt count_states(HalfInt j, int particles, HalfInt spin) {
    require_spin(spin);
    if (particles < 1) throw std::domain_error("count_states: particles must be >= 1");
    if (j.is_negative() || (j.twice - particles * spin.twice) % 2 != 0) return 0;

    // g[t] = number of states with doubled momentum t at the current layer.
    std::map<int, BigInt> g{{spin.twice, BigInt(1)}};
    for (int h = 2; h <= particles; ++h) {
        std::map<int, BigInt> next;
        for (int t = (h * spin.twice) % 2; t <= h * spin.twice; t += 2) {
            BigInt total = 0;
            for (const HalfInt parent : parent_momenta(HalfInt(t), spin)) {
                auto it = g.find(parent.twice);
                if (it != g.end()) total += it->second;
            }
            if (total != 0) next.emplace(t, std::move(total));
        }
        g = std::move(next);
    }
    auto it = g.find(j.twice);
    return it == g.end() ? BigInt(0) : it->second;
}

std::uint64_t predicted_amplitude_count(int n, HalfInt spin, bool prune, std::uint64_t cap) {
    require_spin(spin);
    // Words of h letters with doubled letter sum t, capped at `cap`.
    const BigInt big_cap = cap;
    std::map<int, BigInt> words{{0, BigInt(1)}};  // h = 0
    std::map<int, BigInt> g;                      // state counts, h = 0 sentinel handled below
    BigInt total = 0;
    for (int h = 1; h <= n; ++h) {
        std::map<int, BigInt> next_words;
        for (const auto& [t, c] : words) {
            for (int mu = -spin.twice; mu <= spin.twice; mu += 2) {
                BigInt& slot = next_words[t + mu];
                slot += c;
                if (slot > big_cap) slot = big_cap + 1;
            }
        }
        words = std::move(next_words);

        std::map<int, BigInt> next_g;
        if (h == 1) {
            next_g.emplace(spin.twice, BigInt(1));
        } else {
            for (int t = (h * spin.twice) % 2; t <= h * spin.twice; t += 2) {
                BigInt sum = 0;
                for (const HalfInt parent : parent_momenta(HalfInt(t), spin)) {
                    auto it = g.find(parent.twice);
                    if (it != g.end()) sum += it->second;
                }
                if (sum != 0) next_g.emplace(t, std::move(sum));
            }
        }
        g = std::move(next_g);

        for (const auto& [t, states] : g) {
            if (prune && HalfInt(t) > prune_bound(n, h, spin)) continue;
            // One state per m projection; each sector holds words[t_m] words.
            for (int tm = -t; tm <= t; tm += 2) {
                auto wit = words.find(tm);
                if (wit == words.end()) continue;
                total += states * wit->second;
                if (total > big_cap) return cap + 1;
            }
        }
    }
    return total.convert_to<std::uint64_t>();
}

CoupledState couple_step(const Layer& prev, HalfInt j_prev, int parent_index, HalfInt spin, HalfInt j_new,
                         HalfInt m) {
    require_spin(spin);
    if (j_new.is_negative()) throw std::domain_error("couple_step: target j below zero");
    if (!valid_jm(j_new, m)) throw std::domain_error("couple_step: invalid target (j, m)");
    if (j_new > j_prev + spin || j_new.twice < std::abs(j_prev.twice - spin.twice)) {
        throw std::domain_error("couple_step: triangle rule violated");
    }

    CoupledState out;
    out.particles = prev.particles + 1;
    out.spin = spin;
    out.j = j_new;
    out.m = m;
    for (int mu_t = -spin.twice; mu_t <= spin.twice; mu_t += 2) {
        const HalfInt mu(mu_t);
        const HalfInt m_src = m - mu;
        if (!valid_jm(j_prev, m_src)) continue;
        const RadicalSum coeff = clebsch_gordan(j_prev, m_src, spin, mu, j_new, m);
        if (coeff.is_zero()) continue;
        const auto* sources = prev.cell(j_prev, m_src);
        if (sources == nullptr || parent_index < 1 || parent_index > static_cast<int>(sources->size())) {
            std::ostringstream os;
            os << "couple_step: missing source state (h=" << prev.particles << ", j=" << j_prev.to_string()
               << ", m=" << m_src.to_string() << ", i=" << parent_index << ")";
            throw ConstructionError(os.str());
        }
        const CoupledState& src = (*sources)[static_cast<std::size_t>(parent_index - 1)];
        for (const auto& [word, amp] : src.amps) {
            const BasisWord extended = word.appended(mu);
            auto it = out.amps.find(extended);
            if (it == out.amps.end()) {
                out.amps.emplace(extended, amp * coeff);
            } else {
                it->second += amp * coeff;
                if (it->second.is_zero()) out.amps.erase(it);
            }
        }
    }
    return out;
}

CoupledState couple_up(const Layer& prev, HalfInt j_prev, int parent_index, HalfInt spin, HalfInt m) {
    return couple_step(prev, j_prev, parent_index, spin, j_prev + spin, m);
}

CoupledState couple_down(const Layer& prev, HalfInt j_prev, int parent_index, HalfInt spin, HalfInt m) {
    if ((j_prev - spin).is_negative()) throw std::domain_error("couple_down: target j below zero");
    return couple_step(prev, j_prev, parent_index, spin, j_prev - spin, m);
}

CoupledState couple_level(const Layer& prev, HalfInt j_prev, int parent_index, HalfInt spin, HalfInt m) {
    if (!spin.is_integer()) throw std::domain_error("couple_level: horizontal step requires integer spin");
    if (j_prev.twice < 2) throw std::domain_error("couple_level: requires j >= 1");
    return couple_step(prev, j_prev, parent_index, spin, j_prev, m);
}

std::vector<Layer> build_layers(int n, HalfInt spin, const BuildOptions& opts) {
    require_spin(spin);
    if (n < 1) throw std::domain_error("build_layers: n must be >= 1");

    const std::uint64_t predicted =
        predicted_amplitude_count(n, spin, opts.prune_for_singlets, opts.amplitude_budget);
    if (predicted > opts.amplitude_budget) {
        std::ostringstream os;
        os << "build_layers: predicted amplitude count exceeds budget of " << opts.amplitude_budget
           << " (n=" << n << ", spin2=" << spin.twice << ")";
        throw CapacityError(os.str());
    }

    std::vector<Layer> layers;
    layers.reserve(static_cast<std::size_t>(n));

    Layer first;
    first.particles = 1;
    for (int mu_t = -spin.twice; mu_t <= spin.twice; mu_t += 2) {
        const HalfInt mu(mu_t);
        CoupledState s;
        s.particles = 1;
        s.spin = spin;
        s.j = spin;
        s.m = mu;
        s.index = 1;
        s.amps.emplace(BasisWord({static_cast<std::int8_t>(mu.twice)}), RadicalSum(1));
        first.cells[{spin, mu}].push_back(std::move(s));
    }
    layers.push_back(std::move(first));

    for (int h = 2; h <= n; ++h) {
        const Layer& prev = layers.back();
        Layer cur;
        cur.particles = h;
        const HalfInt bound = prune_bound(n, h, spin);
        for (int jt = (h * spin.twice) % 2; jt <= h * spin.twice; jt += 2) {
            const HalfInt j(jt);
            if (opts.prune_for_singlets && j > bound) continue;
            std::vector<std::pair<HalfInt, int>> parents;  // (j_prev, parent index)
            for (const HalfInt j_prev : parent_momenta(j, spin)) {
                const auto* family = prev.cell(j_prev, j_prev);
                if (family == nullptr) {
                    // Any m slice works for the family size; j_prev == m slice
                    // may be missing only if the whole family is absent.
                    continue;
                }
                for (int i = 1; i <= static_cast<int>(family->size()); ++i) parents.emplace_back(j_prev, i);
            }
            if (parents.empty()) continue;
            for (int mt = -jt; mt <= jt; mt += 2) {
                const HalfInt m(mt);
                std::vector<CoupledState> states;
                states.reserve(parents.size());
                for (const auto& [j_prev, i] : parents) {
                    CoupledState s = couple_step(prev, j_prev, i, spin, j, m);
                    s.index = static_cast<int>(states.size()) + 1;
                    states.push_back(std::move(s));
                }
                cur.cells.emplace(std::make_pair(j, m), std::move(states));
            }
        }
        layers.push_back(std::move(cur));
    }
    return layers;
}

SingletBasis singlet_basis(int n, HalfInt spin, const BuildOptions& opts) {
    require_spin(spin);
    SingletBasis basis;
    basis.particles = n;
    basis.spin = spin;
    if ((n * spin.twice) % 2 != 0) return basis;  // no integer total spin, no singlets

    BuildOptions build_opts = opts;
    build_opts.prune_for_singlets = true;
    const std::vector<Layer> layers = build_layers(n, spin, build_opts);
    const auto* cell = layers.back().cell(HalfInt(0), HalfInt(0));
    if (cell != nullptr) basis.states = *cell;
    return basis;
}

CoupledState zigzag_state(HalfInt spin, const std::vector<int>& block_sizes) {
    require_spin(spin);
    if (block_sizes.empty()) throw std::domain_error("zigzag_state: no blocks");

    CoupledState out;
    out.particles = 0;
    out.spin = spin;
    out.j = HalfInt(0);
    out.m = HalfInt(0);
    out.index = 0;
    out.amps.emplace(BasisWord{}, RadicalSum(1));

    for (const int block : block_sizes) {
        const bool valid = block == 2 || (block == 3 && spin.is_integer());
        if (!valid) throw std::domain_error("zigzag_state: block size admits no singlet");
        const SingletBasis blk = singlet_basis(block, spin);
        if (blk.size() != 1) throw ConstructionError("zigzag_state: block singlet not unique");
        const AmplitudeMap& factor = blk.states.front().amps;

        AmplitudeMap product;
        for (const auto& [w1, a1] : out.amps) {
            for (const auto& [w2, a2] : factor) {
                BasisWord w = w1;
                w.letters_twice.insert(w.letters_twice.end(), w2.letters_twice.begin(),
                                       w2.letters_twice.end());
                product.emplace(std::move(w), a1 * a2);
            }
        }
        out.amps = std::move(product);
        out.particles += block;
    }
    return out;
}

namespace {

// J_+/- ladder amplitude sqrt(s(s+1) - m(m+1)) for one site, exact.
RadicalSum ladder_coefficient(HalfInt s, HalfInt m_from, HalfInt m_to) {
    // with doubled values: s(s+1) - m_from*m_to = (ts(ts+2) - tm_f*(tm_t+... )) / 4
    const long num = static_cast<long>(s.twice) * (s.twice + 2) - static_cast<long>(m_from.twice) * m_to.twice;
    return RadicalSum::sqrt_of(Rational(num, 4));
}

AmplitudeMap apply_ladder(const CoupledState& state, int direction) {
    const HalfInt s = state.spin;
    AmplitudeMap out;
    for (const auto& [word, amp] : state.amps) {
        for (int site = 0; site < word.size(); ++site) {
            const HalfInt m_from = word.letter(site);
            const HalfInt m_to(m_from.twice + 2 * direction);
            if (std::abs(m_to.twice) > s.twice) continue;
            const RadicalSum coeff = ladder_coefficient(s, m_from, m_to);
            BasisWord shifted = word;
            shifted.letters_twice[static_cast<std::size_t>(site)] = static_cast<std::int8_t>(m_to.twice);
            auto it = out.find(shifted);
            if (it == out.end()) {
                out.emplace(std::move(shifted), amp * coeff);
            } else {
                it->second += amp * coeff;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace

AmplitudeMap apply_total_raising(const CoupledState& state) { return apply_ladder(state, +1); }

AmplitudeMap apply_total_lowering(const CoupledState& state) { return apply_ladder(state, -1); }

}  // namespace singlet
