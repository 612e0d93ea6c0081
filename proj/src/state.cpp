#include "singlet/state.hpp"

namespace singlet {

void accumulate_scaled(AmplitudeMap& dst, const AmplitudeMap& src, const RadicalSum& scale) {
    if (scale.is_zero()) return;
    for (const auto& [word, amp] : src) {
        auto it = dst.find(word);
        if (it == dst.end()) {
            dst.emplace(word, amp * scale);
        } else {
            it->second += amp * scale;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

RadicalSum inner_product(const AmplitudeMap& a, const AmplitudeMap& b) {
    RadicalSum result;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            result += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return result;
}

RadicalSum norm_squared(const AmplitudeMap& a) {
    RadicalSum result;
    for (const auto& [word, amp] : a) result += amp * amp;
    return result;
}

}  // namespace singlet
