#include "singlet/correlations.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace singlet::corr {

namespace {

constexpr double kRestrictionTolerance = 1e-12;
const double kSqrt3 = std::sqrt(3.0);

}  // namespace

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    }
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    CMatrix r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += b.data[i];
    return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] -= b.data[i];
    return r;
}

CMatrix operator*(Complex s, const CMatrix& a) {
    CMatrix r = a;
    for (auto& x : r.data) x *= s;
    return r;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix r(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = std::conj(a.at(i, j));
    }
    return r;
}

Complex trace(const CMatrix& a) {
    Complex t = 0.0;
    for (int i = 0; i < a.rows; ++i) t += a.at(i, i);
    return t;
}

Complex trace_product(const CMatrix& a, const CMatrix& b) {
    Complex t = 0.0;
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) t += a.at(i, k) * b.at(k, i);
    }
    return t;
}

CVector mat_vec(const CMatrix& a, const CVector& v) {
    CVector r(static_cast<std::size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i) {
        Complex s = 0.0;
        for (int j = 0; j < a.cols; ++j) s += a.at(i, j) * v[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (const auto& x : a.data) s += std::norm(x);
    return std::sqrt(s);
}

CVector kron(const CVector& a, const CVector& b) {
    CVector r(a.size() * b.size());
    std::size_t k = 0;
    for (const auto& x : a) {
        for (const auto& y : b) r[k++] = x * y;
    }
    return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            const Complex aij = a.at(i, j);
            if (aij == Complex{}) continue;
            for (int p = 0; p < b.rows; ++p) {
                for (int q = 0; q < b.cols; ++q) {
                    r.at(i * b.rows + p, j * b.cols + q) = aij * b.at(p, q);
                }
            }
        }
    }
    return r;
}

CMatrix dyad(const CVector& v) {
    const int n = static_cast<int>(v.size());
    CMatrix r(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            r.at(i, j) = v[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
        }
    }
    return r;
}

Complex dot(const CVector& a, const CVector& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const CVector& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

CVector bell_vector() {
    const double r = 1.0 / std::sqrt(2.0);
    return {0.0, r, -r, 0.0};
}

CVector singlet_vector(int index) {
    if (index == 1) {
        const double a = 1.0 / kSqrt3;
        const double b = -0.5 / kSqrt3;
        return {0, 0, 0, a, 0, b, b, 0, 0, b, b, 0, a, 0, 0, 0};
    }
    if (index == 2) {
        return kron(bell_vector(), bell_vector());
    }
    throw std::domain_error("singlet_vector: index must be 1 or 2");
}

CVector general_singlet(double tau) {
    const CVector a = singlet_vector(1);
    const CVector b = singlet_vector(2);
    CVector r(16);
    for (std::size_t i = 0; i < 16; ++i) r[i] = std::sin(tau) * a[i] + std::cos(tau) * b[i];
    return r;
}

CMatrix pauli_direction(const Direction& d) {
    CMatrix m(2, 2);
    const Complex phase(std::cos(d.phi), std::sin(d.phi));
    m.at(0, 0) = std::cos(d.theta);
    m.at(0, 1) = std::conj(phase) * std::sin(d.theta);
    m.at(1, 0) = phase * std::sin(d.theta);
    m.at(1, 1) = -std::cos(d.theta);
    return m;
}

CMatrix spin_projector(int sign, const Direction& d) {
    const CMatrix sigma = pauli_direction(d);
    CMatrix m = CMatrix::identity(2);
    const double s = sign >= 0 ? 0.5 : -0.5;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) m.at(i, j) = 0.5 * m.at(i, j) + s * sigma.at(i, j);
    }
    return m;
}

CMatrix projector_n(const std::vector<int>& signs, const std::vector<Direction>& dirs) {
    if (signs.size() != dirs.size() || signs.empty()) {
        throw std::domain_error("projector_n: size mismatch");
    }
    CMatrix m = spin_projector(signs[0], dirs[0]);
    for (std::size_t i = 1; i < signs.size(); ++i) m = kron(m, spin_projector(signs[i], dirs[i]));
    return m;
}

CMatrix projector(const OutcomeSigns& signs, const DirectionSet& dirs) {
    return projector_n(signs.as_vector(), dirs.as_vector());
}

double joint_probability_n(const CMatrix& rho, const std::vector<int>& signs,
                           const std::vector<Direction>& dirs) {
    return trace_product(rho, projector_n(signs, dirs)).real();
}

double joint_probability(const CMatrix& rho, const OutcomeSigns& signs, const DirectionSet& dirs) {
    return joint_probability_n(rho, signs.as_vector(), dirs.as_vector());
}

double parity_expectation_n(const CMatrix& rho, const std::vector<Direction>& dirs) {
    if (dirs.empty()) throw std::domain_error("parity_expectation_n: no directions");
    CMatrix m = pauli_direction(dirs[0]);
    for (std::size_t i = 1; i < dirs.size(); ++i) m = kron(m, pauli_direction(dirs[i]));
    return trace_product(rho, m).real();
}

double parity_expectation(const CMatrix& rho, const DirectionSet& dirs) {
    return parity_expectation_n(rho, dirs.as_vector());
}

namespace {

void require_theta_only(const DirectionSet& d, int particles) {
    const double phis[] = {d.d1.phi, d.d2.phi, d.d3.phi, d.d4.phi};
    for (int i = 0; i < particles; ++i) {
        if (std::abs(phis[i]) > kRestrictionTolerance) {
            throw std::domain_error("closed form: azimuths must be zero for a theta-only form");
        }
    }
}

void require_equatorial(const DirectionSet& d, int particles) {
    const double thetas[] = {d.d1.theta, d.d2.theta, d.d3.theta, d.d4.theta};
    for (int i = 0; i < particles; ++i) {
        if (std::abs(thetas[i] - std::numbers::pi / 2) > kRestrictionTolerance) {
            throw std::domain_error("closed form: polar angles must be pi/2 for an equatorial form");
        }
    }
}

double psi241_full(double t1, double t2, double t3, double t4, double p1, double p2, double p3,
                   double p4) {
    return (1.0 / 3.0) *
           (std::cos(t3) * std::sin(t1) *
                (-std::cos(t4) * std::cos(p1 - p2) * std::sin(t2) +
                 2 * std::cos(t2) * std::cos(p1 - p4) * std::sin(t4)) +
            std::sin(t1) * std::sin(t3) *
                (2 * std::cos(t2) * std::cos(t4) * std::cos(p1 - p3) +
                 (2 * std::cos(p1 + p2 - p3 - p4) + std::cos(p1 - p2) * std::cos(p3 - p4)) *
                     std::sin(t2) * std::sin(t4)) +
            std::cos(t1) *
                (2 * std::sin(t2) *
                     (std::cos(t4) * std::cos(p2 - p3) * std::sin(t3) +
                      std::cos(t3) * std::cos(p2 - p4) * std::sin(t4)) +
                 std::cos(t2) * (3 * std::cos(t3) * std::cos(t4) -
                                 std::cos(p3 - p4) * std::sin(t3) * std::sin(t4))));
}

double psi242_full(double t1, double t2, double t3, double t4, double p1, double p2, double p3,
                   double p4) {
    return (std::cos(t1) * std::cos(t2) + std::cos(p1 - p2) * std::sin(t1) * std::sin(t2)) *
           (std::cos(t3) * std::cos(t4) + std::cos(p3 - p4) * std::sin(t3) * std::sin(t4));
}

double tau_full(double tau, double t1, double t2, double t3, double t4, double p1, double p2,
                double p3, double p4) {
    const double st = std::sin(tau);
    const double ct = std::cos(tau);
    const double c2t = std::cos(2 * tau);
    const double s2t = std::sin(2 * tau);
    return (1.0 / 3.0) *
           (std::cos(t1) *
                (std::cos(t2) * (3 * std::cos(t3) * std::cos(t4) +
                                 (2 * c2t + 1) * std::cos(p3 - p4) * std::sin(t3) * std::sin(t4)) +
                 2 * std::sin(t2) * st *
                     (std::cos(t3) * std::cos(p2 - p4) * std::sin(t4) * (kSqrt3 * ct + st) -
                      std::cos(t4) * std::cos(p2 - p3) * std::sin(t3) * (kSqrt3 * ct - st))) +
            std::sin(t1) *
                (std::cos(t3) *
                     (std::cos(t4) * (2 * c2t + 1) * std::cos(p1 - p2) * std::sin(t2) +
                      2 * std::cos(t2) * std::cos(p1 - p4) * std::sin(t4) * st * (st - kSqrt3 * ct)) +
                 std::sin(t3) *
                     (2 * std::cos(t2) * std::cos(t4) * std::cos(p1 - p3) * st * (kSqrt3 * ct + st) +
                      std::sin(t2) * std::sin(t4) *
                          (2 * std::cos(p1 + p2 - p3 - p4) * st * st +
                           (c2t + 2) * std::cos(p1 - p2) * std::cos(p3 - p4) +
                           kSqrt3 * s2t * std::sin(p1 - p2) * std::sin(p3 - p4)))));
}

}  // namespace

double closed_form_expectation(ClosedForm which, const DirectionSet& d, double tau) {
    const double t1 = d.d1.theta, t2 = d.d2.theta, t3 = d.d3.theta, t4 = d.d4.theta;
    const double p1 = d.d1.phi, p2 = d.d2.phi, p3 = d.d3.phi, p4 = d.d4.phi;
    switch (which) {
        case ClosedForm::Psi241Full:
            return psi241_full(t1, t2, t3, t4, p1, p2, p3, p4);
        case ClosedForm::Psi241Theta:
            require_theta_only(d, 4);
            return (1.0 / 3.0) *
                   (2 * std::cos(t1 + t2 - t3 - t4) + std::cos(t1 - t2) * std::cos(t3 - t4));
        case ClosedForm::Psi241Equatorial:
            require_equatorial(d, 4);
            return (1.0 / 3.0) *
                   (2 * std::cos(p1 + p2 - p3 - p4) + std::cos(p1 - p2) * std::cos(p3 - p4));
        case ClosedForm::Psi242Full:
            return psi242_full(t1, t2, t3, t4, p1, p2, p3, p4);
        case ClosedForm::Psi242Theta:
            require_theta_only(d, 4);
            return std::cos(t1 - t2) * std::cos(t3 - t4);
        case ClosedForm::TauTheta:
            require_theta_only(d, 4);
            return (1.0 / 3.0) *
                   ((2 + std::cos(2 * tau)) * std::cos(t1 - t2) * std::cos(t3 - t4) +
                    2 * std::sin(tau) *
                        (std::sin(tau) * std::cos(t1 + t2 - t3 - t4) +
                         kSqrt3 * std::cos(tau) * std::sin(t1 - t2) * std::sin(t3 - t4)));
        case ClosedForm::TauFull:
            return tau_full(tau, t1, t2, t3, t4, p1, p2, p3, p4);
        case ClosedForm::TwoPartiteFull:
            return -(std::cos(t1) * std::cos(t2) + std::cos(p1 - p2) * std::sin(t1) * std::sin(t2));
        case ClosedForm::TwoPartiteTheta:
            require_theta_only(d, 2);
            return -std::cos(t1 - t2);
        case ClosedForm::TwoPartiteEquatorial:
            require_equatorial(d, 2);
            return -std::cos(p1 - p2);
    }
    throw std::domain_error("closed_form_expectation: unknown form");
}

double selected_closed_form(SelectedRow row, int sign_a, int sign_b, const DirectionSet& d) {
    const double t1 = d.d1.theta, t2 = d.d2.theta, t3 = d.d3.theta, t4 = d.d4.theta;
    const double p1 = d.d1.phi, p2 = d.d2.phi, p3 = d.d3.phi, p4 = d.d4.phi;
    const double sa = sign_a >= 0 ? 1.0 : -1.0;
    const double sb = sign_b >= 0 ? 1.0 : -1.0;
    switch (row) {
        case SelectedRow::Sel4Full:
            return 1.0 / 12.0 + sa * 0.5 * closed_form_expectation(ClosedForm::Psi241Full, d);
        case SelectedRow::Sel34Theta:
            require_theta_only(d, 4);
            return (1.0 / 12.0) * (2 * sa * sb * std::cos(t1 + t2 - t3 - t4) +
                                   std::cos(t1 - t2) * (1 + sa * sb * std::cos(t3 - t4)));
        case SelectedRow::Sel34Full: {
            const double ss = sa * sb;
            return (1.0 / 12.0) *
                   (std::cos(t1) *
                        (2 * ss * std::sin(t2) *
                             (std::cos(t4) * std::cos(p2 - p3) * std::sin(t3) +
                              std::cos(t3) * std::cos(p2 - p4) * std::sin(t4)) +
                         std::cos(t2) * (1 + 3 * ss * std::cos(t3) * std::cos(t4) -
                                         ss * std::cos(p3 - p4) * std::sin(t3) * std::sin(t4))) +
                    std::sin(t1) *
                        (std::cos(p1 - p2) * std::sin(t2) *
                             (1 - ss * std::cos(t3) * std::cos(t4) +
                              ss * std::cos(p3 - p4) * std::sin(t3) * std::sin(t4)) +
                         2 * ss *
                             (std::cos(t2) * std::cos(t4) * std::cos(p1 - p3) * std::sin(t3) +
                              std::cos(t2) * std::cos(t3) * std::cos(p1 - p4) * std::sin(t4) +
                              std::cos(p1 + p2 - p3 - p4) * std::sin(t2) * std::sin(t3) *
                                  std::sin(t4))));
        }
        case SelectedRow::Sel24Theta:
            require_theta_only(d, 4);
            return (1.0 / 12.0) *
                   (sa * sb *
                        (2 * std::cos(t1 + t2 - t3 - t4) + std::cos(t1 - t2) * std::cos(t3 - t4)) -
                    2 * std::cos(t1 - t3));
        case SelectedRow::Sel24Full: {
            const double ss = sa * sb;
            return (1.0 / 12.0) *
                   (std::cos(t1) *
                        (ss * std::sin(t3) *
                             (2 * std::cos(t4) * std::cos(p2 - p3) * std::sin(t2) -
                              std::cos(t2) * std::cos(p3 - p4) * std::sin(t4)) +
                         std::cos(t3) * (-2 + 3 * ss * std::cos(t2) * std::cos(t4) +
                                         2 * ss * std::cos(p2 - p4) * std::sin(t2) * std::sin(t4))) +
                    std::sin(t1) *
                        (ss * std::cos(t3) *
                             (-std::cos(t4) * std::cos(p1 - p2) * std::sin(t2) +
                              2 * std::cos(t2) * std::cos(p1 - p4) * std::sin(t4)) +
                         std::sin(t3) *
                             (2 * (-1 + ss * std::cos(t2) * std::cos(t4)) * std::cos(p1 - p3) +
                              ss *
                                  (2 * std::cos(p1 + p2 - p3 - p4) +
                                   std::cos(p1 - p2) * std::cos(p3 - p4)) *
                                  std::sin(t2) * std::sin(t4))));
        }
    }
    throw std::domain_error("selected_closed_form: unknown row");
}

SelectionCandidates selected_expectation_candidates(const CMatrix& rho, const DirectionSet& dirs,
                                                    const std::map<int, int>& fixed) {
    if (fixed.empty() || fixed.size() > 2) {
        throw std::domain_error("selected_expectation_candidates: fix 1 or 2 outcomes");
    }
    for (const auto& [site, sign] : fixed) {
        if (site < 1 || site > 4) throw std::domain_error("selected_expectation_candidates: bad site");
        (void)sign;
    }

    SelectionCandidates out;
    const std::vector<Direction> dvec = dirs.as_vector();
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> signs(4);
        for (int i = 0; i < 4; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : +1;
        bool compatible = true;
        int full_product = 1;
        int free_product = 1;
        for (int i = 1; i <= 4; ++i) {
            const int s = signs[static_cast<std::size_t>(i - 1)];
            full_product *= s;
            auto it = fixed.find(i);
            if (it == fixed.end()) {
                free_product *= s;
            } else if ((it->second >= 0 ? +1 : -1) != s) {
                compatible = false;
                break;
            }
        }
        if (!compatible) continue;
        const double p = joint_probability_n(rho, signs, dvec);
        out.selection_probability += p;
        out.unnormalized_full_parity += full_product * p;
        out.unnormalized_free_parity += free_product * p;
    }
    if (out.selection_probability > 0.0) {
        out.normalized_full_parity = out.unnormalized_full_parity / out.selection_probability;
        out.normalized_free_parity = out.unnormalized_free_parity / out.selection_probability;
    }
    return out;
}

double rotation_invariance_deviation(const CVector& v, const CMatrix& u) {
    CMatrix big = u;
    for (int i = 1; i < 4; ++i) big = kron(big, u);
    const CVector rotated = mat_vec(big, v);
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += std::norm(rotated[i] - v[i]);
    return std::sqrt(s);
}

CMatrix su2_rotation(double theta, double phi) {
    // |+> = e^{i phi/2}(cos(theta/2)|+'> - sin(theta/2)|-'>),
    // |-> = e^{-i phi/2}(sin(theta/2)|+'> + cos(theta/2)|-'>).
    const Complex ep(std::cos(phi / 2), std::sin(phi / 2));
    CMatrix u(2, 2);
    u.at(0, 0) = ep * std::cos(theta / 2);
    u.at(1, 0) = -ep * std::sin(theta / 2);
    u.at(0, 1) = std::conj(ep) * std::sin(theta / 2);
    u.at(1, 1) = std::conj(ep) * std::cos(theta / 2);
    return u;
}

ScanBinding scan_binding(ScanCurve curve, double theta) {
    constexpr double pi = std::numbers::pi;
    ScanBinding b;
    switch (curve) {
        case ScanCurve::A:
            b.tau = 0.0;
            b.dirs = {{theta, 0}, {0, 0}, {0, 0}, {0, 0}};
            break;
        case ScanCurve::B:
            b.tau = 0.0;
            b.dirs = {{theta, 0}, {0, 0}, {0, 0}, {pi, 0}};
            break;
        case ScanCurve::C:
            b.tau = pi / 2;
            b.dirs = {{theta, 0}, {theta, 0}, {-theta, 0}, {theta, 0}};
            break;
        case ScanCurve::D:
            b.tau = pi / 2;
            b.dirs = {{theta, 0}, {pi / 4, 0}, {-theta, 0}, {theta, 0}};
            break;
        case ScanCurve::E:
            b.tau = pi / 4;
            b.dirs = {{theta, 0}, {pi / 4, 0}, {-theta, 0}, {theta, 0}};
            break;
        case ScanCurve::F:
            b.tau = pi / 4;
            b.dirs = {{theta, 0}, {0, 0}, {-theta, 0}, {theta, 0}};
            break;
        default:
            throw std::domain_error("scan_binding: unknown curve");
    }
    return b;
}

std::vector<ScanRow> scan(ScanCurve curve, int samples) {
    if (samples < 2) throw std::domain_error("scan: samples must be >= 2");
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / (samples - 1);
        const ScanBinding b = scan_binding(curve, theta);
        const CMatrix rho = dyad(general_singlet(b.tau));
        ScanRow row;
        row.theta = theta;
        row.expectation = parity_expectation(rho, b.dirs);
        row.p_even = 0.5 * (1.0 + row.expectation);
        row.p_odd = 0.5 * (1.0 - row.expectation);
        rows.push_back(row);
    }
    return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "theta,p_even,p_odd,expectation\n";
    char buf[160];
    for (const ScanRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.11e,%.11e,%.11e,%.11e\n", r.theta, r.p_even, r.p_odd,
                      r.expectation);
        out += buf;
    }
    return out;
}

}  // namespace singlet::corr
