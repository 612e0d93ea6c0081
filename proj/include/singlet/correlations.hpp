// Floating-point correlation layer for spin-1/2 chains: state vectors,
// density operators, direction projectors, joint probabilities, parity
// expectations, and the published closed-form evaluators.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace singlet::corr {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

struct CMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> data;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    static CMatrix identity(int n);

    Complex& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const Complex& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
CMatrix adjoint(const CMatrix& a);
Complex trace(const CMatrix& a);
Complex trace_product(const CMatrix& a, const CMatrix& b);
CVector mat_vec(const CMatrix& a, const CVector& v);
double frobenius_norm(const CMatrix& a);

// Kronecker products in the convention a (x) b = (a1 b, a2 b, ...).
CVector kron(const CVector& a, const CVector& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

// |v><v| for a (possibly complex) vector.
CMatrix dyad(const CVector& v);

Complex dot(const CVector& a, const CVector& b);  // conjugate-linear in a
double norm(const CVector& v);

// Measurement direction: polar angle from z, azimuth from x. The canonical
// ranges are [0, pi] and [0, 2*pi); raw values outside them are accepted so
// parameter scans can bind e.g. theta3 = -theta.
struct Direction {
    double theta = 0.0;
    double phi = 0.0;
};

struct DirectionSet {
    Direction d1, d2, d3, d4;
    std::vector<Direction> as_vector() const { return {d1, d2, d3, d4}; }
};

struct OutcomeSigns {
    int s1 = +1, s2 = +1, s3 = +1, s4 = +1;
    std::vector<int> as_vector() const { return {s1, s2, s3, s4}; }
};

// The published four-particle singlet vectors (index 1 or 2), 16 components.
CVector singlet_vector(int index);

// The two-particle singlet (Bell) vector, 4 components.
CVector bell_vector();

// sin(tau) * Psi_{2,4,1} + cos(tau) * Psi_{2,4,2}.
CVector general_singlet(double tau);

// sigma(theta, phi): Hermitian, involutory, traceless.
CMatrix pauli_direction(const Direction& d);

// 1/2 [I2 + s * sigma(d)]; rank-1 projector.
CMatrix spin_projector(int sign, const Direction& d);

// F_{s1 s2 s3 s4}(dirs): rank-1 projector on the 16-dimensional space.
CMatrix projector(const OutcomeSigns& signs, const DirectionSet& dirs);

// Generic n-particle versions (n from the vector sizes).
CMatrix projector_n(const std::vector<int>& signs, const std::vector<Direction>& dirs);
double joint_probability_n(const CMatrix& rho, const std::vector<int>& signs,
                           const std::vector<Direction>& dirs);
double parity_expectation_n(const CMatrix& rho, const std::vector<Direction>& dirs);

// Tr[rho F]; real up to numerical residue.
double joint_probability(const CMatrix& rho, const OutcomeSigns& signs, const DirectionSet& dirs);

// E = P_even - P_odd = Tr[rho sigma(d1) (x) ... (x) sigma(d4)].
double parity_expectation(const CMatrix& rho, const DirectionSet& dirs);

enum class ClosedForm {
    Psi241Full,
    Psi241Theta,
    Psi241Equatorial,
    Psi242Full,
    Psi242Theta,
    TauTheta,
    TauFull,
    TwoPartiteFull,
    TwoPartiteTheta,
    TwoPartiteEquatorial,
};

// Direct evaluation of one published expectation function. Theta-only forms
// require all azimuths zero, equatorial forms all polar angles pi/2
// (std::domain_error otherwise). `tau` is used by the Tau* forms only.
// Two-partite forms read directions 1 and 2.
double closed_form_expectation(ClosedForm which, const DirectionSet& dirs, double tau = 0.0);

enum class SelectedRow {
    Sel4Full,    // E(theta,phi | +-_4)
    Sel34Theta,  // E(theta | +-_3 +-_4)
    Sel34Full,
    Sel24Theta,  // E(theta | +-_2 +-_4)
    Sel24Full,
};

// Verbatim evaluation of a published post-selected expectation row.
// `sign_a` is the first selected outcome; `sign_b` the second (ignored for
// Sel4Full). Theta-only rows require all azimuths zero.
double selected_closed_form(SelectedRow row, int sign_a, int sign_b, const DirectionSet& dirs);

// Candidate definitions of a post-selected correlation, computed from joint
// probabilities with the outcomes in `fixed` (1-based site -> sign) held.
struct SelectionCandidates {
    double unnormalized_full_parity = 0.0;  // sum over free signs of (s1 s2 s3 s4) P
    double normalized_full_parity = 0.0;    // ... divided by P(selection)
    double unnormalized_free_parity = 0.0;  // sum of (product of free signs) P
    double normalized_free_parity = 0.0;
    double selection_probability = 0.0;
};

SelectionCandidates selected_expectation_candidates(const CMatrix& rho, const DirectionSet& dirs,
                                                    const std::map<int, int>& fixed);

// || (u (x) u (x) u (x) u) v - v ||.
double rotation_invariance_deviation(const CVector& v, const CMatrix& u);

// SU(2) rotation in the spherical parameterization used for the invariance
// checks (unit determinant).
CMatrix su2_rotation(double theta, double phi);

struct ScanRow {
    double theta = 0.0;
    double p_even = 0.0;
    double p_odd = 0.0;
    double expectation = 0.0;
};

enum class ScanCurve : char { A = 'a', B = 'b', C = 'c', D = 'd', E = 'e', F = 'f' };

// Direction/tau binding of one scan curve at scan parameter theta.
struct ScanBinding {
    double tau = 0.0;
    DirectionSet dirs;
};
ScanBinding scan_binding(ScanCurve curve, double theta);

// Uniform theta grid over [0, 2*pi]; expectations from the trace path on the
// general singlet of the curve's tau.
std::vector<ScanRow> scan(ScanCurve curve, int samples);

// CSV with header "theta,p_even,p_odd,expectation", 12 significant digits.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace singlet::corr
