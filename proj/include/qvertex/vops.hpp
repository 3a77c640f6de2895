#pragma once

#include <string>
#include <vector>

#include "qvertex/vseries.hpp"

namespace qvertex {

enum class VOFamily { PhiMinus, PhiPlus, EMinus, NormalOrderedPhiE };

/// Operator family and sector i (0 or 1).
struct VOKind {
    VOFamily family;
    int sector = 0;
};

/// Whether the operator is a product of exponentials of modes (phi^+ is a contour integral).
bool has_exponential_form(VOFamily family);
/// Shift of the lattice label in units of alpha/2.
int lattice_shift(VOFamily family);

/// q^{4n} / (n (1 + q^{2n})), creation side of phi^{i,-}.
RationalFunctionQ phi_creation_coeff(int n);
/// -q^{-2n} / (n (1 + q^{2n})), annihilation side of phi^{i,-}.
RationalFunctionQ phi_annihilation_coeff(int n);

OperatorWord phi_minus_word(int i, int var);
OperatorWord e_minus_word(int var);
/// :A(z) B(w): for the pair selected by kind; i and j are the phi sectors.
OperatorWord normal_ordered_word(OpeKind kind, int i, int j, int zvar = 0, int wvar = 1);

/// phi^{i,-}(z) on a ket, exact for z-exponents up to max_order.
FockSeries phi_minus_series(int i, const FockState &state, int max_order);
/// E^-(z) on a ket, exact for z-exponents up to max_order.
FockSeries e_minus_series(const FockState &state, int max_order);
/// :phi^{i,-}(z) E^-(w): on a ket in the region |zq^4| < |w| < |zq^2|.
FockSeries normal_ordered_phi_E(int i, const FockState &state, const Window &window);
/// The same product acting on a bra; the window needs lower bounds on z and w.
DualFockSeries normal_ordered_phi_E(int i, const DualFockState &state, const Window &window);

/// q^{4n} Z_n e^{alpha/2}.
FockState one_row_vos(int n);
/// The mode phi^{0,-}_{-n} on the vacuum, read off the bosonized series.
FockState one_row_vos_extracted(int n);
/// e^{-alpha/2} Z*_n.
DualFockState dual_one_row_vos(int n);

/// 1.phi^{1,+}(eta) for eta^{-n}, n <= order, from the residue at xi = eta^{-1} q^{-2}.
DualFockSeries phi_plus_dual_vacuum_residue(int order);
/// The same from the Laurent expansion of the xi-integrand in its annulus.
DualFockSeries phi_plus_dual_vacuum_direct(int order);
/// Both routes; throws std::logic_error if they differ.
DualFockSeries phi_plus_on_dual_vacuum(int order);

/// bra . phi^{i,+}(theta) for a polynomial bra, keeping theta-exponents >= lowest.
/// The w-contour is evaluated as minus the residues at w = theta q^2 and at infinity.
DualFockSeries phi_plus_on_dual(int i, const DualFockState &bra, int lowest);

/// -q^{4(r+s)-1} sum_n C_n R^n Z_{r-1} Z_s, as a formal combination.
RowCombination two_row_vos_formal(int r, int s);
/// Closed form of phi^{1,-}_{-r} phi^{0,-}_{-s}.1.
FockState two_row_vos_closed(int r, int s);
/// Direct composition of the two bosonized series, coefficient z^r w^s.
FockState two_row_vos_composed(int r, int s);
/// Prefactor times normal-ordered product, coefficient z^r w^s.
FockState two_row_vos_ope(int r, int s);
/// Closed form after checking it against both other routes; r, s >= 1.
FockState two_row_vos(int r, int s);

/// Scalar in front of the dual two-row closed form.
RationalFunctionQ dual_two_row_scalar();
/// c e^{-alpha} sum_k C_k R~^k Z*_r Z*_{s-1} as a formal combination (without c e^{-alpha}).
RowCombination dual_two_row_vos_formal(int r, int s);
DualFockState dual_two_row_vos_closed(int r, int s);
/// 1.phi^{1,+}_r phi^{0,+}_s from two applications of the residue engine.
DualFockState dual_two_row_vos_engine(int r, int s);
/// Closed form after checking it against the engine; r >= 0, s >= 1.
DualFockState dual_two_row_vos(int r, int s);

/// 1.phi^{1,+}_m phi^{0,-}_{-n}.1 as a pairing of one-row states.
RationalFunctionQ matrix_element(int m, int n);
/// sum_n matrix_element(n, n) x^n, checked against (q^6 x; q^4)_inf / (q^4 x; q^4)_inf.
PowerSeriesX matrix_element_series(int order);

/// Two-row q-zonal function Z_{n-1,m} rebuilt from phi^{1,-}_{-n} phi^{0,-}_{-m}.1.
SymFunc qzonal_from_vos(int n, int m);
/// Its dual rebuilt from 1.phi^{1,+}_m phi^{0,+}_n; returned as the bra symbol.
SymFunc dual_qzonal_from_vos(int n, int m);

/// Outcome of one operator product check.
struct OpeCheck {
    OpeKind kind = OpeKind::PhiPhi;
    bool ok = true;
    int compared = 0;
    std::string first_discrepancy;
};

/// The probe states used for operator product checks.
std::vector<std::pair<std::string, FockState>> ope_probes();
/// Direct composition versus prefactor times normal-ordered product on every
/// probe, for all exponents with each variable and the total at most degree.
OpeCheck verify_ope(OpeKind kind, int degree);

}  // namespace qvertex
