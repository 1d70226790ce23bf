#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "dislab/dynamics.hpp"
#include "dislab/experiments.hpp"
#include "dislab/moments.hpp"
#include "dislab/welfare.hpp"

namespace dislab::csv {

// Numbers are written with 17 significant digits through std::to_chars, so
// output is locale-independent and round-trips exactly.

std::string format_number(double x);
std::string format_bool(bool b);
/// Quotes a field when it contains a comma, quote or newline.
std::string escape(std::string_view field);

inline constexpr std::string_view kSnapshotHeader = "time,theta,mean_belief,var_belief,mean_payoff";
inline constexpr std::string_view kSteadyStateHeader = "v_star,v_eq,var_theta,var_gap,cov_m_theta";
inline constexpr std::string_view kWelfareHeader =
    "v,misallocation_gap,dispersion_cost,exploration_benefit,W,Y_expected";
inline constexpr std::string_view kFigureTwoHeader = "x,benefit,cost,net";
inline constexpr std::string_view kSweepHeader =
    "rho,sigma_eps,alpha,sigma_nu,sigma_eta,gamma,replication,v_star_analytic,v_eq_analytic,"
    "W_star,W_eq,dominates,mc_var_belief,mc_rel_err,error";
inline constexpr std::string_view kProposition2Header =
    "sigma_eta,v_star,v_eq,W_star,W_eq,difference,dominates";
inline constexpr std::string_view kOptimumHeader = "v_opt,W_opt,sigma_eta_star";

void write_snapshots(std::ostream& out, std::span<const PanelSnapshot> rows);
void write_snapshot_row(std::ostream& out, const PanelSnapshot& row);
void write_steady_state(std::ostream& out, const SteadyState& s);
void write_welfare(std::ostream& out, std::span<const WelfareReport> rows);
void write_figure_two(std::ostream& out, const FigureTwoCurve& curve);
void write_sweep(std::ostream& out, std::span<const SweepRow> rows);
void write_proposition2(std::ostream& out, const Proposition2Table& table);

}  // namespace dislab::csv
