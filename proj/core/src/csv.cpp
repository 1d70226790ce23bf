#include "dislab/csv.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace dislab::csv {

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto result =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), result.ptr);
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_snapshot_row(std::ostream& out, const PanelSnapshot& s) {
  out << s.time << ',' << format_number(s.theta) << ',' << format_number(s.mean_belief) << ','
      << format_number(s.var_belief) << ',' << format_number(s.mean_payoff) << '\n';
}

void write_snapshots(std::ostream& out, std::span<const PanelSnapshot> rows) {
  out << kSnapshotHeader << '\n';
  for (const auto& s : rows) write_snapshot_row(out, s);
}

void write_steady_state(std::ostream& out, const SteadyState& s) {
  out << kSteadyStateHeader << '\n'
      << format_number(s.v_star) << ',' << format_number(s.v_eq) << ','
      << format_number(s.var_theta) << ',' << format_number(s.var_gap) << ','
      << format_number(s.cov_m_theta) << '\n';
}

void write_welfare(std::ostream& out, std::span<const WelfareReport> rows) {
  out << kWelfareHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.v) << ',' << format_number(r.misallocation_gap) << ','
        << format_number(r.dispersion_cost) << ',' << format_number(r.exploration_benefit) << ','
        << format_number(r.W) << ',' << format_number(r.Y_expected) << '\n';
  }
}

void write_figure_two(std::ostream& out, const FigureTwoCurve& curve) {
  out << kFigureTwoHeader << '\n';
  for (const auto& r : curve.rows) {
    out << format_number(r.x) << ',' << format_number(r.benefit) << ',' << format_number(r.cost)
        << ',' << format_number(r.net) << '\n';
  }
}

void write_sweep(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    const auto& p = r.params;
    out << format_number(p.rho) << ',' << format_number(p.sigma_eps) << ','
        << format_number(p.alpha) << ',' << format_number(p.sigma_nu) << ','
        << format_number(p.sigma_eta) << ',' << format_number(p.gamma) << ',' << r.replication
        << ',';
    if (r.ok()) {
      out << format_number(r.v_star) << ',' << format_number(r.v_eq) << ','
          << format_number(r.W_star) << ',' << format_number(r.W_eq) << ','
          << format_bool(r.dominates) << ',' << format_number(r.mc_var_belief) << ','
          << format_number(r.mc_rel_err) << ",\n";
    } else {
      out << ",,,,,,," << escape(r.error) << '\n';
    }
  }
}

void write_proposition2(std::ostream& out, const Proposition2Table& table) {
  out << kProposition2Header << '\n';
  for (const auto& r : table.rows) {
    out << format_number(r.sigma_eta) << ',' << format_number(r.v_star) << ','
        << format_number(r.v_eq) << ',' << format_number(r.W_star) << ','
        << format_number(r.W_eq) << ',' << format_number(r.difference) << ','
        << format_bool(r.dominates) << '\n';
  }
}

}  // namespace dislab::csv
