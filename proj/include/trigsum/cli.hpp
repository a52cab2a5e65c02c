#ifndef TRIGSUM_CLI_HPP
#define TRIGSUM_CLI_HPP

// Command-line front end: evaluation, verification, sweeping, quadrature
// and product comparisons. Exit codes: 0 success/pass, 1 verification
// failure, 2 usage or domain error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigsum/harness.hpp"

namespace trigsum::cli {

namespace detail {

inline std::string fmt(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

inline std::string fmt(std::complex<double> v, int digits) {
  if (v.imag() == 0.0) return fmt(v.real(), digits);
  std::ostringstream os;
  os << fmt(v.real(), digits) << (v.imag() < 0 ? " - " : " + ")
     << fmt(std::fabs(v.imag()), digits) << "i";
  return os.str();
}

inline void print_eval(std::ostream& os, const char* label,
                       const EvalResult& r, int digits) {
  os << label << " = " << fmt(r.value, digits)
     << "   (error_estimate=" << fmt(r.error_estimate, 3)
     << ", work=" << r.work << ", method=" << to_string(r.method) << ")\n";
}

inline void print_record(std::ostream& os, const VerificationRecord& r,
                         int digits) {
  os << "identity : " << to_string(r.id) << '\n';
  if (r.nu) os << "nu       : " << fmt(*r.nu, digits) << '\n';
  if (r.aux) os << "aux      : " << fmt(*r.aux, digits) << '\n';
  if (r.skipped) {
    os << "skipped  : " << r.reason << '\n';
    return;
  }
  os << "lhs      : " << fmt(r.lhs, digits) << '\n'
     << "rhs      : " << fmt(r.rhs, digits) << '\n'
     << "residual : " << fmt(r.residual, 6) << '\n'
     << "tolerance: " << fmt(r.tolerance, 6) << '\n'
     << "work     : " << r.work << '\n'
     << "status   : " << (r.pass ? "PASS" : "FAIL");
  if (!r.reason.empty()) os << "  (" << r.reason << ')';
  os << '\n';
}

inline void write_atomic(const std::filesystem::path& path,
                         const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << content;
  }
  std::filesystem::rename(tmp, path);
}

inline IdentityId parse_identity(const std::string& s) {
  const auto id = identity_from_string(s);
  if (!id) {
    throw DomainError("unknown identity '" + s +
                      "'; run the list subcommand for valid ids");
  }
  return *id;
}

inline std::optional<double> aux_for(IdentityId id,
                                     std::optional<double> given) {
  if (!identity_info(id).needs_aux) return std::nullopt;
  return given ? given : std::optional<double>(0.5);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{
      "trigsum: numerical verification of trigonometric-series, "
      "digamma, Frullani-integral and infinite-product identities"};
  app.require_subcommand(1);
  int digits = 15;
  app.add_option("--digits", digits, "significant digits in printed numbers")
      ->check(CLI::Range(1, 17));

  // digamma <z>
  double dig_z = 1.0;
  auto* c_dig = app.add_subcommand("digamma", "evaluate psi(z) for z > 0");
  c_dig->add_option("z", dig_z, "argument, z > 0")->required();

  // shared identity options
  std::string id_str;
  std::optional<double> nu_opt;
  std::optional<double> aux_opt;
  double tol = 1e-10;
  std::string side = "both";

  auto* c_eval =
      app.add_subcommand("eval", "evaluate one or both sides of an identity");
  c_eval->add_option("--id", id_str, "identity id")->required();
  c_eval->add_option("--nu", nu_opt, "parameter nu in (0,1)");
  c_eval->add_option("--aux", aux_opt,
                     "auxiliary parameter (x or y) for the bilateral "
                     "identities; defaults to 0.5");
  c_eval->add_option("--tol", tol, "target absolute tolerance");
  c_eval->add_option("--side", side, "lhs | rhs | both")
      ->check(CLI::IsMember({"lhs", "rhs", "both"}));

  auto* c_verify = app.add_subcommand(
      "verify", "check one identity at one parameter point");
  c_verify->add_option("--id", id_str, "identity id")->required();
  c_verify->add_option("--nu", nu_opt, "parameter nu in (0,1)");
  c_verify->add_option("--aux", aux_opt, "auxiliary parameter (x or y)");
  c_verify->add_option("--tol", tol, "pass/fail tolerance");

  // sweep
  SweepConfig sweep_cfg;
  int grid_n = 0;
  std::string ids_csv;
  std::string format_str = "text";
  std::string out_path;
  auto* c_sweep =
      app.add_subcommand("sweep", "run the verification grid over the catalog");
  c_sweep->add_option("--grid", grid_n,
                      "uniform grid size over (0.1, 0.9); default is the "
                      "9-point grid plus 1/4, 1/3, 3/4");
  c_sweep->add_option("--tol", sweep_cfg.tolerance, "target tolerance");
  c_sweep->add_option("--ids", ids_csv, "comma-separated identity filter");
  c_sweep->add_option("--format", format_str, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  c_sweep->add_option("--out", out_path,
                      "write the report to this path (atomic)");

  // integrate
  int theorem = 1;
  double int_nu = 0.3;
  double int_tol = 1e-10;
  auto* c_int = app.add_subcommand(
      "integrate", "evaluate one of the hyperbolic-kernel integrals");
  c_int->add_option("--theorem", theorem, "1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  c_int->add_option("--nu", int_nu, "parameter nu in (0,1)")->required();
  c_int->add_option("--tol", int_tol, "quadrature tolerance");

  // product
  std::string prod_id = "infprod";
  std::int64_t terms = 1000000;
  auto* c_prod = app.add_subcommand(
      "product", "compare direct and Gamma-ratio product evaluations");
  c_prod->add_option("--id", prod_id, "infprod | wallis")
      ->check(CLI::IsMember({"infprod", "wallis"}));
  c_prod->add_option("--terms", terms, "direct truncation M");

  auto* c_list = app.add_subcommand("list", "enumerate catalog identities");

  try {
    // CLI11's vector overload consumes arguments from the back.
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_dig) {
      out << detail::fmt(digamma(dig_z), digits) << '\n';
      return 0;
    }
    if (*c_eval) {
      const auto id = detail::parse_identity(id_str);
      std::optional<NuValue> nu;
      if (nu_opt) nu.emplace(*nu_opt);
      const auto sides = trigsum::detail::evaluate_sides(
          id, nu, tol, detail::aux_for(id, aux_opt), 100000, 250000);
      if (side == "lhs" || side == "both") {
        detail::print_eval(out, "lhs", sides.lhs, digits);
      }
      if (side == "rhs" || side == "both") {
        detail::print_eval(out, "rhs", sides.rhs, digits);
      }
      return 0;
    }
    if (*c_verify) {
      const auto id = detail::parse_identity(id_str);
      std::optional<NuValue> nu;
      if (nu_opt) nu.emplace(*nu_opt);
      const auto rec =
          verify_identity(id, nu, tol, detail::aux_for(id, aux_opt));
      detail::print_record(out, rec, digits);
      if (rec.skipped) {
        err << "domain exclusion: " << rec.reason << '\n';
        return 2;
      }
      return rec.pass ? 0 : 1;
    }
    if (*c_sweep) {
      if (grid_n > 0) {
        sweep_cfg.grid_points = grid_n;
        sweep_cfg.include_special_points = false;
      }
      if (!ids_csv.empty()) {
        std::vector<IdentityId> filter;
        std::stringstream ss(ids_csv);
        std::string part;
        while (std::getline(ss, part, ',')) {
          filter.push_back(detail::parse_identity(part));
        }
        sweep_cfg.identity_filter = filter;
      }
      const auto records = sweep(sweep_cfg);
      const auto format = format_str == "json"  ? ReportFormat::json
                          : format_str == "csv" ? ReportFormat::csv
                                                : ReportFormat::text;
      const std::string report = emit_report_string(records, format);
      if (!out_path.empty()) {
        detail::write_atomic(out_path, report);
        out << "wrote " << records.size() << " records to " << out_path
            << '\n';
      } else {
        out << report;
      }
      for (const auto& r : records) {
        if (!r.skipped && !r.pass) return 1;
      }
      return 0;
    }
    if (*c_int) {
      const FrullaniIntegrand f(theorem == 1 ? 1 : 2, NuValue(int_nu));
      QuadratureConfig qcfg;
      qcfg.tol = int_tol;
      const auto got = integrate_frullani(f, qcfg);
      detail::print_eval(out, "integral", got, digits);
      const auto closed = rhs_closed(
          theorem == 1 ? IdentityId::int_thm1 : IdentityId::int_thm2,
          NuValue(int_nu));
      detail::print_eval(out, "closed  ", closed, digits);
      out << "difference = "
          << detail::fmt(std::abs(got.value - closed.value), 3) << '\n';
      return 0;
    }
    if (*c_prod) {
      const auto id = detail::parse_identity(prod_id);
      const auto spec = catalog_product_spec(id);
      const auto direct = product_direct(spec, terms);
      const auto extrap = product_richardson(spec, terms);
      const auto closed = product_gamma_closed(spec);
      detail::print_eval(out, "direct      ", direct, digits);
      detail::print_eval(out, "extrapolated", extrap, digits);
      detail::print_eval(out, "closed      ", closed, digits);
      out << "difference (extrapolated vs closed) = "
          << detail::fmt(std::abs(extrap.value - closed.value), 3) << '\n';
      return 0;
    }
    if (*c_list) {
      out << std::left << std::setw(14) << "id" << std::setw(34) << "domain"
          << "left side\n";
      for (const auto& info : kIdentityTable) {
        out << std::left << std::setw(14) << info.name << std::setw(34)
            << info.domain << info.summand << '\n';
      }
      return 0;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace trigsum::cli

#endif  // TRIGSUM_CLI_HPP
