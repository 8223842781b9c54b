#include "dhs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dhs/acceptance.hpp"
#include "dhs/fgp.hpp"
#include "dhs/sections.hpp"
#include "dhs/version.hpp"

namespace dhs {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

bool verbose_logging() {
  const char* env = std::getenv("DHS_LOG");
  return env != nullptr && std::string(env) != "" && std::string(env) != "0";
}

void log_note(const std::string& msg) {
  if (verbose_logging()) std::cerr << "[dhs] " << msg << "\n";
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << payload;
}

void validate_prime(i64 p) {
  if (!is_prime(p)) throw CLI::ValidationError("-p", "p must be prime");
}

void validate_theorem_prime(i64 p) {
  validate_prime(p);
  if (p <= 3)
    throw CLI::ValidationError(
        "-p", "this check depends on theorems stated for p > 3; pick p >= 5");
}

void validate_prime_power(i64 q, i64 p) {
  i64 m = q;
  while (m % p == 0) m /= p;
  if (m != 1) throw CLI::ValidationError("-q", "q must be a power of p");
}

ModuleSpace make_space(const std::string& flavor, int d, int j, i64 p, i64 window, i64 twist) {
  if (flavor == "reduced") return ModuleSpace::reduced_local_cohomology(d, j, p, window, twist);
  if (flavor == "full") return ModuleSpace::local_cohomology(d, j, p, window, twist);
  if (flavor == "torus") return ModuleSpace::torus_characters(d, p, window);
  if (flavor == "forms") return ModuleSpace::polynomial_forms(d, p, window, twist);
  throw CLI::ValidationError("--flavor", "expected reduced|full|torus|forms");
}

nlohmann::ordered_json probe_json(const std::string& kind, const nlohmann::ordered_json& config,
                                  i64 verified_window, i64 trials,
                                  const std::vector<std::string>& failures) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["check"] = kind;
  j["config"] = config;
  j["verified_window"] = verified_window;
  j["trials"] = trials;
  j["failures"] = failures;
  j["pass"] = failures.empty();
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact verification of divided-power module structure on Drinfeld's halfspace"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // ---- basis ----------------------------------------------------------
  auto* basis = app.add_subcommand("basis", "dump a monomial basis window");
  int b_d = 1, b_j = 0;
  i64 b_p = 5, b_W = 10, b_twist = 0;
  std::string b_flavor = "reduced", b_out;
  basis->add_option("-d", b_d, "projective dimension")->required();
  basis->add_option("-j", b_j, "support subspace index");
  basis->add_option("-p", b_p, "characteristic");
  basis->add_option("-W,--window", b_W, "per-variable exponent window");
  basis->add_option("-m,--twist", b_twist, "line bundle twist");
  basis->add_option("--flavor", b_flavor, "reduced|full|torus|forms");
  basis->add_option("-o,--out", b_out, "output path (default stdout)");

  // ---- dims -----------------------------------------------------------
  auto* dims = app.add_subcommand("dims", "section and induced dimension tables");
  int di_d = 1;
  i64 di_q = 2, di_m = 0, di_k = 10;
  std::string di_format = "text", di_out;
  dims->add_option("-d", di_d)->required();
  dims->add_option("-q", di_q, "field size");
  dims->add_option("-m", di_m, "twist");
  dims->add_option("-k", di_k, "max pole stage");
  dims->add_option("--format", di_format, "text|csv|json");
  dims->add_option("-o,--out", di_out);

  // ---- check-binom ----------------------------------------------------
  auto* binom = app.add_subcommand("check-binom", "binomial operator identity");
  i64 cb_n = 7, cb_p = 5, cb_window = 30;
  binom->add_option("-n", cb_n, "order")->required();
  binom->add_option("-p", cb_p, "characteristic")->required();
  binom->add_option("--window", cb_window, "monomial comparison window");

  // ---- check-membership ------------------------------------------------
  auto* memb = app.add_subcommand("check-membership", "global regularity of an operator");
  std::string cm_op;
  i64 cm_p = 5;
  memb->add_option("--op", cm_op, "operator literal, e.g. \"2 * T(0,1)^2 * y(0,1)^[1]\"")
      ->required();
  memb->add_option("-p", cm_p, "characteristic")->required();

  // ---- check-generation -------------------------------------------------
  auto* gen = app.add_subcommand("check-generation", "finite generation of local cohomology");
  int cg_d = 2, cg_j = 0;
  i64 cg_p = 5, cg_W = 25;
  gen->add_option("-d", cg_d)->required();
  gen->add_option("-j", cg_j);
  gen->add_option("-p", cg_p);
  gen->add_option("-W,--window", cg_W);

  // ---- probe-simplicity ---------------------------------------------------
  auto* probe = app.add_subcommand("probe-simplicity", "randomized simplicity probes");
  int ps_d = 1, ps_j = 0;
  i64 ps_p = 5, ps_W = 20, ps_trials = 50, ps_q = 0, ps_order = 0;
  u64 ps_seed = 1;
  bool ps_fgp = false;
  std::string ps_out;
  probe->add_option("-d", ps_d)->required();
  probe->add_option("-j", ps_j);
  probe->add_option("-p", ps_p);
  probe->add_option("-W,--window", ps_W);
  probe->add_option("--trials", ps_trials);
  probe->add_option("--seed", ps_seed);
  probe->add_option("-N,--order-bound", ps_order, "divided-power order bound (default p^2)");
  probe->add_flag("--induced", ps_fgp, "probe the induced (twisted-sum) module");
  probe->add_option("-q", ps_q, "group field size for --induced (must equal p)");
  probe->add_option("-o,--out", ps_out);

  // ---- check-functor -----------------------------------------------------
  auto* fun = app.add_subcommand("check-functor", "exactness, transitivity, non-isomorphy");
  int cf_d = 2;
  i64 cf_q = 2, cf_p = 5;
  fun->add_option("-d", cf_d)->required();
  fun->add_option("-q", cf_q);
  fun->add_option("-p", cf_p);

  // ---- reconcile -----------------------------------------------------------
  auto* rec = app.add_subcommand("reconcile", "halfspace section dims vs filtration predictions");
  int rc_d = 1;
  i64 rc_q = 2, rc_m = 0, rc_k = 10;
  std::string rc_format = "text", rc_out;
  rec->add_option("-d", rc_d)->required();
  rec->add_option("-q", rc_q)->required();
  rec->add_option("-m", rc_m);
  rec->add_option("-k", rc_k);
  rec->add_option("--format", rc_format, "text|csv|json");
  rec->add_option("-o,--out", rc_out);

  // ---- cosets ---------------------------------------------------------------
  auto* cos = app.add_subcommand("cosets", "export a parabolic coset table as CSV");
  int cs_d = 1;
  i64 cs_q = 2;
  std::vector<int> cs_comp;
  std::string cs_out;
  cos->add_option("-d", cs_d)->required();
  cos->add_option("-q", cs_q)->required();
  cos->add_option("-I,--composition", cs_comp, "composition of d+1, e.g. -I 1 2")->required();
  cos->add_option("-o,--out", cs_out);

  // ---- accept ----------------------------------------------------------------
  auto* acc = app.add_subcommand("accept", "run the acceptance battery");
  std::string ac_profile = "desk", ac_out;
  u64 ac_seed = 1;
  acc->add_option("--profile", ac_profile, "battery profile (desk)");
  acc->add_option("--seed", ac_seed, "probe seed");
  acc->add_option("-o,--out", ac_out, "write the JSON report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*basis) {
      validate_prime(b_p);
      if (b_p <= 3) log_note("dimension-only run at p <= 3; theorem-level checks need p > 3");
      ModuleSpace M = make_space(b_flavor, b_d, b_j, b_p, b_W, b_twist);
      write_output(b_out, M.dump_basis());
      return kExitOk;
    }

    if (*dims) {
      validate_prime_power(di_q, GaloisField::get(di_q).p());
      std::vector<i64> sec = sections_dims(di_d, di_q, di_m, di_k);
      nlohmann::ordered_json j;
      j["version"] = kVersion;
      j["d"] = di_d;
      j["q"] = di_q;
      j["m"] = di_m;
      j["sections_dims"] = sec;
      for (int jj = 0; jj <= di_d - 1; ++jj) {
        j["induced_piece_j" + std::to_string(jj)] =
            predicted_graded_dims(di_d, di_q, di_m, jj, di_k, StConvention::SecondLeviBlock);
      }
      if (di_format == "json") {
        write_output(di_out, j.dump(2) + "\n");
      } else if (di_format == "csv") {
        std::ostringstream os;
        os << "k,sections_dim\n";
        for (i64 k = 0; k <= di_k; ++k) os << k << ',' << sec[k] << "\n";
        write_output(di_out, os.str());
      } else {
        std::ostringstream os;
        os << "H^0(X, O(" << di_m << ")) pole-stage dims over F_" << di_q << ":\n";
        for (i64 k = 0; k <= di_k; ++k) os << "  k=" << k << ": " << sec[k] << "\n";
        write_output(di_out, os.str());
      }
      return kExitOk;
    }

    if (*binom) {
      validate_theorem_prime(cb_p);
      bool ok = check_binom_identity(cb_n, cb_p, cb_window);
      std::cout << "C(T y, " << cb_n << ") = T^" << cb_n << " y^[" << cb_n << "] mod " << cb_p
                << " on |m| <= " << cb_window << ": " << (ok ? "pass" : "FAIL") << "\n";
      return ok ? kExitOk : kExitCheckFailed;
    }

    if (*memb) {
      validate_theorem_prime(cm_p);
      WeylOperator op = WeylOperator::parse(cm_op, cm_p);
      std::cout << "normal form: " << op.to_string() << "\n";
      MembershipVerdict v = membership_D(op);
      if (v.status == MembershipStatus::QLevelExceeded) {
        std::cout << "q-linearity level not found within bound\n";
        return kExitCheckFailed;
      }
      std::cout << "q-linearity level: " << v.q_level << "\n";
      if (v.accepted()) {
        std::cout << "verdict: global (accepted)\n";
        return kExitOk;
      }
      std::cout << "verdict: rejected; witness input:";
      if (v.witness) {
        if (v.witness->empty()) std::cout << " 1";
        for (const auto& [r, e] : *v.witness)
          std::cout << " T(" << r.i << "," << r.j << ")^" << e;
      }
      std::cout << "\n";
      return kExitCheckFailed;
    }

    if (*gen) {
      validate_theorem_prime(cg_p);
      ModuleSpace M = ModuleSpace::reduced_local_cohomology(cg_d, cg_j, cg_p, cg_W);
      ClosureResult closure =
          generate_submodule(M, generation_operators(M), generation_seeds(M));
      i64 W = closure.verified_window;
      std::vector<Exponents> inside;
      for (const Exponents& n : closure.basis_monomials()) {
        bool ok = true;
        for (i64 v : n) ok = ok && v <= W && v >= -W;
        if (ok) inside.push_back(n);
      }
      ModuleSpace Mv = ModuleSpace::reduced_local_cohomology(cg_d, cg_j, cg_p, W);
      bool equal = inside == Mv.basis();
      std::cout << "closure rank " << closure.span.rank() << "; verified window " << W << "; "
                << inside.size() << " monomials vs " << Mv.basis().size() << " enumerated: "
                << (equal ? "exact set equality" : "MISMATCH") << "\n";
      return equal ? kExitOk : kExitCheckFailed;
    }

    if (*probe) {
      validate_theorem_prime(ps_p);
      if (ps_order == 0) ps_order = ps_p * ps_p;
      nlohmann::ordered_json config;
      config["d"] = ps_d;
      config["j"] = ps_j;
      config["p"] = ps_p;
      config["window"] = ps_W;
      config["trials"] = ps_trials;
      config["seed"] = ps_seed;
      ModuleSpace M = ModuleSpace::reduced_local_cohomology(ps_d, ps_j, ps_p, ps_W);
      std::vector<std::string> failures;
      i64 verified = 0;
      if (ps_fgp) {
        if (ps_q == 0) ps_q = ps_p;
        if (ps_q != ps_p)
          throw CLI::ValidationError("-q",
                                     "induced-module probes act group and algebra on one module; "
                                     "q must equal p");
        config["q"] = ps_q;
        FgpModule F = build_fgp_dual(M, PRep::trivial(), ps_d, ps_q,
                                     ParabolicData::from_composition(ps_d, {ps_j + 1, ps_d - ps_j}));
        FgpProbeResult r = simplicity_probe_fgp(F, ps_trials, ps_seed);
        verified = r.verified_window;
        for (i64 t : r.failed_trials) failures.push_back("trial " + std::to_string(t));
        if (!r.submodule_note.empty()) failures.push_back(r.submodule_note);
      } else {
        ProbeResult r = simplicity_probe(M, probe_operators(M, ps_order), ps_trials, ps_seed);
        verified = r.verified_window;
        for (const ProbeFailure& f : r.failures)
          failures.push_back("trial " + std::to_string(f.trial) + ": " +
                             element_to_string(f.witness));
      }
      nlohmann::ordered_json j =
          probe_json(ps_fgp ? "induced-simplicity" : "module-simplicity", config, verified,
                     ps_trials, failures);
      write_output(ps_out, j.dump(2) + "\n");
      return failures.empty() ? kExitOk : kExitCheckFailed;
    }

    if (*fun) {
      validate_theorem_prime(cf_p);
      validate_prime_power(cf_q, GaloisField::get(cf_q).p());
      ModuleSpace M = ModuleSpace::reduced_local_cohomology(cf_d, 0, cf_p, 6);
      ParabolicData B = ParabolicData::borel(cf_d);
      ParabolicData Q = cf_d >= 2 ? ParabolicData::from_composition(cf_d, {1, cf_d})
                                  : ParabolicData::full(cf_d);
      auto dims = dims_by_pole(M);
      bool exact = exactness_dims_check(induce_graded(dims, B, cf_q),
                                        induce_graded(dims, B, cf_q), {});
      TransitivityResult tr = transitivity_check(M, cf_d, cf_q, B, Q);
      FgpModule F = build_fgp_dual(M, PRep::trivial(), cf_d, cf_q,
                                   ParabolicData::from_composition(cf_d, {1, cf_d}));
      NonIsoResult ni = pairwise_noniso_check(F);
      std::cout << "exactness (degenerate triple): " << (exact ? "pass" : "FAIL") << "\n"
                << "transitivity B in " << Q.to_string() << ": dims "
                << (tr.dims_equal ? "equal" : "UNEQUAL") << ", fingerprints "
                << (tr.fingerprints_match ? "match" : "MISMATCH") << "\n"
                << "pairwise non-isomorphy of " << F.summands()
                << " summands: " << (ni.pass ? "pass" : "FAIL") << "\n";
      bool ok = exact && tr.pass() && ni.pass;
      return ok ? kExitOk : kExitCheckFailed;
    }

    if (*rec) {
      validate_prime_power(rc_q, GaloisField::get(rc_q).p());
      ReconcileReport report = reconcile_filtration(rc_d, rc_q, rc_m, rc_k);
      if (rc_format == "csv") {
        write_output(rc_out, to_csv(report));
      } else if (rc_format == "json") {
        nlohmann::ordered_json j;
        j["version"] = kVersion;
        j["d"] = report.d;
        j["q"] = report.q;
        j["m"] = report.m;
        j["winner"] = report.winner ? to_string(*report.winner) : "none";
        j["rows"] = nlohmann::ordered_json::array();
        for (const ReconcileRow& row : report.rows) {
          nlohmann::ordered_json r;
          r["k"] = row.k;
          r["lhs"] = row.lhs;
          r["rhs_conventionA"] = row.rhs_second_block;
          r["rhs_conventionB"] = row.rhs_literal;
          r["match_A"] = row.match_second_block;
          r["match_B"] = row.match_literal;
          j["rows"].push_back(r);
        }
        write_output(rc_out, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "pole-stage dims of H^0(X, O(" << rc_m << ")) over F_" << rc_q << " (d=" << rc_d
           << ") vs filtration predictions\n";
        for (const ReconcileRow& row : report.rows)
          os << "  k=" << row.k << ": sections " << row.lhs << ", prediction[" << to_string(StConvention::SecondLeviBlock)
             << "] " << row.rhs_second_block << (row.match_second_block ? " (match)" : " (off)")
             << ", prediction[" << to_string(StConvention::Literal) << "] " << row.rhs_literal
             << (row.match_literal ? " (match)" : " (off)") << "\n";
        os << "winning convention: " << (report.winner ? to_string(*report.winner) : "none")
           << "\n";
        write_output(rc_out, os.str());
      }
      bool reconciled = report.winner.has_value();
      if (rc_d > 1) return kExitOk;  // exploratory at d >= 2
      return reconciled ? kExitOk : kExitCheckFailed;
    }

    if (*cos) {
      ParabolicData P = ParabolicData::from_composition(cs_d, cs_comp);
      CosetTable table(cs_d, cs_q, P);
      write_output(cs_out, table.to_csv());
      return kExitOk;
    }

    if (*acc) {
      AcceptanceReport report = run_acceptance(ac_profile, ac_seed);
      for (const CriterionResult& r : report.results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.number << ". " << r.name << "  ["
                  << std::fixed << std::setprecision(2) << r.seconds << "s]\n      " << r.detail
                  << "\n";
      }
      std::cout << (report.all_pass() ? "all criteria pass" : "SOME CRITERIA FAIL") << "\n";
      if (!ac_out.empty()) write_output(ac_out, report.to_json());
      return report.all_pass() ? kExitOk : kExitCheckFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace dhs
